"""Command-line front end: ``fibercone <command> ...``.

Exit codes: 0 on success, 1 for bad input, 2 when a mathematical self-check
fails (InternalInconsistency).
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from math import gcd

from .depth import DepthVerdict, ProbeConfig, depth_verdict
from .errors import FiberConeError, InternalInconsistency, InvalidIdeal, ParseError
from .monomial import ExpVec, MonomialIdeal, make_ideal, monomial_str, normalize, powers
from .powers import reduction_number
from .presentation import (
    build_presentation,
    degree2_kernel_check,
    groebner_selfcheck,
    hilbert_data,
    initial_ideal,
    mono_str,
    standard_monomial_count,
)
from .semigroup import NumericalSemigroup, apery_set, cn_is_cm
from .shape import classify_shape
from .symmetric import Verdict, classify_symmetric4
from .symmetric import symmetric4 as symmetric4_ideal

SCHEMA_VERSION = 1


# -- parsing ----------------------------------------------------------------------


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, expected: str):
        if self.peek() != expected:
            found = self.peek() or "end of input"
            raise ParseError(f"expected {expected!r}, found {found!r}", self.pos)
        self.pos += 1

    def uint(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected a non-negative integer", start)
        return int(self.text[start : self.pos])

    def done(self) -> bool:
        return self.peek() == ""


def _parse_factor(sc: _Scanner) -> tuple[str, int]:
    var = sc.peek()
    if var not in ("x", "y"):
        raise ParseError(f"expected 'x' or 'y', found {var or 'end of input'!r}", sc.pos)
    sc.pos += 1
    exp = 1
    if sc.peek() == "^":
        sc.pos += 1
        exp = sc.uint()
    return var, exp


def _parse_term(sc: _Scanner) -> ExpVec:
    exps = {"x": 0, "y": 0}
    var, e = _parse_factor(sc)
    exps[var] += e
    if sc.peek() == "*":
        sc.pos += 1
        var, e = _parse_factor(sc)
        exps[var] += e
    elif sc.peek() in ("x", "y"):
        var, e = _parse_factor(sc)
        exps[var] += e
    return ExpVec(exps["x"], exps["y"])


def _parse_pairs(sc: _Scanner) -> list[ExpVec]:
    out = []
    while True:
        sc.take("(")
        a = sc.uint()
        sc.take(",")
        b = sc.uint()
        sc.take(")")
        out.append(ExpVec(a, b))
        if sc.done():
            return out
        sc.take(",")


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse ``x^10, x^9*y^2, y^10`` or ``(10,0),(9,2),(0,10)``.

    The generators are minimalized but not normalized.
    """
    sc = _Scanner(text)
    if sc.done():
        raise InvalidIdeal("empty ideal")
    if sc.peek() == "(":
        vectors = _parse_pairs(sc)
    else:
        vectors = [_parse_term(sc)]
        while not sc.done():
            sc.take(",")
            vectors.append(_parse_term(sc))
    return make_ideal(vectors)


def format_ideal(I: MonomialIdeal) -> str:
    """Text form accepted by :func:`parse_ideal`."""
    return ", ".join(monomial_str(g) if g != (0, 0) else "x^0" for g in I.gens)


# -- commands ---------------------------------------------------------------------


def _prepare(args) -> tuple[MonomialIdeal, dict]:
    raw = parse_ideal(args.ideal)
    I = raw
    shift = ExpVec(0, 0)
    if args.normalize:
        I, shift = normalize(raw)
    info = {
        "ideal": [list(p) for p in I.pairs()],
        "is_normalized": I.is_normalized,
        "normalization_applied": bool(args.normalize),
        "gcd": list(shift),
    }
    return I, info


def _base(args, I_input) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": args.command, "input": I_input}


def _config(args) -> ProbeConfig:
    return ProbeConfig(K=args.K, trials=args.trials, prime=args.prime, seed=args.seed, kmax=args.kmax)


def _shape_dict(I):
    if I.mu < 2 or not I.is_normalized:
        return None
    return classify_shape(I).to_dict()


def _certificate_list(v: DepthVerdict) -> list:
    return [{k: val for k, val in v.certificate.items() if k != "transcript"}]


def cmd_analyze(args):
    I, info = _prepare(args)
    report = _base(args, [list(p) for p in parse_ideal(args.ideal).pairs()])
    report["normalized"] = info
    if not I.is_normalized and I.mu > 1:
        raise InvalidIdeal(f"{I} is not normalized; rerun with --normalize")
    shape = _shape_dict(I)
    v = depth_verdict(I, _config(args))
    report.update(
        shape=shape,
        verdict=v.to_dict() | {"certificate": _certificate_list(v)[0]},
        certificates=_certificate_list(v),
    )
    if "transcript" in v.certificate:
        report["transcript"] = v.certificate["transcript"]
    lines = [f"ideal: {I}"]
    if shape is not None:
        kind = [k for k in ("concave", "convex") if shape[f"is_{k}"]]
        lines.append(f"shape: {' and '.join(kind) or 'neither concave nor convex'}")
        if kind:
            lines.append(f"corners: {shape['corner_indices']}")
    lines.append(f"verdict: {v.describe()}")
    return report, lines


def cmd_powers(args):
    I, info = _prepare(args)
    report = _base(args, [list(p) for p in parse_ideal(args.ideal).pairs()])
    report["normalized"] = info
    P = powers(I, args.k)
    mus = [J.mu for J in P]
    red = reduction_number(I, bound=args.k) if I.mu > 1 and I.is_normalized else None
    report["mu"] = mus
    report["reduction"] = None if red is None else red.to_dict()
    lines = [f"ideal: {I}", "k  mu(I^k)"]
    lines += [f"{k:<2} {mu}" for k, mu in enumerate(mus)]
    if red is not None:
        if red.reduction_number is None:
            k, u = red.witness
            lines.append(f"no reduction by {red.J} up to {red.search_bound}; witness {monomial_str(u)} in I^{k}")
        else:
            lines.append(f"reduction number w.r.t. {red.J}: {red.reduction_number}")
    return report, lines


def cmd_fiber(args):
    I, info = _prepare(args)
    report = _base(args, [list(p) for p in parse_ideal(args.ideal).pairs()])
    report["normalized"] = info
    shape = classify_shape(I)
    report["shape"] = shape.to_dict()
    lines = [f"ideal: {I}"]
    if shape.classified:
        P = build_presentation(I)
        init = initial_ideal(P)
        gb = groebner_selfcheck(P)
        counts = [standard_monomial_count(init, I.mu, k) for k in range(args.kmax + 1)]
        mus = [J.mu for J in powers(I, args.kmax)]
        if counts != mus:
            raise InternalInconsistency("standard monomial counts differ from mu(I^k)")
        if not degree2_kernel_check(I, P):
            raise InternalInconsistency("degree-2 kernel is not spanned by the presentation")
        report["presentation"] = P.to_dict() | {
            "relations": len(P.binomials) + len(P.monomials),
            "groebner": gb,
            "initial_ideal": [mono_str(u) for u in init],
            "standard_counts": counts,
        }
        lines.append(f"{len(P.binomials)} binomials, {len(P.monomials)} monomials, {len(init)} relations")
        lines += ["  " + s for s in P.lines()]
        lines.append(f"Gröbner basis ({P.order.value}): {gb}")
        lines.append("initial ideal: " + ", ".join(mono_str(u) for u in init))
    else:
        report["presentation"] = None
        lines.append("neither concave nor convex: no presentation available")
    H = hilbert_data(I, max(args.kmax, 3))
    report["hilbert"] = H.to_dict()
    lines.append(f"mu(I^k): {list(H.mu_sequence)}")
    lines.append(f"Hilbert numerator: {list(H.numerator) if H.numerator else 'not stabilized'}")
    return report, lines


def cmd_symmetric(args):
    r = classify_symmetric4(args.a, args.b, args.c)
    report = _base(args, [list(p) for p in symmetric4_ideal(args.a, args.b, args.c).pairs()])
    report["verdict"] = r.to_dict()
    report["certificates"] = [{"tag": r.reason}]
    lo, hi = r.interval
    lines = [
        f"ideal: {symmetric4_ideal(args.a, args.b, args.c)}",
        f"r = {r.r}, open interval [{lo}, {hi}]",
        f"verdict: {r.verdict.value} ({r.reason})",
    ]
    if r.presentation:
        lines.append("presentation: " + ", ".join(r.presentation))
    return report, lines


def cmd_semigroup(args):
    gens = [int(g) for g in args.gens.replace(",", " ").split()]
    if len(gens) < 2:
        raise InvalidIdeal("need at least two generators")
    S = NumericalSemigroup(gens)
    ok, diag = cn_is_cm(gens)
    report = {"schema_version": SCHEMA_VERSION, "command": args.command, "input": list(S.generators)}
    ap = apery_set(S, S.generators[-1])
    report["apery"] = {"a": ap.a, "elements": ap.sorted()}
    report["cn"] = {"is_cm": ok} | diag.to_dict()
    lines = [
        f"Ap({ap.a}, <{', '.join(map(str, S.generators))}>) = {ap.sorted()}",
        f"B1 = {list(diag.B1)}",
        f"B2 = {list(diag.B2)}",
        "pairs (nu, mu): " + ", ".join(f"({n}, {m})" for n, m in diag.pairs),
        f"Cavaliere-Niesi test: {'passes' if ok else 'fails'}",
    ]
    if diag.offending:
        lines.append("offending: " + ", ".join(f"({n}, {m})" for n, m in diag.offending))
    return report, lines


_CODES = {
    Verdict.CM_SMALL_C: "S",
    Verdict.CM_LARGE_C: "L",
    Verdict.CM_EQUIGEN: "E",
    Verdict.NOT_CM_EQUIGEN: "N",
    Verdict.CM_CONVEX: "V",
    Verdict.CM_CONCAVE: "C",
    Verdict.UNKNOWN_INTERVAL: "?",
}


def _scan_cell(task):
    a, b, c, probe, config = task
    r = classify_symmetric4(a, b, c)
    cell = {"a": a, "b": b, "c": c, "verdict": r.verdict.value}
    if probe and r.verdict is Verdict.UNKNOWN_INTERVAL:
        v = depth_verdict(symmetric4_ideal(a, b, c), config)
        cell["depth"] = {"kind": v.kind.value, "depth": v.depth}
    return cell


def cmd_scan(args):
    config = _config(args)
    tasks = [
        (a, b, c, args.probe, config)
        for a in range(1, args.amax + 1)
        for b in range(a + 1, args.bmax + 1)
        for c in range(b + 1, args.cmax + 1)
        if gcd(gcd(a, b), c) == 1
    ]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            cells = list(pool.map(_scan_cell, tasks, chunksize=16))
    else:
        cells = [_scan_cell(t) for t in tasks]
    unknown = [c for c in cells if c["verdict"] == Verdict.UNKNOWN_INTERVAL.value]
    report = {"schema_version": SCHEMA_VERSION, "command": "scan", "input": [args.amax, args.bmax, args.cmax]}
    report["cells"] = cells
    report["counts"] = {v.value: sum(c["verdict"] == v.value for c in cells) for v in Verdict}
    depth0 = [c for c in unknown if c.get("depth", {}).get("kind") == "Depth0"]
    report["depth0_in_interval"] = depth0
    lines = ["codes: " + " ".join(f"{code}={v.value}" for v, code in _CODES.items()) + "  ([?] = open interval)"]
    header = "a  b  | " + " ".join(f"{c:>3}" for c in range(1, args.cmax + 1))
    lines.append(header)
    by_ab = {}
    for cell in cells:
        by_ab.setdefault((cell["a"], cell["b"]), {})[cell["c"]] = cell
    for (a, b), row in by_ab.items():
        marks = []
        for c in range(1, args.cmax + 1):
            if c not in row:
                marks.append("  .")
                continue
            code = _CODES[Verdict(row[c]["verdict"])]
            marks.append("[?]" if code == "?" else f"  {code}")
        lines.append(f"{a:<2} {b:<2} | " + " ".join(marks))
    lines.append(f"{len(cells)} triples, {len(unknown)} in the open interval")
    if args.probe:
        lines.append(f"depth-0 certificates inside the interval: {len(depth0)}")
    return report, lines


COMMANDS = {
    "analyze": cmd_analyze,
    "powers": cmd_powers,
    "fiber": cmd_fiber,
    "symmetric": cmd_symmetric,
    "semigroup": cmd_semigroup,
    "scan": cmd_scan,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--out", help="write the report to this file instead of stdout")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--prime", type=int, default=1_000_003)
    common.add_argument("--kmax", type=int, default=5, help="degree bound for exact checks")
    common.add_argument("--trials", type=int, default=3)
    common.add_argument("-K", type=int, default=6, help="degree bound for the random probe")

    ideal = argparse.ArgumentParser(add_help=False)
    ideal.add_argument("ideal", help="e.g. 'x^2, x*y, y^2' or '(2,0),(1,1),(0,2)'")
    ideal.add_argument("--normalize", action="store_true", help="divide out the gcd first")

    parser = _Parser(prog="fibercone", description="Fiber cones of monomial ideals in K[x, y].")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("analyze", parents=[common, ideal], help="shape and depth verdict")
    p = sub.add_parser("powers", parents=[common, ideal], help="mu table and reduction search")
    p.add_argument("--k", type=int, default=6)
    sub.add_parser("fiber", parents=[common, ideal], help="presentation and Hilbert data")
    p = sub.add_parser("symmetric", parents=[common], help="classify (x^c, x^b y^a, x^a y^b, y^c)")
    for name in ("a", "b", "c"):
        p.add_argument(f"--{name}", type=int, required=True)
    p = sub.add_parser("semigroup", parents=[common], help="Apéry set and Cavaliere-Niesi test")
    p.add_argument("--gens", required=True, help="e.g. '3,4,7'")
    p = sub.add_parser("scan", parents=[common], help="grid of symmetric verdicts")
    p.add_argument("--amax", type=int, required=True)
    p.add_argument("--bmax", type=int, required=True)
    p.add_argument("--cmax", type=int, required=True)
    p.add_argument("--probe", action="store_true", help="run depth_verdict on open-interval cells")
    p.add_argument("--jobs", type=int, default=1)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report, lines = COMMANDS[args.command](args)
    except InternalInconsistency as exc:
        print(f"self-check failed: {exc}", file=sys.stderr)
        return 2
    except (FiberConeError, ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    text = json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) if args.json else "\n".join(lines)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
