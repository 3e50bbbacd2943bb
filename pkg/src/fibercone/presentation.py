"""Quadratic presentations of fiber cones of concave and convex ideals.

Monomials in z_1..z_m are exponent tuples of length m (position i-1 holds
the exponent of z_i). Polynomials in the Gröbner engine are dicts mapping
such tuples to integer coefficients; every generator is monic, so
top-reduction never leaves the integers.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Optional

from .errors import BoundTooSmall, InternalInconsistency, NotApplicable, ParseError
from .monomial import MonomialIdeal, in_m_times, power, powers
from .shape import classify_shape

ZMonomial = tuple  # tuple[int, ...] of length m


class TermOrder(str, enum.Enum):
    REVLEX = "revlex"  # degree reverse lexicographic, z_1 > ... > z_m
    LEX = "lex"  # lexicographic, z_1 > ... > z_m

    def key(self, mono: ZMonomial):
        if self is TermOrder.LEX:
            return tuple(mono)
        return (sum(mono), tuple(-e for e in reversed(mono)))


@dataclass(frozen=True)
class ZBinomial:
    """``lead - trail`` with lead > trail in the presentation's term order."""

    lead: ZMonomial
    trail: ZMonomial

    def as_poly(self) -> dict:
        return {self.lead: 1, self.trail: -1}


@dataclass(frozen=True)
class PresentationIdeal:
    m: int
    order: TermOrder
    binomials: tuple[ZBinomial, ...]
    monomials: tuple[ZMonomial, ...]

    def generators(self) -> list[dict]:
        return [b.as_poly() for b in self.binomials] + [{u: 1} for u in self.monomials]

    def lines(self) -> list[str]:
        return [binomial_str(b) for b in self.binomials] + [
            mono_str(u) for u in self.monomials
        ]

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "order": self.order.value,
            "binomials": [binomial_str(b) for b in self.binomials],
            "monomials": [mono_str(u) for u in self.monomials],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "PresentationIdeal":
        m = d["m"]
        order = TermOrder(d["order"])
        binomials = []
        for text in d["binomials"]:
            lead, trail = parse_binomial(text, m)
            binomials.append(ZBinomial(lead, trail))
        monomials = tuple(parse_zmonomial(t, m) for t in d["monomials"])
        return cls(m, order, tuple(binomials), monomials)


def zmono(m: int, *indices: int) -> ZMonomial:
    """Monomial z_{i_1} z_{i_2} ... from 1-based indices."""
    e = [0] * m
    for i in indices:
        e[i - 1] += 1
    return tuple(e)


def mono_str(u: ZMonomial) -> str:
    parts = []
    for i, e in enumerate(u, start=1):
        if e == 1:
            parts.append(f"z{i}")
        elif e > 1:
            parts.append(f"z{i}^{e}")
    return "*".join(parts) or "1"


def binomial_str(f: ZBinomial) -> str:
    return f"{mono_str(f.lead)} - {mono_str(f.trail)}"


_ZFACTOR = re.compile(r"z(\d+)(?:\^(\d+))?")


def parse_zmonomial(text: str, m: int) -> ZMonomial:
    text = text.replace(" ", "")
    e = [0] * m
    if text == "1":
        return tuple(e)
    for piece in text.split("*"):
        match = _ZFACTOR.fullmatch(piece)
        if not match:
            raise ParseError(f"bad z-monomial factor {piece!r}")
        i = int(match.group(1))
        if not 1 <= i <= m:
            raise ParseError(f"variable z{i} outside z1..z{m}")
        e[i - 1] += int(match.group(2) or 1)
    return tuple(e)


def parse_binomial(text: str, m: int) -> tuple[ZMonomial, ZMonomial]:
    lead, sep, trail = text.partition(" - ")
    if not sep:
        raise ParseError(f"binomial {text!r} lacks ' - '")
    return parse_zmonomial(lead, m), parse_zmonomial(trail, m)


# -- Gröbner engine -----------------------------------------------------------


def _divides(u, v) -> bool:
    return all(a <= b for a, b in zip(u, v))


def _lcm(u, v):
    return tuple(max(a, b) for a, b in zip(u, v))


def _quot(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _shift(poly: dict, by) -> dict:
    return {tuple(a + b for a, b in zip(u, by)): c for u, c in poly.items()}


def _axpy(p: dict, c: int, q: dict) -> dict:
    """p + c*q with zero terms dropped."""
    out = dict(p)
    for u, a in q.items():
        v = out.get(u, 0) + c * a
        if v:
            out[u] = v
        else:
            out.pop(u, None)
    return out


def leading_term(poly: dict, order: TermOrder):
    return max(poly, key=order.key)


def s_polynomial(f: dict, g: dict, order: TermOrder) -> dict:
    lf, lg = leading_term(f, order), leading_term(g, order)
    L = _lcm(lf, lg)
    sf = _shift(f, _quot(L, lf))
    sg = _shift(g, _quot(L, lg))
    # both leading coefficients are 1
    return _axpy(sf, -1, sg)


def top_reduce(poly: dict, basis: list[dict], order: TermOrder) -> dict:
    """Reduce leading terms against ``basis`` until none is divisible."""
    leads = [(leading_term(g, order), g) for g in basis]
    while poly:
        lt = leading_term(poly, order)
        for lg, g in leads:
            if _divides(lg, lt):
                poly = _axpy(poly, -poly[lt], _shift(g, _quot(lt, lg)))
                break
        else:
            return poly
    return poly


def is_groebner_basis(basis: list[dict], order: TermOrder) -> bool:
    """Buchberger's criterion: every S-polynomial top-reduces to zero."""
    for f, g in combinations(basis, 2):
        s = s_polynomial(f, g, order)
        if s and top_reduce(s, basis, order):
            return False
    return True


# -- presentation ---------------------------------------------------------------


def relation_membership_test(I: MonomialIdeal, i: int, j: int, I2: Optional[MonomialIdeal] = None) -> bool:
    """True iff z_i z_j maps to zero in the fiber cone, i.e. u_i u_j is in m*I^2."""
    m = I.mu
    if not (1 <= i <= m and 1 <= j <= m):
        raise IndexError(f"indices ({i}, {j}) outside 1..{m}")
    if I2 is None:
        I2 = power(I, 2)
    return in_m_times(I2, I.gens[i - 1] + I.gens[j - 1])


def segment_minors(corners, m: int) -> list[tuple[ZMonomial, ZMonomial]]:
    """2-minors of the segment matrices as (first term, second term) pairs.

    For a segment from corner p to corner q and 1 <= r < s <= q - p the minor
    is ``z_{p+r-1} z_{p+s} - z_{p+s-1} z_{p+r}``; ordering is segment-major,
    then (r, s) lexicographic.
    """
    out = []
    for p, q in zip(corners, corners[1:]):
        n = q - p
        for r, s in combinations(range(1, n + 1), 2):
            out.append((zmono(m, p + r - 1, p + s), zmono(m, p + s - 1, p + r)))
    return out


def build_presentation(I: MonomialIdeal) -> PresentationIdeal:
    report = classify_shape(I)
    if not report.classified:
        raise NotApplicable(f"{I} is neither concave nor convex")
    m = I.mu
    order = TermOrder.REVLEX if report.is_concave else TermOrder.LEX
    binomials = []
    for t1, t2 in segment_minors(report.corner_indices, m):
        if t1 == t2:
            continue
        lead, trail = (t1, t2) if order.key(t1) > order.key(t2) else (t2, t1)
        binomials.append(ZBinomial(lead, trail))
    leads = {b.lead for b in binomials}
    if report.is_concave:
        candidates = [(i, j) for i in range(2, m) for j in range(i, m)]
    else:
        candidates = [(i, j) for i in range(1, m + 1) for j in range(i + 2, m + 1)]
    I2 = power(I, 2)
    monomials = []
    for i, j in candidates:
        u = zmono(m, i, j)
        if u in leads:
            continue
        if not relation_membership_test(I, i, j, I2):
            raise InternalInconsistency(f"z{i}*z{j} is not a relation of F({I})")
        monomials.append(u)
    return PresentationIdeal(m, order, tuple(binomials), tuple(monomials))


def groebner_selfcheck(P: PresentationIdeal) -> bool:
    return is_groebner_basis(P.generators(), P.order)


def predicted_initial_ideal(m: int, order: TermOrder) -> set:
    if order is TermOrder.REVLEX:
        return {zmono(m, i, j) for i in range(2, m) for j in range(i, m)}
    return {zmono(m, i, j) for i in range(1, m + 1) for j in range(i + 2, m + 1)}


def initial_ideal(P: PresentationIdeal, check: bool = True) -> list[ZMonomial]:
    """Leading terms of the presentation, sorted descending in its term order."""
    if check and not groebner_selfcheck(P):
        raise InternalInconsistency("presentation generators are not a Gröbner basis")
    leads = {b.lead for b in P.binomials} | set(P.monomials)
    if leads != predicted_initial_ideal(P.m, P.order):
        raise InternalInconsistency("initial ideal differs from the predicted one")
    return sorted(leads, key=P.order.key, reverse=True)


def zmonomials_of_degree(m: int, k: int):
    for idx in combinations_with_replacement(range(1, m + 1), k):
        yield zmono(m, *idx)


def standard_monomial_count(initial: Iterable[ZMonomial], m: int, k: int) -> int:
    """Number of degree-k monomials in z_1..z_m outside the monomial ideal."""
    gens = list(initial)
    return sum(
        1 for u in zmonomials_of_degree(m, k) if not any(_divides(g, u) for g in gens)
    )


def degree2_kernel_check(I: MonomialIdeal, P: PresentationIdeal) -> bool:
    """The degree-2 part of the kernel of z -> F(I) is spanned by P."""
    from .linalg import rank_mod_p

    m = I.mu
    I2 = power(I, 2)
    image_of = {}
    for u in zmonomials_of_degree(m, 2):
        idx = [i for i, e in enumerate(u) for _ in range(e)]
        w = I.gens[idx[0]] + I.gens[idx[1]]
        image_of[u] = None if in_m_times(I2, w) else w
    for f in P.generators():
        images = {}
        for u, c in f.items():
            if image_of[u] is not None:
                images[image_of[u]] = images.get(image_of[u], 0) + c
        if any(images.values()):
            return False
    monos = sorted(image_of)
    col = {u: n for n, u in enumerate(monos)}
    rows = []
    for f in P.generators():
        row = [0] * len(monos)
        for u, c in f.items():
            row[col[u]] = c
        rows.append(row)
    kernel_dim = len(monos) - I2.mu
    return rank_mod_p(rows, 1_000_003) == kernel_dim


# -- Hilbert data ----------------------------------------------------------------


@dataclass(frozen=True)
class HilbertData:
    """mu(I^k) for k = 0..K and, when it stabilizes, the numerator p with
    Hilb(t) = p(t) / (1 - t)^2."""

    mu_sequence: tuple[int, ...]
    numerator: Optional[tuple[int, ...]]

    def to_dict(self) -> dict:
        return {
            "mu_sequence": list(self.mu_sequence),
            "numerator": None if self.numerator is None else list(self.numerator),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "HilbertData":
        num = d["numerator"]
        return cls(tuple(d["mu_sequence"]), None if num is None else tuple(num))


def second_difference_coefficients(seq) -> list[int]:
    """Coefficients of (1 - t)^2 * sum seq[k] t^k, truncated at len(seq)."""
    out = []
    for k in range(len(seq)):
        v = seq[k]
        if k >= 1:
            v -= 2 * seq[k - 1]
        if k >= 2:
            v += seq[k - 2]
        out.append(v)
    return out


def expand_over_one_minus_t_squared(numerator, K: int) -> list[int]:
    """Coefficients t^0..t^K of numerator(t) / (1 - t)^2."""
    return [
        sum(p * (k - i + 1) for i, p in enumerate(numerator) if i <= k)
        for k in range(K + 1)
    ]


def fit_numerator(mu_sequence) -> Optional[tuple[int, ...]]:
    """Numerator if the second differences vanish on the last three degrees."""
    K = len(mu_sequence) - 1
    p = second_difference_coefficients(mu_sequence)
    nonzero = [i for i, v in enumerate(p) if v]
    d = nonzero[-1] if nonzero else 0
    if d > K - 3:
        return None
    return tuple(p[: d + 1])


def hilbert_data(I: MonomialIdeal, K: int) -> HilbertData:
    if K < 3:
        raise BoundTooSmall("need K >= 3 to detect stabilization")
    mus = tuple(J.mu for J in powers(I, K))
    numerator = fit_numerator(mus)
    if numerator is not None:
        assert expand_over_one_minus_t_squared(numerator, K) == list(mus)
    if I.mu >= 2 and I.is_normalized and classify_shape(I).classified:
        expected = (1, I.mu - 2) if I.mu > 2 else (1,)
        if numerator != expected:
            raise InternalInconsistency(
                f"Hilbert numerator {numerator} of {I}, expected {expected}"
            )
    return HilbertData(mus, numerator)
