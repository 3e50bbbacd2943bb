"""Symmetric ideals and the classification of 4-generated ones.

The 4-generated symmetric ideal attached to 0 < a < b < c is
(x^c, x^b y^a, x^a y^b, y^c).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import reduce
from itertools import product
from math import gcd
from typing import Optional

from .errors import InternalInconsistency, InvalidSpec, NotApplicable
from .monomial import ExpVec, MonomialIdeal, make_ideal, powers
from .presentation import mono_str, standard_monomial_count, zmono
from .semigroup import cn_is_cm
from .shape import classify_shape


def make_symmetric(a_sequence) -> MonomialIdeal:
    seq = [int(v) for v in a_sequence]
    if len(seq) < 2:
        raise InvalidSpec("a symmetric ideal needs at least two generators")
    if seq[-1] != 0:
        raise InvalidSpec(f"a-sequence {seq} must end in 0")
    if any(u <= v for u, v in zip(seq, seq[1:])):
        raise InvalidSpec(f"a-sequence {seq} is not strictly decreasing")
    m = len(seq)
    return MonomialIdeal(tuple(ExpVec(seq[i], seq[m - 1 - i]) for i in range(m)))


def tiny_squares_sequence(m: int) -> list[int]:
    """5m, 4m, 4m-1, ..., 3m+4, m, 0 (exactly m entries)."""
    if m < 5:
        raise InvalidSpec("the family is defined for m >= 5")
    return [5 * m, *range(4 * m, 3 * m + 3, -1), m, 0]


def tiny_squares_ideal(m: int) -> MonomialIdeal:
    """Symmetric ideal whose square is generated in the single degree 10m."""
    return make_symmetric(tiny_squares_sequence(m))


def symmetric4(a: int, b: int, c: int) -> MonomialIdeal:
    return make_symmetric((c, b, a, 0))


class Verdict(str, enum.Enum):
    CM_CONCAVE = "CM_Concave"
    CM_CONVEX = "CM_Convex"
    CM_SMALL_C = "CM_SmallC"
    CM_LARGE_C = "CM_LargeC"
    CM_EQUIGEN = "CM_Equigen"
    NOT_CM_EQUIGEN = "NotCM_Equigen"
    UNKNOWN_INTERVAL = "UnknownInterval"

    @property
    def is_cm(self) -> Optional[bool]:
        if self is Verdict.UNKNOWN_INTERVAL:
            return None
        return self is not Verdict.NOT_CM_EQUIGEN


REASONS = {
    Verdict.CM_CONCAVE: "concave ideal: quadratic Gröbner basis with in(L) = (z2, z3)^2",
    Verdict.CM_CONVEX: "convex ideal: squarefree quadratic Gröbner basis",
    Verdict.CM_SMALL_C: "2a >= c: F(I) = K[z1..z4]/(z2*z3, z2^2, z3^2)",
    Verdict.CM_LARGE_C: "c > r(b-a)+a: F(I) = K[z1..z4]/(z1*z3^(r-1), z2^(r-1)*z4, z1*z4)",
    Verdict.CM_EQUIGEN: "c = a+b, b = a+1: Apéry-set comparison holds",
    Verdict.NOT_CM_EQUIGEN: "c = a+b, b != a+1: Apéry-set comparison fails",
    Verdict.UNKNOWN_INTERVAL: "c lies in [2a+1, r(b-a)+a]; no certificate available",
}


@dataclass(frozen=True)
class Symmetric4Report:
    a: int
    b: int
    c: int
    r: int
    verdict: Verdict
    interval: tuple[int, int]
    presentation: Optional[tuple[str, ...]] = None
    # gcd divided out of a shifted triple before classifying; 1 otherwise
    scale: int = 1
    cn_pairs: Optional[tuple[tuple[int, int], ...]] = field(default=None, compare=False)

    @property
    def reason(self) -> str:
        return REASONS[self.verdict]

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "r": self.r,
            "verdict": self.verdict.value,
            "interval": list(self.interval),
            "presentation": None if self.presentation is None else list(self.presentation),
            "scale": self.scale,
            "reason": self.reason,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Symmetric4Report":
        pres = d.get("presentation")
        return cls(
            a=d["a"],
            b=d["b"],
            c=d["c"],
            r=d["r"],
            verdict=Verdict(d["verdict"]),
            interval=tuple(d["interval"]),
            presentation=None if pres is None else tuple(pres),
            scale=d.get("scale", 1),
        )


def _validate_triple(a, b, c):
    if not (0 < a < b < c):
        raise InvalidSpec(f"need 0 < a < b < c, got ({a}, {b}, {c})")
    if gcd(gcd(a, b), c) != 1:
        raise InvalidSpec(f"gcd({a}, {b}, {c}) != 1")


def r_value(a: int, b: int) -> int:
    """r = ceil(b / (b - a))."""
    return -(-b // (b - a))


def small_c_relations() -> list[tuple]:
    return [zmono(4, 2, 3), zmono(4, 2, 2), zmono(4, 3, 3)]


def large_c_relations(r: int) -> list[tuple]:
    return [
        zmono(4, 1, *([3] * (r - 1))),
        zmono(4, *([2] * (r - 1)), 4),
        zmono(4, 1, 4),
    ]


def verify_monomial_presentation(I: MonomialIdeal, relations, kmax: int = 6) -> bool:
    """Degree-k standard monomials of the monomial relations count mu(I^k)."""
    mus = [J.mu for J in powers(I, kmax)]
    return all(
        standard_monomial_count(relations, I.mu, k) == mus[k] for k in range(kmax + 1)
    )


def classify_symmetric4(a: int, b: int, c: int, verify: bool = True) -> Symmetric4Report:
    """Classify the 4-generated symmetric ideal for (a, b, c).

    Rules apply in order: equigenerated (c = a+b), small c (2a >= c), large c
    (c > r(b-a)+a), concave/convex, otherwise the open interval. With
    ``verify`` the attached certificates are recomputed.
    """
    _validate_triple(a, b, c)
    r = r_value(a, b)
    interval = (2 * a + 1, r * (b - a) + a)
    I = symmetric4(a, b, c)
    presentation = None
    cn_pairs = None
    if c == a + b:
        verdict = Verdict.CM_EQUIGEN if b == a + 1 else Verdict.NOT_CM_EQUIGEN
        ok, diag = cn_is_cm((a, b, c))
        cn_pairs = diag.pairs
        if ok != (b == a + 1):
            raise InternalInconsistency(f"Apéry comparison disagrees for ({a}, {b}, {c})")
    elif 2 * a >= c:
        verdict = Verdict.CM_SMALL_C
        rels = small_c_relations()
        presentation = tuple(mono_str(u) for u in rels)
        if verify and not verify_monomial_presentation(I, rels):
            raise InternalInconsistency(f"small-c presentation fails for ({a}, {b}, {c})")
    elif c > interval[1]:
        verdict = Verdict.CM_LARGE_C
        rels = large_c_relations(r)
        presentation = tuple(mono_str(u) for u in rels)
        if verify and not verify_monomial_presentation(I, rels):
            raise InternalInconsistency(f"large-c presentation fails for ({a}, {b}, {c})")
    elif 2 * a <= b and 2 * b <= a + c:
        verdict = Verdict.CM_CONVEX
    elif 2 * a >= b and 2 * b >= a + c:
        verdict = Verdict.CM_CONCAVE
    else:
        verdict = Verdict.UNKNOWN_INTERVAL
    if verify and verdict in (Verdict.CM_CONVEX, Verdict.CM_CONCAVE):
        shape = classify_shape(I)
        if not (shape.is_convex if verdict is Verdict.CM_CONVEX else shape.is_concave):
            raise InternalInconsistency(f"shape of ({a}, {b}, {c}) contradicts {verdict.value}")
    return Symmetric4Report(a, b, c, r, verdict, interval, presentation, 1, cn_pairs)


def shifted_family_check(a: int, b: int, c: int, m: int, verify: bool = True) -> Symmetric4Report:
    """Classify the shifted triple (a+m, b+m, c+m).

    A common factor d of the shifted triple is divided out first: substituting
    x -> x^d, y -> y^d does not change the fiber cone. The report records d in
    ``scale``.
    """
    if not (0 < a < b < c) or m < 0:
        raise InvalidSpec(f"need 0 < a < b < c and m >= 0, got ({a}, {b}, {c}), m={m}")
    triple = (a + m, b + m, c + m)
    d = reduce(gcd, triple)
    report = classify_symmetric4(*(t // d for t in triple), verify=verify)
    if m >= c - 2 * a and report.verdict is not Verdict.CM_SMALL_C:
        raise InternalInconsistency(
            f"shift of ({a}, {b}, {c}) by {m} should be small-c, got {report.verdict.value}"
        )
    return Symmetric4Report(
        report.a, report.b, report.c, report.r, report.verdict, report.interval,
        report.presentation, d, report.cn_pairs,
    )


def large_c_generator_sets(a: int, b: int, c: int, k: int):
    """The two generator families of I^k for large c.

    Products u1^k1 u2^k2 u3^k3 with k1 = 0 or k3 <= r-2, and the mirror family
    u2^k2 u3^k3 u4^k4 with k4 = 0 or k2 <= r-2. The bound r-2 is forced by the
    relation z1*z3^(r-1): u1 u3^(r-1) already lies in m*I^r.
    """
    r = r_value(a, b)
    u1, u2, u3, u4 = symmetric4(a, b, c).gens
    first, second = set(), set()
    for k1, k2 in product(range(k + 1), repeat=2):
        k3 = k - k1 - k2
        if k3 < 0:
            continue
        if k1 == 0 or k3 < r - 1:
            first.add(u1.scale(k1) + u2.scale(k2) + u3.scale(k3))
    for k4, k3 in product(range(k + 1), repeat=2):
        k2 = k - k4 - k3
        if k2 < 0:
            continue
        if k4 == 0 or k2 < r - 1:
            second.add(u2.scale(k2) + u3.scale(k3) + u4.scale(k4))
    return first, second


def verify_35b_generators(a: int, b: int, c: int, k: int) -> bool:
    """Check that G(I^k) is the union of the two large-c families and that the
    families overlap exactly in G((u2, u3)^k)."""
    if classify_symmetric4(a, b, c, verify=False).verdict is not Verdict.CM_LARGE_C:
        raise NotApplicable(f"({a}, {b}, {c}) is not in the large-c range")
    if not 1 <= k <= 6:
        raise NotApplicable("k must lie in 1..6")
    I = symmetric4(a, b, c)
    u1, u2, u3, u4 = I.gens
    first, second = large_c_generator_sets(a, b, c, k)
    Gk = set(powers(I, k)[k].gens)
    G1 = set(powers(make_ideal([u1, u2, u3]), k)[k].gens)
    G2 = set(powers(make_ideal([u2, u3, u4]), k)[k].gens)
    GM = {u2.scale(l) + u3.scale(k - l) for l in range(k + 1)}
    return first == G1 and second == G2 and first | second == Gk and first & second == GM
