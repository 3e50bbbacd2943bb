"""Closed-form generator sets of powers, reduction numbers, and shapes of powers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import InternalInconsistency, NotApplicable, NotASubideal
from .monomial import (
    ExpVec,
    MonomialIdeal,
    make_ideal,
    minimalize,
    multiply,
    powers,
)
from .shape import ShapeReport, classify_shape


def concave_power_gens(I: MonomialIdeal, k: int) -> tuple[ExpVec, ...]:
    """Minimal generators of I^k for a concave ideal, built from u_1 and u_m.

    The set is ``u_1^k, u_1^(k-1) u_j`` together with
    ``u_1^(k-i) u_m^(i-1) u_j`` for i = 2..k and j = 2..m.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if not classify_shape(I).is_concave:
        raise NotApplicable(f"{I} is not concave")
    c = I.gens
    first, last = c[0], c[-1]
    out = {first.scale(k)}
    out.update(first.scale(k - 1) + cj for cj in c[1:])
    for i in range(2, k + 1):
        base = first.scale(k - i) + last.scale(i - 1)
        out.update(base + cj for cj in c[1:])
    return tuple(sorted(out, reverse=True))


def convex_power_gens(I: MonomialIdeal, k: int) -> tuple[ExpVec, ...]:
    """Minimal generators of I^k for a convex ideal: the union over adjacent
    pairs of ``u_i^l u_{i+1}^(k-l)``."""
    if k < 1:
        raise ValueError("k must be positive")
    if not classify_shape(I).is_convex:
        raise NotApplicable(f"{I} is not convex")
    return tuple(sorted(set().union(*convex_power_blocks(I, k)), reverse=True))


def convex_power_blocks(I: MonomialIdeal, k: int) -> list[set[ExpVec]]:
    c = I.gens
    return [
        {c[i].scale(l) + c[i + 1].scale(k - l) for l in range(k + 1)}
        for i in range(len(c) - 1)
    ]


def pure_power_reduction(I: MonomialIdeal) -> MonomialIdeal:
    """The default reduction candidate (u_1, u_m)."""
    return make_ideal([I.gens[0], I.gens[-1]])


@dataclass(frozen=True)
class ReductionResult:
    J: MonomialIdeal
    reduction_number: Optional[int]
    search_bound: int
    witness: Optional[tuple[int, ExpVec]] = None
    # k -> lex-largest generator of I^k outside J I^(k-1), for every failing k
    witnesses: dict = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict:
        return {
            "J": self.J.pairs(),
            "reduction_number": self.reduction_number,
            "search_bound": self.search_bound,
            "witness": None
            if self.witness is None
            else [self.witness[0], list(self.witness[1])],
            "witnesses": {str(k): list(u) for k, u in sorted(self.witnesses.items())},
        }


def default_reduction_bound(I: MonomialIdeal) -> int:
    return max(8, I.gens[0].a)


def reduction_difference(
    Ik: MonomialIdeal, J: MonomialIdeal, Ik1: MonomialIdeal
) -> list[ExpVec]:
    """Generators of I^k not in J*I^(k-1), lex-descending."""
    JI = multiply(J, Ik1)
    return [u for u in Ik.gens if not JI.contains(u)]


def reduction_number(
    I: MonomialIdeal, J: Optional[MonomialIdeal] = None, bound: Optional[int] = None
) -> ReductionResult:
    """Least r <= bound with I^(r+1) = J I^r.

    Once I^(r+1) = J I^r holds it holds for all larger r, so a single failure at
    k = bound + 1 already rules out every r <= bound.
    """
    if J is None:
        J = pure_power_reduction(I)
    if bound is None:
        bound = default_reduction_bound(I)
    if bound < 1:
        raise ValueError("bound must be positive")
    if not I.contains_ideal(J):
        raise NotASubideal(f"{J} is not contained in {I}")
    P = powers(I, bound + 1)
    witnesses = {}
    for r in range(bound + 1):
        diff = reduction_difference(P[r + 1], J, P[r])
        if not diff:
            return ReductionResult(J, r, bound, None, witnesses)
        witnesses[r + 1] = diff[0]
    k = bound + 1
    return ReductionResult(J, None, bound, (k, witnesses[k]), witnesses)


def is_reduction_witness(I: MonomialIdeal, J: MonomialIdeal, k: int, u) -> bool:
    """True iff u is a minimal generator of I^k that is not in J I^(k-1)."""
    P = powers(I, k)
    u = ExpVec(*u)
    return u in P[k].gens and u in reduction_difference(P[k], J, P[k - 1])


def detect_pure_power(I: MonomialIdeal) -> Optional[tuple[int, int, int]]:
    """Return (a, b, k) with I = (x^a, y^b)^k, or None if I has inner corners."""
    report = classify_shape(I)
    if not report.classified:
        raise NotApplicable(f"{I} is neither concave nor convex")
    if report.has_inner_corner:
        return None
    k = I.mu - 1
    a1, bm = I.gens[0].a, I.gens[-1].b
    if a1 % k or bm % k:
        raise InternalInconsistency(f"{I} has no inner corner but is not a pure power")
    a, b = a1 // k, bm // k
    rebuilt = minimalize(ExpVec(a * (k - i), b * i) for i in range(k + 1))
    if rebuilt != I.gens:
        raise InternalInconsistency(f"{I} has no inner corner but is not a pure power")
    return a, b, k


def power_shape_report(I: MonomialIdeal, kmax: int) -> list[tuple[int, ShapeReport]]:
    """Shapes of I, I^2, ..., I^kmax, checked against the known power laws.

    Convex ideals have convex powers; a concave ideal with an inner corner has
    no concave power beyond the first; without inner corners every power is
    both concave and convex.
    """
    base = classify_shape(I)
    P = powers(I, kmax)
    out = []
    for k in range(1, kmax + 1):
        rep = classify_shape(P[k])
        if base.is_convex and not rep.is_convex:
            raise InternalInconsistency(f"power {k} of convex {I} is not convex")
        if base.is_concave and base.has_inner_corner and k >= 2 and rep.is_concave:
            raise InternalInconsistency(f"power {k} of {I} is unexpectedly concave")
        if base.classified and not base.has_inner_corner:
            if not (rep.is_concave and rep.is_convex):
                raise InternalInconsistency(f"power {k} of pure power {I} lost its shape")
        out.append((k, rep))
    return out
