"""Concave/convex classification of exponent sequences.

Vector inequalities are componentwise; ``u > v`` means ``u >= v`` and
``u != v``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInconsistency, NotApplicable, NotNormalized
from .monomial import MonomialIdeal


def vec_ge(u, v) -> bool:
    return u[0] >= v[0] and u[1] >= v[1]


def vec_gt(u, v) -> bool:
    return vec_ge(u, v) and tuple(u) != tuple(v)


def vsum(u, v):
    return (u[0] + v[0], u[1] + v[1])


@dataclass(frozen=True)
class ShapeReport:
    is_concave: bool
    is_convex: bool
    corner_indices: tuple[int, ...]  # 1-based
    segments: tuple[tuple[int, int], ...]
    has_inner_corner: bool

    @property
    def classified(self) -> bool:
        return self.is_concave or self.is_convex

    def to_dict(self) -> dict:
        return {
            "is_concave": self.is_concave,
            "is_convex": self.is_convex,
            "corner_indices": list(self.corner_indices),
            "segments": [list(s) for s in self.segments],
            "has_inner_corner": self.has_inner_corner,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ShapeReport":
        return cls(
            is_concave=d["is_concave"],
            is_convex=d["is_convex"],
            corner_indices=tuple(d["corner_indices"]),
            segments=tuple(tuple(s) for s in d["segments"]),
            has_inner_corner=d["has_inner_corner"],
        )


def second_differences(vectors) -> list[tuple[int, int]]:
    """``2c_i - c_{i-1} - c_{i+1}`` for the interior indices i = 2..m-1."""
    return [
        (2 * c[0] - p[0] - n[0], 2 * c[1] - p[1] - n[1])
        for p, c, n in zip(vectors, vectors[1:], vectors[2:])
    ]


def classify_sequence(vectors) -> ShapeReport:
    """Classify an arbitrary sequence of integer vectors (no ideal checks)."""
    m = len(vectors)
    diffs = second_differences(vectors)
    concave = all(vec_ge(d, (0, 0)) for d in diffs)
    convex = all(vec_ge((0, 0), d) for d in diffs)
    if concave and convex:
        corners = (1, m)
    elif concave or convex:
        inner = [i + 2 for i, d in enumerate(diffs) if d != (0, 0)]
        corners = (1, *inner, m)
    else:
        corners = (1, m)
    if concave or convex:
        segments = tuple(zip(corners, corners[1:]))
    else:
        segments = ()
    return ShapeReport(
        is_concave=concave,
        is_convex=convex,
        corner_indices=corners,
        segments=segments,
        has_inner_corner=(concave or convex) and len(corners) > 2,
    )


def _check_input(I: MonomialIdeal):
    if I.mu < 2:
        raise NotApplicable("shape classification needs at least two generators")
    if not I.is_normalized:
        raise NotNormalized(f"{I} has a common monomial factor; normalize first")


def classify_shape(I: MonomialIdeal) -> ShapeReport:
    _check_input(I)
    return classify_sequence(I.gens)


def _require_classified(report: ShapeReport):
    if not report.classified:
        raise NotApplicable("ideal is neither concave nor convex")


def segment_membership(I: MonomialIdeal, report: ShapeReport) -> dict[int, tuple[int, int]]:
    """Map each 1-based generator index to the corner segment containing it.

    A corner shared by two segments is assigned to the earlier one.
    """
    _require_classified(report)
    c = I.gens
    out = {}
    for lo, hi in report.segments:
        p, q = c[lo - 1], c[hi - 1]
        for j in range(lo, hi + 1):
            if j in out:
                continue
            v = c[j - 1]
            cross = (v.a - p.a) * (q.b - p.b) - (v.b - p.b) * (q.a - p.a)
            if cross != 0:
                raise InternalInconsistency(
                    f"generator {j} is not collinear with segment ({lo}, {hi})"
                )
            out[j] = (lo, hi)
    if sorted(out) != list(range(1, I.mu + 1)):
        raise InternalInconsistency("segments do not cover every generator")
    return out


def check_equidistance(I: MonomialIdeal, report: ShapeReport) -> bool:
    _require_classified(report)
    c = I.gens
    for lo, hi in report.segments:
        steps = {(c[j].a - c[j - 1].a, c[j].b - c[j - 1].b) for j in range(lo, hi)}
        if len(steps) != 1:
            return False
    return True


def segment_slopes_distinct(I: MonomialIdeal, report: ShapeReport) -> bool:
    """Consecutive segments never share a direction (corners are genuine)."""
    _require_classified(report)
    c = I.gens
    dirs = []
    for lo, hi in report.segments:
        dirs.append((c[hi - 1].a - c[lo - 1].a, c[hi - 1].b - c[lo - 1].b))
    for d, e in zip(dirs, dirs[1:]):
        if d[0] * e[1] - d[1] * e[0] == 0:
            return False
    return True
