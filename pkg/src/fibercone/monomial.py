"""Monomial ideals in K[x, y].

A monomial x^a y^b is stored as its exponent vector ``ExpVec(a, b)``; an
ideal is stored as its minimal generating set sorted lex-descending, so
``gens[0]`` has the largest x-exponent and ``gens[-1]`` the largest
y-exponent.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import ExponentOverflow, InvalidIdeal

MAX_EXPONENT = 2**63 - 1


def _checked(value: int) -> int:
    if value > MAX_EXPONENT:
        raise ExponentOverflow(f"exponent {value} exceeds 64-bit range")
    return value


class ExpVec(NamedTuple):
    """Exponent vector (a, b) of the monomial x^a y^b."""

    a: int
    b: int

    def __add__(self, other):  # type: ignore[override]
        return ExpVec(_checked(self.a + other.a), _checked(self.b + other.b))

    def scale(self, k: int) -> "ExpVec":
        return ExpVec(_checked(self.a * k), _checked(self.b * k))

    def divides(self, other: "ExpVec") -> bool:
        return self.a <= other.a and self.b <= other.b

    def strictly_divides(self, other: "ExpVec") -> bool:
        return self.divides(other) and self != other

    @property
    def degree(self) -> int:
        return self.a + self.b

    def __str__(self):
        return monomial_str(self)


def monomial_str(u: ExpVec) -> str:
    parts = []
    for var, e in (("x", u.a), ("y", u.b)):
        if e == 1:
            parts.append(var)
        elif e > 1:
            parts.append(f"{var}^{e}")
    return "*".join(parts) or "1"


def _expvec(v) -> ExpVec:
    a, b = v
    if not (isinstance(a, int) and isinstance(b, int)):
        raise InvalidIdeal(f"exponents must be integers, got {v!r}")
    if a < 0 or b < 0:
        raise InvalidIdeal(f"negative exponent in {v!r}")
    _checked(a)
    _checked(b)
    return ExpVec(a, b)


def minimalize(vectors: Iterable[ExpVec]) -> tuple[ExpVec, ...]:
    """Minimal generators of the ideal spanned by ``vectors``, lex-descending."""
    kept = []
    min_b = None
    # Scanning by increasing x-exponent, a vector is redundant exactly when some
    # earlier vector already has y-exponent <= its own.
    for v in sorted(set(vectors)):
        if min_b is None or v.b < min_b:
            kept.append(v)
            min_b = v.b
    kept.reverse()
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    Use :func:`make_ideal` to build one from arbitrary generators; the
    constructor only accepts an already minimal, lex-descending tuple.
    """

    gens: tuple[ExpVec, ...]

    def __post_init__(self):
        gens = tuple(_expvec(g) for g in self.gens)
        if not gens:
            raise InvalidIdeal("an ideal needs at least one generator")
        for u, v in zip(gens, gens[1:]):
            if not (u.a > v.a and u.b < v.b):
                raise InvalidIdeal(
                    "generators must be minimal and sorted lex-descending: "
                    f"{u} before {v}"
                )
        object.__setattr__(self, "gens", gens)

    @property
    def mu(self) -> int:
        """Number of minimal generators."""
        return len(self.gens)

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __getitem__(self, i):
        return self.gens[i]

    @property
    def is_normalized(self) -> bool:
        return self.gens[-1].a == 0 and self.gens[0].b == 0

    @property
    def is_unit(self) -> bool:
        return self.gens == (ExpVec(0, 0),)

    def contains(self, u: ExpVec) -> bool:
        return any(g.divides(u) for g in self.gens)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def __str__(self):
        return "(" + ", ".join(monomial_str(g) for g in self.gens) + ")"

    def pairs(self) -> list[tuple[int, int]]:
        return [(g.a, g.b) for g in self.gens]


def make_ideal(raw: Iterable) -> MonomialIdeal:
    vectors = [_expvec(v) for v in raw]
    if not vectors:
        raise InvalidIdeal("empty generating set")
    return MonomialIdeal(minimalize(vectors))


def unit_ideal() -> MonomialIdeal:
    return MonomialIdeal((ExpVec(0, 0),))


def normalize(I: MonomialIdeal) -> tuple[MonomialIdeal, ExpVec]:
    """Divide out the gcd of the generators.

    Returns ``(I', g)`` with ``I = x^g.a y^g.b * I'``.
    """
    g = ExpVec(I.gens[-1].a, I.gens[0].b)
    if g == (0, 0):
        return I, g
    return MonomialIdeal(tuple(ExpVec(u.a - g.a, u.b - g.b) for u in I.gens)), g


def multiply(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(minimalize(u + v for u in I.gens for v in J.gens))


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise ValueError("power exponent must be nonnegative")
    result = unit_ideal()
    for _ in range(k):
        result = multiply(result, I)
    return result


def powers(I: MonomialIdeal, kmax: int) -> list[MonomialIdeal]:
    """``[I^0, I^1, ..., I^kmax]`` computed incrementally."""
    out = [unit_ideal()]
    for _ in range(kmax):
        out.append(multiply(out[-1], I))
    return out


def in_m_times(J: MonomialIdeal, u: ExpVec) -> bool:
    """True iff u lies in m*J, i.e. some generator of J strictly divides u."""
    return any(g.strictly_divides(u) for g in J.gens)


def member_of_m_times_power(I: MonomialIdeal, k: int, u) -> bool:
    if k < 1:
        raise ValueError("k must be at least 1")
    return in_m_times(power(I, k), ExpVec(*u))


def is_symmetric(I: MonomialIdeal) -> bool:
    """True iff the generator set is invariant under swapping x and y."""
    return [(g.b, g.a) for g in reversed(I.gens)] == I.pairs()


def scale_ideal(I: MonomialIdeal, d: int) -> MonomialIdeal:
    """Substitute x -> x^d, y -> y^d."""
    return MonomialIdeal(tuple(g.scale(d) for g in I.gens))
