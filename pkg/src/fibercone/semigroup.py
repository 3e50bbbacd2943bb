"""Numerical semigroups, Apéry sets and the Cavaliere-Niesi test."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import Iterable

from .errors import InfiniteApery, InvalidSpec, NotInSemigroup


@dataclass(frozen=True)
class NumericalSemigroup:
    generators: tuple[int, ...]

    def __init__(self, generators: Iterable[int]):
        gens = tuple(sorted(set(int(g) for g in generators)))
        if not gens or gens[0] <= 0:
            raise InvalidSpec("semigroup generators must be positive and nonempty")
        object.__setattr__(self, "generators", gens)

    @property
    def gcd(self) -> int:
        return reduce(gcd, self.generators)

    def __contains__(self, n: int) -> bool:
        return ns_contains(self, n)


def ns_contains(S: NumericalSemigroup, n: int) -> bool:
    if n < 0:
        return False
    reachable = bytearray(n + 1)
    reachable[0] = 1
    for v in range(1, n + 1):
        reachable[v] = any(g <= v and reachable[v - g] for g in S.generators)
    return bool(reachable[n])


@dataclass(frozen=True)
class AperyResult:
    a: int
    elements: frozenset[int]

    def sorted(self) -> list[int]:
        return sorted(self.elements)


def apery_set(S: NumericalSemigroup, a: int) -> AperyResult:
    """Ap(a, S) as the least element of S in each residue class mod a.

    The least elements are shortest paths in the graph on Z/a whose edges add
    a generator, so Dijkstra finds them without any search bound.
    """
    if S.gcd != 1:
        raise InfiniteApery(f"generators {S.generators} have gcd {S.gcd}")
    if a <= 0 or a not in S:
        raise NotInSemigroup(f"{a} is not in the semigroup {S.generators}")
    best = [None] * a
    best[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if d != best[r]:
            continue
        for g in S.generators:
            nd, nr = d + g, (r + g) % a
            if best[nr] is None or nd < best[nr]:
                best[nr] = nd
                heapq.heappush(heap, (nd, nr))
    elements = frozenset(best)
    assert len(elements) == a and None not in elements
    return AperyResult(a, elements)


# -- Cavaliere-Niesi -----------------------------------------------------------


@dataclass(frozen=True)
class CNDiagnostics:
    vectors: tuple[tuple[int, int], ...]
    B1: tuple[int, ...]
    B2: tuple[int, ...]
    # (nu, mu(nu)) for each nonzero nu in B1
    pairs: tuple[tuple[int, int], ...]
    # nu -> multiset of generator vectors summing to (nu, mu(nu))
    decompositions: dict = field(compare=False, default_factory=dict)

    def mu_of(self, nu: int) -> int:
        return dict(self.pairs)[nu]

    @property
    def offending(self) -> list[tuple[int, int]]:
        return [(nu, mu) for nu, mu in self.pairs if mu not in self.B2]

    def to_dict(self) -> dict:
        return {
            "vectors": [list(v) for v in self.vectors],
            "B1": list(self.B1),
            "B2": list(self.B2),
            "pairs": [list(p) for p in self.pairs],
            "offending": [list(p) for p in self.offending],
        }


def curve_vectors(ns) -> list[tuple[int, int]]:
    """Generators of the semigroup of the projective monomial curve for ns:
    (0, n_d), (n_i, n_d - n_i) for i < d, and (n_d, 0)."""
    ns = _sorted_distinct(ns)
    nd = ns[-1]
    return [(0, nd)] + [(n, nd - n) for n in ns[:-1]] + [(nd, 0)]


def symmetric_vectors(ns) -> list[tuple[int, int]]:
    """Exponent vectors of the symmetric ideal with a-sequence n_d, ..., n_1, 0:
    (n_d, 0), (n_i, n_(d-i)) for 1 <= i < d, and (0, n_d).

    Coincides with :func:`curve_vectors` exactly when n_i + n_(d-i) = n_d,
    i.e. when the ideal is generated in a single degree.
    """
    ns = _sorted_distinct(ns)
    d = len(ns)
    nd = ns[-1]
    return [(0, nd)] + [(ns[i], ns[d - 2 - i]) for i in range(d - 1)] + [(nd, 0)]


def _sorted_distinct(ns) -> list[int]:
    out = sorted(set(int(n) for n in ns))
    if not out or out[0] <= 0:
        raise InvalidSpec("need positive integers")
    if reduce(gcd, out) != 1:
        raise InfiniteApery(f"{out} has gcd {reduce(gcd, out)}")
    return out


def minimal_second_coordinates(vectors, limit: int):
    """For nu = 0..limit: least mu with (nu, mu) in the semigroup spanned by
    ``vectors`` (None if nu is not a first coordinate), plus one optimal
    decomposition per nu."""
    steps = [v for v in vectors if v[0] > 0]
    best = [None] * (limit + 1)
    choice = [None] * (limit + 1)
    best[0] = 0
    for nu in range(1, limit + 1):
        for v in steps:
            prev = nu - v[0]
            if prev >= 0 and best[prev] is not None:
                cand = best[prev] + v[1]
                if best[nu] is None or cand < best[nu]:
                    best[nu], choice[nu] = cand, v
    return best, choice


def _decomposition(choice, nu):
    parts = []
    while nu:
        v = choice[nu]
        parts.append(v)
        nu -= v[0]
    return tuple(sorted(parts, reverse=True))


def cn_criterion(vectors) -> tuple[bool, CNDiagnostics]:
    """Cavaliere-Niesi comparison for the semigroup S spanned by ``vectors``.

    ``vectors`` must contain the pure vectors (N, 0) and (0, M). With S_1, S_2
    the numerical semigroups of first and second coordinates, B_1 = Ap(N, S_1)
    and B_2 = Ap(M, S_2), the test passes iff the least second coordinates over
    the nonzero elements of B_1, together with 0, are exactly B_2.
    """
    vectors = tuple(sorted(set(tuple(v) for v in vectors), reverse=True))
    N = max(v[0] for v in vectors)
    M = max(v[1] for v in vectors)
    if (N, 0) not in vectors or (0, M) not in vectors:
        raise InvalidSpec("vectors must include (N, 0) and (0, M)")
    S1 = NumericalSemigroup(v[0] for v in vectors if v[0] > 0)
    S2 = NumericalSemigroup(v[1] for v in vectors if v[1] > 0)
    B1 = apery_set(S1, N)
    B2 = apery_set(S2, M)
    best, choice = minimal_second_coordinates(vectors, max(B1.elements))
    pairs = tuple((nu, best[nu]) for nu in B1.sorted() if nu)
    decomp = {nu: _decomposition(choice, nu) for nu, _ in pairs}
    diag = CNDiagnostics(vectors, tuple(B1.sorted()), tuple(B2.sorted()), pairs, decomp)
    ok = {0, *(mu for _, mu in pairs)} == set(B2.elements) and len(pairs) + 1 == len(B2.elements)
    return ok, diag


def cn_is_cm(ns) -> tuple[bool, CNDiagnostics]:
    """Cavaliere-Niesi test for the symmetric ideal attached to ns.

    For a sequence with n_i + n_(d-i) = n_d (an equigenerated ideal, e.g.
    (a, b, a+b)) this is the criterion for the projective monomial curve
    defined by ns. For other sequences it evaluates the same comparison on the
    ideal's own exponent semigroup, where failure no longer implies that the
    fiber cone is not Cohen-Macaulay.
    """
    return cn_criterion(symmetric_vectors(ns))


def cn_is_cm_curve(ns) -> tuple[bool, CNDiagnostics]:
    """Cavaliere-Niesi test for the projective monomial curve defined by ns."""
    return cn_criterion(curve_vectors(ns))
