"""Seeded random concave and convex ideals for property checks.

A normalized ideal is concave when the drops a_(i-1) - a_i are nondecreasing
and the rises b_(i+1) - b_i are nonincreasing; convex is the mirror image.
"""

from __future__ import annotations

import random

from .monomial import MonomialIdeal, make_ideal


def _steps(rng: random.Random, count: int, emax: int, increasing: bool) -> list[int]:
    top = max(1, emax // count)
    steps = sorted(rng.randint(1, top) for _ in range(count))
    return steps if increasing else steps[::-1]


def _from_steps(drops, rises) -> MonomialIdeal:
    a = [sum(drops)]
    for d in drops:
        a.append(a[-1] - d)
    b = [0]
    for r in rises:
        b.append(b[-1] + r)
    return make_ideal(zip(a, b))


def random_concave(rng: random.Random, m_max: int = 8, emax: int = 60, m_min: int = 2) -> MonomialIdeal:
    m = rng.randint(m_min, m_max)
    drops = _steps(rng, m - 1, emax, increasing=True)
    rises = _steps(rng, m - 1, emax, increasing=False)
    return _from_steps(drops, rises)


def random_convex(rng: random.Random, m_max: int = 8, emax: int = 60, m_min: int = 2) -> MonomialIdeal:
    m = rng.randint(m_min, m_max)
    drops = _steps(rng, m - 1, emax, increasing=False)
    rises = _steps(rng, m - 1, emax, increasing=True)
    return _from_steps(drops, rises)


def corpus(n_concave: int = 50, n_convex: int = 50, seed: int = 2024, **kw):
    """Lists (concave, convex) drawn from one seeded generator."""
    rng = random.Random(seed)
    concave = [random_concave(rng, **kw) for _ in range(n_concave)]
    convex = [random_convex(rng, **kw) for _ in range(n_convex)]
    return concave, convex
