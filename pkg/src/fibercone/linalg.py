"""Exact rank computations over GF(p)."""

from __future__ import annotations

import numpy as np

from .errors import InvalidPrime

# entries stay below p, so products fit in int64 as long as p < 2**31
MAX_PRIME = 2**31 - 1


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def check_prime(p: int) -> int:
    if not isinstance(p, int):
        raise InvalidPrime(f"{p!r} is not an integer")
    if p > MAX_PRIME:
        raise InvalidPrime(f"{p} exceeds {MAX_PRIME}, too large for int64 elimination")
    if not is_prime(p):
        raise InvalidPrime(f"{p} is not a prime")
    return p


def rank_mod_p(rows, p: int) -> int:
    """Rank of an integer matrix reduced mod p (Gaussian elimination)."""
    A = np.array(rows, dtype=np.int64)
    if A.size == 0:
        return 0
    A %= p
    nrows, ncols = A.shape
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        pivots = np.nonzero(A[rank:, col])[0]
        if pivots.size == 0:
            continue
        piv = rank + pivots[0]
        if piv != rank:
            A[[rank, piv]] = A[[piv, rank]]
        inv = pow(int(A[rank, col]), p - 2, p)
        A[rank] = (A[rank] * inv) % p
        below = np.nonzero(A[rank + 1 :, col])[0] + rank + 1
        if below.size:
            factors = A[below, col].reshape(-1, 1)
            A[below] = (A[below] - factors * A[rank]) % p
        rank += 1
    return rank
