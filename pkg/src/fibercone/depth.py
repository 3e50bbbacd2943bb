"""Depth certificates and Monte Carlo depth evidence for F(I).

F(I)_k is modelled as the vector space with basis G(I^k). Multiplication by
z_j sends u to u*u_j when that is a minimal generator of I^(k+1) and to zero
when it lies in m*I^(k+1).
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import Optional

import numpy as np

from .errors import NotApplicable
from .linalg import check_prime, rank_mod_p
from .monomial import ExpVec, MonomialIdeal, in_m_times, is_symmetric, normalize, powers
from .presentation import build_presentation, initial_ideal
from .shape import classify_shape
from .symmetric import Verdict, classify_symmetric4

DEFAULT_PRIME = 1_000_003


class DepthKind(str, enum.Enum):
    DEPTH0 = "Depth0"
    COHEN_MACAULAY = "CohenMacaulay"
    NOT_COHEN_MACAULAY = "NotCohenMacaulay"
    EVIDENCE = "EvidenceDepthAtLeast"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class DepthVerdict:
    """Outcome of a depth analysis.

    ``Depth0``, ``CohenMacaulay`` and ``NotCohenMacaulay`` are exact and carry
    a re-checkable certificate; ``EvidenceDepthAtLeast`` is probabilistic and
    only covers degrees up to ``bound``.
    """

    kind: DepthKind
    depth: Optional[int]
    certificate: dict = field(default_factory=dict)
    bound: Optional[int] = None

    @property
    def exact(self) -> bool:
        return self.kind in (
            DepthKind.DEPTH0,
            DepthKind.COHEN_MACAULAY,
            DepthKind.NOT_COHEN_MACAULAY,
        )

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "depth": self.depth,
            "bound": self.bound,
            "certificate": self.certificate,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "DepthVerdict":
        return cls(DepthKind(d["kind"]), d["depth"], d["certificate"], d["bound"])

    def describe(self) -> str:
        tag = self.certificate.get("tag", "")
        if self.kind is DepthKind.EVIDENCE:
            return f"depth >= {self.depth} (evidence up to degree {self.bound})"
        if self.kind is DepthKind.UNKNOWN:
            return "unknown"
        return f"{self.kind.value} [{tag}]"


@dataclass(frozen=True)
class ProbeConfig:
    K: int = 6
    trials: int = 3
    prime: int = DEFAULT_PRIME
    seed: int = 0
    kmax: int = 4
    use_socle: bool = True


def _require_normalized(I: MonomialIdeal):
    if I.mu < 2:
        raise NotApplicable("depth probes need a non-principal ideal")
    if not I.is_normalized:
        raise NotApplicable(f"{I} is not normalized")


def socle_witness(I: MonomialIdeal, kmax: int, _powers=None) -> Optional[tuple[int, ExpVec]]:
    """Smallest k <= kmax and lex-largest u in G(I^k) killed by every z_j."""
    _require_normalized(I)
    P = _powers if _powers is not None else powers(I, kmax + 1)
    for k in range(1, kmax + 1):
        for u in P[k].gens:
            if all(in_m_times(P[k + 1], u + g) for g in I.gens):
                return k, u
    return None


def recheck_socle_witness(I: MonomialIdeal, k: int, u) -> bool:
    P = powers(I, k + 1)
    u = ExpVec(*u)
    return u in P[k].gens and all(in_m_times(P[k + 1], u + g) for g in I.gens)


def monotonicity_certificate(I: MonomialIdeal, kmax: int, _powers=None) -> Optional[int]:
    """Smallest k <= kmax with mu(I^k) >= mu(I^(k+1))."""
    if I.mu < 2:
        raise NotApplicable("monotonicity needs a non-principal ideal")
    P = _powers if _powers is not None else powers(I, kmax + 1)
    for k in range(1, kmax + 1):
        if P[k].mu >= P[k + 1].mu:
            return k
    return None


class _FiberModel:
    """Index maps for multiplication by each z_j between consecutive degrees."""

    def __init__(self, I: MonomialIdeal, K: int):
        self.I = I
        P = powers(I, K)
        self.dims = [J.mu for J in P]
        self.images = []  # images[k][j][col] = row in degree k+1, or -1
        for k in range(K):
            index = {u: n for n, u in enumerate(P[k + 1].gens)}
            self.images.append(
                [[index.get(u + g, -1) for u in P[k].gens] for g in I.gens]
            )

    def matrix(self, coeffs, k: int, p: int) -> np.ndarray:
        """Matrix of the linear form sum coeffs[j] z_j from degree k to k+1."""
        M = np.zeros((self.dims[k + 1], self.dims[k]), dtype=np.int64)
        for c, rows in zip(coeffs, self.images[k]):
            for col, row in enumerate(rows):
                if row >= 0:
                    M[row, col] = (M[row, col] + c) % p
        return M


def _rank(M: np.ndarray, p: int) -> int:
    if M.size == 0:
        return 0
    return rank_mod_p(M, p)


def _probe_trial(model: _FiberModel, K: int, p: int, rng: random.Random) -> dict:
    m = model.I.mu
    l1 = [rng.randrange(p) for _ in range(m)]
    l2 = [rng.randrange(p) for _ in range(m)]
    dims = model.dims
    A = {k: model.matrix(l1, k - 1, p) for k in range(1, K + 1)}  # F_{k-1} -> F_k
    B = {k: model.matrix(l2, k, p) for k in range(K)}  # F_k -> F_{k+1}
    rankA = {k: _rank(A[k], p) for k in A}
    ell1_kernel = [dims[k] - rankA[k + 1] for k in range(K)]
    W = [dims[0]] + [dims[k] - rankA[k] for k in range(1, K + 1)]
    ell2_kernel = []
    for k in range(K - 1):
        induced = _rank(np.hstack([A[k + 1], B[k]]), p) - rankA[k + 1]
        ell2_kernel.append(W[k] - induced)
    h = [dims[0]] + [
        dims[k] - _rank(np.hstack([A[k], B[k - 1]]), p) for k in range(1, K + 1)
    ]
    evidence = 0
    if not any(ell1_kernel):
        evidence = 1
        if not any(ell2_kernel) and 0 in h:
            evidence = 2
    return {
        "ell1": l1,
        "ell2": l2,
        "dims": dims[: K + 1],
        "ell1_kernel": ell1_kernel,
        "W_dims": W,
        "ell2_kernel_on_W": ell2_kernel,
        "quotient_dims": h,
        "evidence": evidence,
    }


def generic_linear_probe(
    I: MonomialIdeal,
    K: int = 6,
    trials: int = 3,
    prime: int = DEFAULT_PRIME,
    seed: int = 0,
    use_socle: bool = True,
) -> DepthVerdict:
    """Evidence for depth >= 1 or >= 2 from random linear forms over GF(prime).

    A trial gives depth >= 1 evidence when l1 is injective on F_0..F_(K-1), and
    depth >= 2 evidence when in addition l2 is injective on F/l1F up to degree
    K-2 and F/(l1, l2)F vanishes in some degree <= K. Unlucky forms can only
    hide evidence, never invent it; the best trial wins.
    """
    check_prime(prime)
    _require_normalized(I)
    if K < 2 or trials < 1:
        raise ValueError("need K >= 2 and at least one trial")
    if use_socle:
        w = socle_witness(I, min(K, 4))
        if w is not None:
            return _socle_verdict(w)
    model = _FiberModel(I, K)
    rng = random.Random(seed)
    runs = [_probe_trial(model, K, prime, rng) for _ in range(trials)]
    best = max(r["evidence"] for r in runs)
    transcript = {"K": K, "trials": trials, "prime": prime, "seed": seed, "runs": runs}
    cert = {"tag": "generic-linear-probe", "transcript": transcript}
    if best == 0:
        return DepthVerdict(DepthKind.UNKNOWN, None, cert, K)
    return DepthVerdict(DepthKind.EVIDENCE, best, cert, K)


def _socle_verdict(w) -> DepthVerdict:
    k, u = w
    return DepthVerdict(
        DepthKind.DEPTH0,
        0,
        {
            "tag": "socle-witness",
            "detail": f"u = {u} in G(I^{k}) times every generator lies in m*I^{k + 1}",
            "k": k,
            "u": list(u),
        },
    )


def _symmetric_triple(I: MonomialIdeal) -> Optional[tuple[tuple[int, int, int], int]]:
    if I.mu != 4 or not is_symmetric(I):
        return None
    triple = (I.gens[2].a, I.gens[1].a, I.gens[0].a)
    d = reduce(gcd, triple)
    return tuple(t // d for t in triple), d


def theorem_certificate(I: MonomialIdeal) -> Optional[DepthVerdict]:
    """Exact verdict from the concave/convex or 4-generated symmetric theory."""
    shape = classify_shape(I)
    if shape.classified:
        P = build_presentation(I)
        initial_ideal(P)  # re-verifies the Gröbner basis and its initial ideal
        if shape.is_concave:
            tag = "concave: quadratic Gröbner basis, in(L) = (z2..z(m-1))^2"
        else:
            tag = "convex: squarefree quadratic Gröbner basis"
        return DepthVerdict(
            DepthKind.COHEN_MACAULAY, 2, {"tag": tag, "relations": P.lines()}
        )
    sym = _symmetric_triple(I)
    if sym is None:
        return None
    (a, b, c), d = sym
    report = classify_symmetric4(a, b, c)
    cert = {"tag": f"symmetric 4-generated: {report.reason}", "symmetric4": report.to_dict()}
    if report.verdict is Verdict.NOT_CM_EQUIGEN:
        # equigenerated, so F(I) is a domain: depth >= 1
        return DepthVerdict(DepthKind.NOT_COHEN_MACAULAY, 1, cert)
    if report.verdict.is_cm:
        return DepthVerdict(DepthKind.COHEN_MACAULAY, 2, cert)
    return None


def depth_verdict(I: MonomialIdeal, config: Optional[ProbeConfig] = None) -> DepthVerdict:
    """Combine the exact certificates and the probe, most authoritative first:
    socle witness, non-monotone mu, theorem certificates, random probe."""
    config = config or ProbeConfig()
    I, _ = normalize(I)
    if I.mu == 1:
        return DepthVerdict(
            DepthKind.COHEN_MACAULAY, 1, {"tag": "principal: F(I) is a polynomial ring in one variable"}
        )
    P = powers(I, config.kmax + 1)
    w = socle_witness(I, config.kmax, P)
    if w is not None:
        return _socle_verdict(w)
    k = monotonicity_certificate(I, config.kmax, P)
    if k is not None:
        return DepthVerdict(
            DepthKind.DEPTH0,
            0,
            {"tag": "non-monotone mu", "k": k, "mu": [P[k].mu, P[k + 1].mu]},
        )
    cert = theorem_certificate(I)
    if cert is not None:
        return cert
    return generic_linear_probe(
        I, config.K, config.trials, config.prime, config.seed, use_socle=False
    )
