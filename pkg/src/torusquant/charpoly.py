"""Closed-form characteristic polynomials of the cyclic tridiagonal Hamiltonian.

Write ``d_j(E) = E + cos(beta q_j + delta)``.  The cyclic-run form sums, over
run lengths ``p`` with the parity of ``n``, the products of ``d`` along every
cyclic run of ``p`` consecutive sites, weighted by ``(i/2)^(n-p)``.  It is
implemented exactly as written and checked against the Faddeev-LeVerrier
oracle by :func:`verify_charpoly`.

The cyclic-run form only counts configurations in which the sites left
uncovered by nearest-neighbour pairs are contiguous.  That is every
configuration for ``n <= 5``, but not for ``n >= 6``.  :func:`charpoly_dimer`
gives the complete expansion: a sum over all matchings of the ``n``-cycle,
each pair weighted ``(i/2)^2``, plus the two winding terms for even ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .moduli import ModuliPoint, hilbert_dim
from .numerics import Polynomial, charpoly_oracle
from .operators import build_hamiltonian, phases

# product of one super- and one sub-diagonal entry of E - H
PAIR_WEIGHT = -0.25


@dataclass(frozen=True)
class CyclicTupleSet:
    n: int
    p: int
    tuples: tuple

    def __len__(self):
        return len(self.tuples)

    def __iter__(self):
        return iter(self.tuples)


@dataclass(frozen=True)
class VerificationReport:
    n: int
    closed: tuple
    oracle: tuple
    max_coeff_diff: float
    tolerance: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "closed": list(self.closed),
            "oracle": list(self.oracle),
            "max_coeff_diff": self.max_coeff_diff,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        return cls(d["n"], tuple(d["closed"]), tuple(d["oracle"]), d["max_coeff_diff"], d["tolerance"], d["pass"])


def cyclic_tuples(n: int, p: int) -> CyclicTupleSet:
    """Cyclic runs of ``p`` consecutive site labels (1-based) out of ``n``.

    >>> cyclic_tuples(4, 2).tuples
    ((1, 2), (2, 3), (3, 4), (4, 1))
    """
    if p < 1 or p > n:
        raise DomainError(f"need 1 <= p <= n, got n={n}, p={p}")
    if p == n:
        runs = (tuple(range(1, n + 1)),)
    else:
        runs = tuple(tuple((j + k) % n + 1 for k in range(p)) for j in range(n))
    return CyclicTupleSet(n, p, runs)


def _site_product(d: np.ndarray, sites) -> np.ndarray:
    c = np.array([1.0])
    for s in sites:
        c = np.convolve(c, [d[s], 1.0])
    return c


def charpoly_closed(m: ModuliPoint) -> Polynomial:
    """Cyclic-run closed form of ``det(E - H)``, ascending coefficients."""
    n = hilbert_dim(m)
    d = np.cos(phases(m))
    total = np.zeros(n + 1)
    for p in range(2 - n % 2, n + 1, 2):
        acc = np.zeros(p + 1)
        for run in cyclic_tuples(n, p):
            acc += _site_product(d, [s - 1 for s in run])
        # (i/2)^(n-p) with n-p even
        total[: p + 1] += PAIR_WEIGHT ** ((n - p) // 2) * acc
    return Polynomial(total)


def _path_continuant(d: np.ndarray) -> np.ndarray:
    """Matching sum of the open chain with sites ``d``: K_j = d_j K_{j-1} - K_{j-2}/4."""
    prev = np.array([1.0])
    cur = np.array([1.0])
    for j, dj in enumerate(d):
        nxt = np.convolve(cur, [dj, 1.0])
        if j > 0:
            nxt[: len(prev)] += PAIR_WEIGHT * prev
        prev, cur = cur, nxt
    return cur


def charpoly_dimer(m: ModuliPoint) -> Polynomial:
    """Complete matching expansion of ``det(E - H)`` on the ``n``-cycle."""
    n = hilbert_dim(m)
    d = np.cos(phases(m))
    if n <= 2:
        # hopping cancels, H is diagonal
        return Polynomial(_site_product(d, range(n)))
    # matchings avoiding the closing bond (n, 1), plus those using it
    total = _path_continuant(d)
    inner = _path_continuant(d[1:-1])
    total[: len(inner)] += PAIR_WEIGHT * inner
    if n % 2 == 0:
        # winding terms: -(-1)^n ((i/2)^n + (-i/2)^n)
        total[0] -= 2.0 * (-1) ** (n // 2) / 2.0**n
    return Polynomial(total)


def verify_charpoly(m: ModuliPoint, form: str = "closed") -> VerificationReport:
    """Compare a closed form with the Faddeev-LeVerrier oracle coefficientwise.

    Passes iff the largest absolute coefficient difference is at most
    ``1e-8 * max(1, largest oracle coefficient)``.
    """
    forms = {"closed": charpoly_closed, "dimer": charpoly_dimer}
    if form not in forms:
        raise DomainError(f"unknown closed form {form!r}")
    closed = forms[form](m).coeffs
    oracle = charpoly_oracle(build_hamiltonian(m)).coeffs.real
    diff = float(np.max(np.abs(closed - oracle)))
    tol = 1e-8 * max(1.0, float(np.max(np.abs(oracle))))
    return VerificationReport(
        hilbert_dim(m),
        tuple(float(c) for c in closed),
        tuple(float(c) for c in oracle),
        diff,
        tol,
        diff <= tol,
    )
