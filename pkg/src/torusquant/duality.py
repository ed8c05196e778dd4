"""Scans over delta and duality certificates.

At ``beta = 1`` the map ``q -> q + delta`` is canonical, so every value of
``delta`` describes the same classical mechanics.  The quantum spectra
nevertheless depend on ``delta``; a pair of moduli points that is classically
equivalent but spectrally distinct is certified as a duality.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .classical import ClassicalState, flow
from .errors import DomainError
from .moduli import ModuliPoint, hilbert_dim, wrap_angle
from .numerics import eigh
from .operators import build_hamiltonian

SPECTRAL_TOL = 1e-9
TRAJECTORY_TOL = 1e-8


@dataclass(frozen=True)
class ScanRow:
    beta: float
    delta: float
    n: int
    eigenvalues: tuple

    @property
    def energy(self) -> float:
        return self.eigenvalues[0]

    @property
    def gap(self) -> float:
        return self.eigenvalues[1] - self.eigenvalues[0] if self.n > 1 else float("inf")

    def to_dict(self) -> dict:
        return {
            "beta": self.beta,
            "delta": self.delta,
            "n": self.n,
            "E0": self.energy,
            "gap": self.gap,
            "eigenvalues": list(self.eigenvalues),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ScanRow":
        return cls(d["beta"], d["delta"], d["n"], tuple(d["eigenvalues"]))


@dataclass(frozen=True)
class ScanReport:
    rows: tuple

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def to_dict(self) -> dict:
        return {"rows": [r.to_dict() for r in self.rows]}

    @classmethod
    def from_dict(cls, d: dict) -> "ScanReport":
        return cls(tuple(ScanRow.from_dict(r) for r in d["rows"]))


@dataclass(frozen=True)
class DualityCertificate:
    first: ModuliPoint
    second: ModuliPoint
    classically_canonical: bool
    spectra_equal: bool
    max_spectral_difference: float

    @property
    def is_duality(self) -> bool:
        return self.classically_canonical and not self.spectra_equal

    def to_dict(self) -> dict:
        return {
            "first": self.first.to_dict(),
            "second": self.second.to_dict(),
            "classically_canonical": self.classically_canonical,
            "spectra_equal": self.spectra_equal,
            "max_spectral_difference": self.max_spectral_difference,
            "is_duality": self.is_duality,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "DualityCertificate":
        cert = cls(
            ModuliPoint.from_dict(d["first"]),
            ModuliPoint.from_dict(d["second"]),
            d["classically_canonical"],
            d["spectra_equal"],
            d["max_spectral_difference"],
        )
        if "is_duality" in d and d["is_duality"] != cert.is_duality:
            raise ValueError("inconsistent certificate: is_duality disagrees with its inputs")
        return cert


def spectrum_values(m: ModuliPoint) -> np.ndarray:
    return eigh(build_hamiltonian(m)).eigenvalues


def _scan_row(beta: float, delta: float, dim_override: Optional[int]) -> ScanRow:
    try:
        m = ModuliPoint(beta, delta, dim_override)
    except DomainError as exc:
        raise DomainError(f"scan aborted at delta = {delta!r}: {exc}") from exc
    E = spectrum_values(m)
    return ScanRow(m.beta, m.delta, hilbert_dim(m), tuple(float(e) for e in E))


def moduli_scan(
    beta: float,
    deltas: Sequence[float],
    dim_override: Optional[int] = None,
    workers: int = 1,
) -> ScanReport:
    """Spectrum at each ``delta``; rows come back in the order of ``deltas``."""
    deltas = list(deltas)
    if not deltas:
        raise DomainError("delta grid is empty")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda d: _scan_row(beta, d, dim_override), deltas))
    else:
        rows = [_scan_row(beta, d, dim_override) for d in deltas]
    return ScanReport(tuple(rows))


def delta_grid(steps: int) -> list:
    """``steps`` equally spaced phases covering [0, 2 pi)."""
    if steps < 1:
        raise DomainError(f"need at least one delta step, got {steps}")
    return [2.0 * np.pi * k / steps for k in range(steps)]


def duality_certificate(m1: ModuliPoint, m2: ModuliPoint) -> DualityCertificate:
    canonical = m1.beta == m2.beta and hilbert_dim(m1) == hilbert_dim(m2)
    E1 = spectrum_values(m1)
    E2 = spectrum_values(m2)
    if len(E1) == len(E2):
        diff = float(np.max(np.abs(E1 - E2)))
        equal = diff <= SPECTRAL_TOL
    else:
        diff = float("inf")
        equal = False
    return DualityCertificate(m1, m2, canonical, equal, diff)


def classical_equivalence_check(
    m1: ModuliPoint,
    m2: ModuliPoint,
    s0: ClassicalState,
    T: float,
    dt: float,
    tol: float = TRAJECTORY_TOL,
) -> bool:
    """Whether the two classical theories are related by the shift of ``q``.

    With ``beta = 1`` the theory at ``delta_2`` at position ``q`` is the
    theory at ``delta_1`` at position ``q + delta_2 - delta_1``.  The
    ``delta_2`` trajectory from ``s0`` is compared, point by point and modulo
    2 pi, with the shifted image of the ``delta_1`` trajectory from the
    shifted initial state.
    """
    if m1.beta != 1.0 or m2.beta != 1.0:
        raise DomainError(f"the delta shift is canonical only at beta = 1, got {m1.beta}, {m2.beta}")
    shift = m2.delta - m1.delta
    a = flow(s0, m2, T, dt)
    b = flow(ClassicalState(s0.q + shift, s0.p), m1, T, dt)
    dq = np.array([wrap_angle(x) for x in (b.q - shift) - a.q])
    dp = np.array([wrap_angle(x) for x in b.p - a.p])
    return bool(np.max(np.abs(dq)) <= tol and np.max(np.abs(dp)) <= tol)
