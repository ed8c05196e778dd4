"""Ground-state analysis: gap, localisation, corner block and factorisation.

Site labels in reports are 1-based, matching the ``|q_1>, ..., |q_n>`` naming
of the position basis; ``q_1 = 0`` is the potential minimum at ``delta = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .moduli import ModuliPoint, hilbert_dim, position_grid
from .numerics import charpoly_oracle, eigh, poly_mul
from .operators import build_hamiltonian, phases

DEGENERACY_TOL = 1e-9


def _pairs(vec) -> list:
    return [[float(z.real), float(z.imag)] for z in vec]


@dataclass(frozen=True)
class VacuumReport:
    n: int
    energy: float
    gap: float
    nondegenerate: bool
    vector: tuple
    localization_index: int

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "E0": self.energy,
            "gap": self.gap,
            "nondegenerate": self.nondegenerate,
            "vector": _pairs(self.vector),
            "localization_index": self.localization_index,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "VacuumReport":
        vec = tuple(complex(re, im) for re, im in d["vector"])
        return cls(d["n"], d["E0"], d["gap"], d["nondegenerate"], vec, d["localization_index"])


@dataclass(frozen=True)
class FactorizationReport:
    n: int
    defect: float
    corner_energy: float
    vacuum_energy: float
    corner_vs_full: float
    overlap: float

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "defect": self.defect,
            "corner_energy": self.corner_energy,
            "vacuum_energy": self.vacuum_energy,
            "corner_vs_full": self.corner_vs_full,
            "overlap": self.overlap,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "FactorizationReport":
        return cls(**d)


@dataclass(frozen=True)
class PairingReport:
    """Degeneracies with the hopping term off (by site) or on (by level)."""

    kinetic_off: bool
    values: tuple
    pairs: tuple
    singletons: tuple

    def to_dict(self) -> dict:
        return {
            "kinetic_off": self.kinetic_off,
            "values": list(self.values),
            "pairs": [list(p) for p in self.pairs],
            "singletons": list(self.singletons),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "PairingReport":
        return cls(d["kinetic_off"], tuple(d["values"]), tuple(tuple(p) for p in d["pairs"]), tuple(d["singletons"]))


def degeneracy_tolerance(eigenvalues) -> float:
    spread = float(eigenvalues[-1] - eigenvalues[0]) if len(eigenvalues) else 0.0
    return DEGENERACY_TOL * max(1.0, spread)


def vacuum_report(m: ModuliPoint) -> VacuumReport:
    spec = eigh(build_hamiltonian(m))
    E = spec.eigenvalues
    gap = float(E[1] - E[0]) if len(E) > 1 else float("inf")
    vec = spec.eigenvectors[:, 0]
    return VacuumReport(
        n=len(E),
        energy=float(E[0]),
        gap=gap,
        nondegenerate=bool(gap > degeneracy_tolerance(E)),
        vector=tuple(complex(z) for z in vec),
        localization_index=int(np.argmax(np.abs(vec))) + 1,
    )


def corner_order(n: int) -> np.ndarray:
    """0-based permutation putting the basis in the order q_n, q_1, ..., q_{n-1}."""
    return np.concatenate(([n - 1], np.arange(n - 1)))


def reordered_hamiltonian(m: ModuliPoint) -> np.ndarray:
    order = corner_order(hilbert_dim(m))
    return build_hamiltonian(m)[np.ix_(order, order)]


def corner_submatrix(m: ModuliPoint) -> np.ndarray:
    """The 3x3 block coupling ``|q_1>`` to its neighbours ``|q_n>`` and ``|q_2>``."""
    n = hilbert_dim(m)
    if n < 4:
        raise DomainError(f"corner block needs n >= 4, got n = {n}")
    c = np.cos(phases(m))
    return np.array(
        [
            [-c[n - 1], -0.5j, 0.0],
            [0.5j, -c[0], -0.5j],
            [0.0, 0.5j, -c[1]],
        ],
        dtype=complex,
    )


def factorization_defect(m: ModuliPoint, drop_boxes: bool = False) -> FactorizationReport:
    """How far ``s_n`` is from ``s_3 * s_{n-3}``.

    ``s_3`` is the characteristic polynomial of the corner block and
    ``s_{n-3}`` that of the complementary block.  The defect is the largest
    coefficient difference divided by ``max(1, max |coeff of s_n|)``.
    ``drop_boxes=True`` zeroes the off-diagonal boxes before computing ``s_n``.
    """
    n = hilbert_dim(m)
    if n < 7:
        raise DomainError(f"factorization study needs n >= 7, got n = {n}")
    H = reordered_hamiltonian(m)
    if drop_boxes:
        H[:3, 3:] = 0.0
        H[3:, :3] = 0.0
    s_n = charpoly_oracle(H).coeffs
    s_3 = charpoly_oracle(H[:3, :3])
    s_rest = charpoly_oracle(H[3:, 3:])
    prod = poly_mul(s_3, s_rest).coeffs
    defect = float(np.max(np.abs(s_n - prod)) / max(1.0, float(np.max(np.abs(s_n)))))

    corner = eigh(corner_submatrix(m))
    full = eigh(build_hamiltonian(m))
    # embed the corner ground state back into the natural basis
    tilde = np.zeros(n, dtype=complex)
    tilde[corner_order(n)[:3]] = corner.eigenvectors[:, 0]
    overlap = float(abs(np.vdot(tilde, full.eigenvectors[:, 0])))
    return FactorizationReport(
        n=n,
        defect=defect,
        corner_energy=corner.ground_energy,
        vacuum_energy=full.ground_energy,
        corner_vs_full=abs(corner.ground_energy - full.ground_energy),
        overlap=overlap,
    )


def degeneracy_pairing(m: ModuliPoint, kinetic_off: bool = True) -> PairingReport:
    """Degenerate pairs of the symmetric potential, or of the full spectrum.

    With ``kinetic_off`` the Hamiltonian is the diagonal ``-cos(beta q_j)``;
    sites ``j`` and their mirror images ``-q_j`` are reported as pairs when
    their energies agree, and mirror-symmetric sites (q = 0, q = pi) as
    singletons.  Otherwise adjacent degenerate levels of the full spectrum are
    paired (1-based level indices).
    """
    if m.delta != 0.0:
        raise DomainError(f"pairing needs the symmetric potential delta = 0, got {m.delta!r}")
    n = hilbert_dim(m)
    if kinetic_off:
        values = -np.cos(phases(m))
        tol = degeneracy_tolerance(np.sort(values))
        mirror = position_grid(n).reflection()
        pairs, singles = [], []
        for j in range(n):
            k = int(mirror[j])
            if k == j:
                singles.append(j + 1)
            elif j < k:
                if abs(values[j] - values[k]) <= tol:
                    pairs.append((j + 1, k + 1))
                else:
                    singles.extend([j + 1, k + 1])
        return PairingReport(True, tuple(float(v) for v in values), tuple(pairs), tuple(sorted(singles)))

    E = eigh(build_hamiltonian(m)).eigenvalues
    tol = degeneracy_tolerance(E)
    pairs, used = [], set()
    for k in range(n - 1):
        if k not in used and E[k + 1] - E[k] <= tol:
            pairs.append((k + 1, k + 2))
            used.update((k, k + 1))
    singles = tuple(k + 1 for k in range(n) if k not in used)
    return PairingReport(False, tuple(float(v) for v in E), tuple(pairs), singles)
