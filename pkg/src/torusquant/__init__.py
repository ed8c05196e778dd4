"""Canonical quantisation of classical mechanics on a torus phase space."""

from .charpoly import (
    CyclicTupleSet,
    VerificationReport,
    charpoly_closed,
    charpoly_dimer,
    cyclic_tuples,
    verify_charpoly,
)
from .classical import (
    ClassicalState,
    Trajectory,
    estimate_period,
    flow,
    hamiltonian_value,
    kinetic_expansion,
    limit_energies,
)
from .duality import (
    DualityCertificate,
    ScanReport,
    classical_equivalence_check,
    delta_grid,
    duality_certificate,
    moduli_scan,
)
from .errors import ConvergenceError, DimensionMismatch, DomainError
from .moduli import (
    ModuliPoint,
    PicardLabel,
    PositionGrid,
    hilbert_dim,
    make_moduli,
    modular_parameter,
    picard_label,
    position_grid,
    symplectic_volume,
)
from .numerics import Polynomial, Spectrum, charpoly_oracle, eigh, poly_eval, poly_mul
from .operators import (
    build_hamiltonian,
    commutator,
    heisenberg_defect,
    momentum_operator,
    position_operator,
    shift_operator,
)
from .vacuum import (
    FactorizationReport,
    VacuumReport,
    corner_submatrix,
    degeneracy_pairing,
    factorization_defect,
    vacuum_report,
)

__version__ = "0.1.0"
