"""Position, shift and momentum operators on C^n and the quantum Hamiltonian.

The basis ``|q_j>`` is indexed from 0 in arrays; ``q_j`` are the points of
:func:`torusquant.moduli.position_grid`.  All matrices are dense ``complex128``
arrays.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .errors import DimensionMismatch, DomainError
from .moduli import ModuliPoint, hilbert_dim, position_grid

HERMITIAN_TOL = 1e-12


def is_hermitian(A, tol: float = HERMITIAN_TOL) -> bool:
    A = np.asarray(A)
    return A.ndim == 2 and A.shape[0] == A.shape[1] and bool(np.all(np.abs(A - A.conj().T) <= tol))


def is_unitary(A, tol: float = 1e-14) -> bool:
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        return False
    return bool(np.max(np.abs(A @ A.conj().T - np.eye(A.shape[0])), initial=0.0) <= tol)


def _check_n(n) -> int:
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise DomainError(f"dimension must be a positive integer, got {n!r}")
    return int(n)


def phases(m: ModuliPoint) -> np.ndarray:
    """Potential arguments ``beta q_j + delta`` on the grid of ``m``."""
    return m.beta * position_grid(hilbert_dim(m)).points + m.delta


def position_operator(m: ModuliPoint) -> np.ndarray:
    return np.diag(position_grid(hilbert_dim(m)).points).astype(complex)


def shift_operator(n: int) -> np.ndarray:
    """``U |q_j> = -i |q_{j+1}>`` with ``|q_{n+1}> = |q_1>``."""
    n = _check_n(n)
    U = np.zeros((n, n), dtype=complex)
    j = np.arange(n)
    U[(j + 1) % n, j] = -1j
    return U


def momentum_phases(n: int) -> np.ndarray:
    """Principal eigenphases of ``U``, in (-pi, pi], one per Fourier mode.

    ``U`` is ``-i`` times the cyclic shift, so its eigenvalue on mode ``k`` is
    ``exp(i (-pi/2 - 2 pi k / n))``.  The phase is reduced with exact rational
    arithmetic so that a phase of exactly pi is never mis-rounded to -pi.
    """
    n = _check_n(n)
    out = np.empty(n)
    for k in range(n):
        r = Fraction(-(n + 4 * k), 4 * n)
        r -= math.floor(r + Fraction(1, 2))
        if r == Fraction(-1, 2):
            r = Fraction(1, 2)
        out[k] = 2.0 * math.pi * float(r)
    return out


def fourier_basis(n: int) -> np.ndarray:
    """Unitary whose column ``k`` is ``exp(2 pi i j k / n) / sqrt(n)``."""
    n = _check_n(n)
    jk = np.outer(np.arange(n), np.arange(n)) % n
    return np.exp(2j * np.pi * jk / n) / np.sqrt(n)


def momentum_operator(n: int) -> np.ndarray:
    """``P = -i log U`` on the principal branch."""
    F = fourier_basis(n)
    P = (F * momentum_phases(n)) @ F.conj().T
    return 0.5 * (P + P.conj().T)


def commutator(A, B) -> np.ndarray:
    A = np.asarray(A)
    B = np.asarray(B)
    if A.shape != B.shape or A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionMismatch(f"cannot commute shapes {A.shape} and {B.shape}")
    return A @ B - B @ A


def build_hamiltonian(m: ModuliPoint, kinetic: bool = True) -> np.ndarray:
    """Hamiltonian matrix from its elements in the position basis.

    ``<q_j|H|q_k> = (i/2)(delta_{j,k+1} - delta_{j,k-1}) - delta_{jk} cos(beta q_j + delta)``
    with indices taken mod n.  For n = 1 and n = 2 the two hopping terms land
    on the same entry and cancel.  ``kinetic=False`` drops the hopping terms.
    """
    n = hilbert_dim(m)
    H = np.zeros((n, n), dtype=complex)
    if kinetic:
        for k in range(n):
            H[(k + 1) % n, k] += 0.5j
            H[(k - 1) % n, k] -= 0.5j
    H[np.diag_indices(n)] -= np.cos(phases(m))
    return H


def hamiltonian_from_operators(m: ModuliPoint) -> np.ndarray:
    """Same Hamiltonian as ``-(U + U^dagger)/2 - cos(beta Q + delta)``."""
    n = hilbert_dim(m)
    U = shift_operator(n)
    Q = position_operator(m)
    potential = np.diag(np.cos(m.beta * np.diag(Q).real + m.delta))
    return -0.5 * (U + U.conj().T) - potential


def heisenberg_defect(n: int) -> float:
    """Frobenius distance of ``[Q, P]`` from ``i I``.

    Any commutator is traceless while ``tr(i I) = i n``, so the distance can
    never drop below ``sqrt(n)``.
    """
    n = _check_n(n)
    Q = np.diag(position_grid(n).points).astype(complex)
    C = commutator(Q, momentum_operator(n))
    return float(np.linalg.norm(C - 1j * np.eye(n)))


def matrix_to_pairs(A) -> list:
    """Row-major nested lists of ``[re, im]`` pairs."""
    A = np.asarray(A, dtype=complex)
    return [[[float(z.real), float(z.imag)] for z in row] for row in A]


def matrix_from_pairs(rows) -> np.ndarray:
    return np.array([[complex(re, im) for re, im in row] for row in rows], dtype=complex)
