"""Dense numerical kernels: Hermitian eigensolver, characteristic polynomials.

The eigensolver is a cyclic complex Jacobi method.  Matrices here are small
(tens to a few hundred rows), where Jacobi is accurate to working precision
and fully deterministic.  The characteristic polynomial is computed with the
Faddeev-LeVerrier recurrence, which shares no code with the eigensolver and
therefore serves as an independent check of it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DimensionMismatch

JACOBI_TOL = 1e-13
JACOBI_MAX_SWEEPS = 64
IMAG_STRIP_TOL = 1e-9


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in ascending order and matching orthonormal eigenvectors.

    Column ``k`` of ``eigenvectors`` belongs to ``eigenvalues[k]``.  Each column
    is scaled so that its first component of largest modulus is real and
    positive.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def __len__(self):
        return len(self.eigenvalues)

    @property
    def ground_energy(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def gap(self) -> float:
        if len(self.eigenvalues) < 2:
            return float("inf")
        return float(self.eigenvalues[1] - self.eigenvalues[0])


@dataclass(frozen=True)
class Polynomial:
    """Polynomial with coefficients stored in ascending degree."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coeffs))
        if not np.iscomplexobj(c) and c.dtype != object:
            c = c.astype(float)
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        return poly_eval(self, x)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        return poly_mul(self, other)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return poly_add(self, other)

    def tolist(self) -> list:
        return [complex(c) if np.iscomplexobj(self.coeffs) else float(c) for c in self.coeffs]


def _hermitian_part(H) -> np.ndarray:
    H = np.asarray(H, dtype=complex)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {H.shape}")
    return 0.5 * (H + H.conj().T)


def _fix_phases(V: np.ndarray) -> np.ndarray:
    mod = np.abs(V)
    for k in range(V.shape[1]):
        col = mod[:, k]
        # first entry within rounding of the column maximum
        j = int(np.argmax(col >= col.max() - 1e-12))
        V[:, k] *= np.conj(V[j, k]) / col[j]
        V[j, k] = col[j]
    return V


def eigh(H, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS) -> Spectrum:
    """Full eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    The input is symmetrised first.  Sweeps run over all pivots ``p < q``
    until the off-diagonal Frobenius norm drops to ``tol * max(1, ||H||_F)``.

    Raises
    ------
    ConvergenceError
        If ``max_sweeps`` sweeps are not enough.
    """
    A = _hermitian_part(H).copy()
    n = A.shape[0]
    V = np.eye(n, dtype=complex)
    scale = max(1.0, float(np.linalg.norm(A)))
    target = tol * scale

    upper = np.triu_indices(n, 1)

    def off_norm():
        return float(np.sqrt(2.0) * np.linalg.norm(A[upper]))

    for _ in range(max_sweeps + 1):
        if off_norm() <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                b = A[p, q]
                mag = abs(b)
                if mag < 1e-300:
                    continue
                a_pp = A[p, p].real
                a_qq = A[q, q].real
                phase = b / mag
                theta = (a_qq - a_pp) / (2.0 * mag)
                t = 1.0 / (abs(theta) + np.hypot(theta, 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                # unitary J = diag(1, conj(phase)) @ [[c, s], [-s, c]]
                J = np.array([[c, s], [-s * np.conj(phase), c * np.conj(phase)]])
                cols = A[:, [p, q]] @ J
                A[:, p] = cols[:, 0]
                A[:, q] = cols[:, 1]
                rows = J.conj().T @ A[[p, q], :]
                A[p, :] = rows[0]
                A[q, :] = rows[1]
                A[p, q] = A[q, p] = 0.0
                A[p, p] = a_pp - t * mag
                A[q, q] = a_qq + t * mag
                vc = V[:, [p, q]] @ J
                V[:, p] = vc[:, 0]
                V[:, q] = vc[:, 1]
    else:
        raise ConvergenceError(
            f"Jacobi iteration did not converge in {max_sweeps} sweeps "
            f"(off-diagonal norm {off_norm():.3e}, target {target:.3e})"
        )

    w = np.diag(A).real.copy()
    order = np.argsort(w, kind="stable")
    w = w[order]
    V = _fix_phases(V[:, order])
    w.setflags(write=False)
    V.setflags(write=False)
    return Spectrum(w, V)


def faddeev_leverrier(A) -> list:
    """Coefficients of ``det(E I - A)`` in ascending degree.

    Works for any element type closed under ``+``, ``*`` and division by an
    integer, so an object array of exact numbers (e.g. sympy) gives exact
    coefficients.

    ``M_0 = 0, c_n = 1;  M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k``
    """
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {A.shape}")
    n = A.shape[0]
    eye = np.eye(n, dtype=int).astype(A.dtype)
    coeffs = [None] * (n + 1)
    coeffs[n] = eye[0, 0] if n else 1
    M = np.zeros_like(A)
    for k in range(1, n + 1):
        M = A @ M + coeffs[n - k + 1] * eye
        coeffs[n - k] = -np.trace(A @ M) / k
    return coeffs


def charpoly_oracle(H) -> Polynomial:
    """Characteristic polynomial of ``H`` by Faddeev-LeVerrier in floating point.

    Imaginary parts are dropped when they are below ``1e-9`` relative to the
    largest coefficient, as they are for any Hermitian input.
    """
    c = np.array(faddeev_leverrier(np.asarray(H, dtype=complex)), dtype=complex)
    if np.max(np.abs(c.imag)) <= IMAG_STRIP_TOL * max(1.0, float(np.max(np.abs(c)))):
        return Polynomial(c.real.copy())
    return Polynomial(c)


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return Polynomial(np.convolve(a.coeffs, b.coeffs))


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    n = max(len(a.coeffs), len(b.coeffs))
    dtype = np.result_type(a.coeffs, b.coeffs)
    out = np.zeros(n, dtype=dtype)
    out[: len(a.coeffs)] += a.coeffs
    out[: len(b.coeffs)] += b.coeffs
    return Polynomial(out)


def poly_eval(a: Polynomial, x):
    """Horner evaluation."""
    acc = 0.0 * x
    for c in a.coeffs[::-1]:
        acc = acc * x + c
    return acc


def linear_factor(root_shift: float) -> Polynomial:
    """The polynomial ``E + root_shift``."""
    return Polynomial(np.array([root_shift, 1.0]))
