"""Points in the moduli space of the torus and the geometry derived from them.

A point is described by the axis-length ratio ``beta`` and the phase ``delta``
of the Hamiltonian ``H = -cos p - cos(beta q + delta)``.  Everything else in
the package (Hilbert-space dimension, grid, operators, spectra) is computed
from a :class:`ModuliPoint`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DomainError

TWO_PI = 2.0 * math.pi


def wrap_angle(x: float) -> float:
    """Map ``x`` into the fundamental domain (-pi, pi]."""
    w = math.remainder(x, TWO_PI)
    if w <= -math.pi:
        w += TWO_PI
    return w


def reduce_phase(x: float) -> float:
    """Map ``x`` into [0, 2 pi)."""
    r = math.fmod(x, TWO_PI)
    if r < 0.0:
        r += TWO_PI
    # fmod of a tiny negative number can round up to exactly 2 pi
    if r >= TWO_PI:
        r = 0.0
    return r


@dataclass(frozen=True)
class ModuliPoint:
    """A complex structure on the torus, plus an optional dimension override.

    Parameters
    ----------
    beta : float
        Ratio of the torus axis lengths, ``beta > 0``.
    delta : float
        Phase between the two periodicities, in radians.  Stored reduced to
        ``[0, 2 pi)``.
    dim_override : int, optional
        Explicit Hilbert-space dimension.  Without it the dimension is the
        integer part of ``beta``, which then must be at least 1.
    """

    beta: float
    delta: float = 0.0
    dim_override: Optional[int] = None

    def __post_init__(self):
        beta = float(self.beta)
        delta = float(self.delta)
        if not (math.isfinite(beta) and math.isfinite(delta)):
            raise DomainError("beta and delta must be finite")
        if beta <= 0.0:
            raise DomainError(f"beta must be positive, got {beta!r}")
        dim = self.dim_override
        if dim is not None:
            if isinstance(dim, bool) or int(dim) != dim:
                raise DomainError(f"dimension override must be an integer, got {dim!r}")
            dim = int(dim)
            if dim < 1:
                raise DomainError(f"dimension override must be >= 1, got {dim}")
        elif beta < 1.0:
            raise DomainError(
                f"beta = {beta!r} < 1 gives no states; pass a dimension override"
            )
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "delta", reduce_phase(delta))
        object.__setattr__(self, "dim_override", dim)

    @property
    def alpha(self) -> float:
        # momentum-axis scale; fixed by convention
        return 1.0

    @property
    def n(self) -> int:
        return hilbert_dim(self)

    @property
    def z_coordinate(self) -> str:
        return "q + i p"

    @property
    def w_coordinate(self) -> str:
        return f"({self.beta!r} q + {self.delta!r}) + i p"

    def to_dict(self) -> dict:
        return {"beta": self.beta, "delta": self.delta, "dim": self.dim_override}

    @classmethod
    def from_dict(cls, record: dict) -> "ModuliPoint":
        return cls(record["beta"], record.get("delta", 0.0), record.get("dim"))


@dataclass(frozen=True)
class PositionGrid:
    """Uniform grid of ``n`` positions on the circle, anchored at ``q = 0``."""

    n: int
    points: np.ndarray

    def __len__(self):
        return self.n

    def reflection(self) -> np.ndarray:
        """Index ``k`` with ``q_k = -q_j`` (mod 2 pi) for every ``j`` (0-based)."""
        return (-np.arange(self.n)) % self.n


@dataclass(frozen=True)
class PicardLabel:
    """Integer degree and coordinate label of the vacuum line bundle."""

    l: int
    lambda_coordinate: str


def make_moduli(beta: float, delta: float = 0.0, dim_override: Optional[int] = None) -> ModuliPoint:
    return ModuliPoint(beta, delta, dim_override)


def symplectic_volume(m: ModuliPoint) -> float:
    """Volume of the torus under ``beta dp ^ dq``, unit torus normalised to 1."""
    return m.beta


def hilbert_dim(m: ModuliPoint) -> int:
    """One state per unit of symplectic volume, unless overridden."""
    if m.dim_override is not None:
        return m.dim_override
    return int(math.floor(symplectic_volume(m)))


def position_grid(n: int) -> PositionGrid:
    """Grid ``q_j = 2 pi (j - 1) / n`` wrapped into (-pi, pi].

    >>> position_grid(4).points / np.pi
    array([ 0. ,  0.5,  1. , -0.5])
    """
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise DomainError(f"grid size must be a positive integer, got {n!r}")
    n = int(n)
    j = np.arange(n)
    # wrap via the integer index so q = pi lands exactly on +pi
    k = np.where(2 * j > n, j - n, j)
    points = TWO_PI * k / n
    if n % 2 == 0:
        points[n // 2] = math.pi
    points.setflags(write=False)
    return PositionGrid(n, points)


def modular_parameter(m: ModuliPoint) -> complex:
    """tau = beta * exp(i delta)."""
    return complex(m.beta * math.cos(m.delta), m.beta * math.sin(m.delta))


def picard_label(m: ModuliPoint) -> PicardLabel:
    return PicardLabel(hilbert_dim(m), m.w_coordinate)
