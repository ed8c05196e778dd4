"""Classical dynamics of ``H = -cos p - cos(beta q + delta)`` on the torus.

The Hamiltonian is separable, ``H = T(p) + V(q)``, so the flow is integrated
with the explicit Stormer-Verlet (kick-drift-kick) scheme.  Coordinates are
wrapped into (-pi, pi] after every step.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .moduli import ModuliPoint, wrap_angle

DEFAULT_DT = 1e-3


@dataclass(frozen=True)
class ClassicalState:
    q: float
    p: float

    def __post_init__(self):
        object.__setattr__(self, "q", wrap_angle(float(self.q)))
        object.__setattr__(self, "p", wrap_angle(float(self.p)))


@dataclass(frozen=True)
class Trajectory:
    t: np.ndarray
    q: np.ndarray
    p: np.ndarray
    H: np.ndarray
    dt: float
    method: str = "stormer-verlet"

    def __len__(self):
        return len(self.t)

    def state(self, k: int) -> ClassicalState:
        return ClassicalState(self.q[k], self.p[k])

    def rows(self):
        return zip(self.t, self.q, self.p, self.H)


def hamiltonian_value(s: ClassicalState, m: ModuliPoint) -> float:
    return -math.cos(s.p) - math.cos(m.beta * s.q + m.delta)


def _energy(q, p, m: ModuliPoint):
    return -np.cos(p) - np.cos(m.beta * q + m.delta)


def _step_count(T: float, dt: float):
    n = round(T / dt)
    if n >= 1 and abs(n * dt - T) <= 1e-9 * T:
        return n, dt, dt
    n = math.ceil(T / dt)
    return n, dt, T - (n - 1) * dt


def flow(s0: ClassicalState, m: ModuliPoint, T: float, dt: float = DEFAULT_DT) -> Trajectory:
    """Integrate from ``s0`` for a time ``T`` with step ``dt``.

    When ``dt`` does not divide ``T`` the last step is shortened to land on
    ``T``.  The energy column is evaluated from the stored states.  Since
    ``H`` is even in ``p``, backward integration is a forward run from the
    momentum-reversed state.
    """
    if not (T > 0 and dt > 0):
        raise DomainError(f"need T > 0 and dt > 0, got T={T}, dt={dt}")
    if dt > T:
        raise DomainError(f"step {dt} longer than the run {T}")
    steps, h, last = _step_count(T, dt)

    beta, delta = m.beta, m.delta
    q = np.empty(steps + 1)
    p = np.empty(steps + 1)
    t = np.arange(steps + 1) * h
    t[-1] = (steps - 1) * h + last
    q[0], p[0] = s0.q, s0.p
    qk, pk = s0.q, s0.p
    for k in range(steps):
        step = last if k == steps - 1 else h
        pk = pk - 0.5 * step * beta * math.sin(beta * qk + delta)
        qk = qk + step * math.sin(pk)
        pk = pk - 0.5 * step * beta * math.sin(beta * qk + delta)
        qk = wrap_angle(qk)
        pk = wrap_angle(pk)
        q[k + 1], p[k + 1] = qk, pk
    return Trajectory(t, q, p, _energy(q, p, m), float(dt))


def reverse(s: ClassicalState) -> ClassicalState:
    return ClassicalState(s.q, -s.p)


def estimate_period(traj: Trajectory) -> float:
    """Mean spacing of upward zero crossings of ``q``, linearly interpolated."""
    q, t = traj.q, traj.t
    idx = np.nonzero((q[:-1] < 0.0) & (q[1:] >= 0.0))[0]
    if len(idx) < 2:
        raise DomainError("trajectory has fewer than two upward zero crossings")
    frac = -q[idx] / (q[idx + 1] - q[idx])
    crossings = t[idx] + frac * (t[idx + 1] - t[idx])
    return float(np.mean(np.diff(crossings)))


def kinetic_expansion(p: float, K: int) -> float:
    """``-cos p`` as ``p^2/2 - 1`` minus the first ``K`` higher-order terms.

    ``K = 0`` is the quadratic truncation used by the pendulum limit.
    """
    if K < 0:
        raise DomainError(f"K must be non-negative, got {K}")
    total = 0.5 * p * p - 1.0
    for k in range(2, K + 2):
        total -= (-1) ** k * p ** (2 * k) / math.factorial(2 * k)
    return total


def limit_energies(s: ClassicalState) -> tuple:
    """Full, pendulum and harmonic energies at ``beta = 1, delta = 0``.

    Their ground-state offsets are -2, -1 and 0.
    """
    q, p = s.q, s.p
    full = -math.cos(p) - math.cos(q)
    pendulum = 0.5 * p * p - math.cos(q)
    harmonic = 0.5 * (p * p + q * q)
    return full, pendulum, harmonic


def shifted_offsets(s: ClassicalState) -> tuple:
    full, pendulum, harmonic = limit_energies(s)
    return full + 2.0, pendulum + 1.0, harmonic
