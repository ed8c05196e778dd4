import math

import numpy as np
import pytest

from torusquant import (
    ClassicalState,
    DomainError,
    estimate_period,
    flow,
    hamiltonian_value,
    kinetic_expansion,
    limit_energies,
    make_moduli,
)
from torusquant.classical import reverse, shifted_offsets
from torusquant.moduli import wrap_angle

UNIT = make_moduli(1.0, 0.0)


def test_hamiltonian_values():
    assert hamiltonian_value(ClassicalState(0, 0), UNIT) == -2.0
    assert hamiltonian_value(ClassicalState(math.pi, math.pi), UNIT) == 2.0
    assert hamiltonian_value(ClassicalState(0.1, 0), UNIT) == pytest.approx(-1.9950042, abs=1e-7)


def test_state_wraps():
    s = ClassicalState(3 * math.pi / 2, -3 * math.pi / 2)
    assert s.q == pytest.approx(-math.pi / 2) and s.p == pytest.approx(math.pi / 2)


def test_fixed_point():
    traj = flow(ClassicalState(0, 0), UNIT, 1.0, 1e-3)
    assert np.all(traj.q == 0.0) and np.all(traj.p == 0.0)
    assert len(traj) == 1001 and traj.t[-1] == pytest.approx(1.0)


def test_small_oscillation_period():
    traj = flow(ClassicalState(0.01, 0), UNIT, 40.0, 1e-3)
    assert estimate_period(traj) == pytest.approx(2 * math.pi, rel=1e-3)


def test_energy_conservation():
    traj = flow(ClassicalState(1.0, 0.0), UNIT, 100.0, 1e-3)
    assert np.max(np.abs(traj.H - traj.H[0])) <= 1e-5


def test_energy_error_scales_as_dt_squared():
    s0 = ClassicalState(1.0, 0.3)
    drift = [np.max(np.abs(flow(s0, UNIT, 10.0, dt).H - hamiltonian_value(s0, UNIT))) for dt in (4e-2, 2e-2)]
    assert drift[0] / drift[1] == pytest.approx(4.0, rel=0.15)


def test_reversibility():
    s0 = ClassicalState(1.0, 0.4)
    fwd = flow(s0, UNIT, 10.0, 1e-3)
    back = flow(reverse(fwd.state(-1)), UNIT, 10.0, 1e-3)
    end = back.state(-1)
    assert abs(wrap_angle(end.q - s0.q)) <= 1e-8
    assert abs(wrap_angle(-end.p - s0.p)) <= 1e-8


def test_delta_shift_covariance():
    delta = 1.3
    a = flow(ClassicalState(0.5, 0.2), make_moduli(1.0, delta), 10.0, 1e-3)
    b = flow(ClassicalState(0.5 + delta, 0.2), UNIT, 10.0, 1e-3)
    dq = np.array([wrap_angle(x) for x in (b.q - delta) - a.q])
    assert np.max(np.abs(dq)) <= 1e-10
    assert np.max(np.abs(b.p - a.p)) <= 1e-10


def test_ragged_final_step():
    traj = flow(ClassicalState(0.3, 0.0), UNIT, 1.0, 0.3)
    np.testing.assert_allclose(traj.t, [0, 0.3, 0.6, 0.9, 1.0])
    assert np.all(np.diff(traj.t) > 0)


@pytest.mark.parametrize("T, dt", [(0.0, 1e-3), (1.0, 0.0), (-1.0, 1e-3), (1.0, 2.0)])
def test_flow_domain(T, dt):
    with pytest.raises(DomainError):
        flow(ClassicalState(0, 0), UNIT, T, dt)


def test_kinetic_expansion():
    assert kinetic_expansion(0.0, 7) == -1.0
    assert kinetic_expansion(1.0, 5) == pytest.approx(-math.cos(1.0), abs=1e-8)
    assert kinetic_expansion(0.7, 0) == 0.5 * 0.49 - 1.0
    with pytest.raises(DomainError):
        kinetic_expansion(1.0, -1)


@pytest.mark.parametrize("p", [0.3, 1.0, 2.0, math.pi])
def test_kinetic_expansion_envelope(p):
    errors = [abs(kinetic_expansion(p, K) + math.cos(p)) for K in range(12)]
    # below ~1e-15 only rounding is left
    assert all(b <= a + 1e-15 for a, b in zip(errors, errors[1:]))
    for K in range(12):
        tail = p ** (2 * K + 4) / math.factorial(2 * K + 4)
        assert errors[K] <= tail * (1 + 1e-9) + 1e-15


def test_limit_energies():
    full, sg, h2 = shifted_offsets(ClassicalState(0.1, 0.0))
    assert full == pytest.approx(0.0049958, abs=1e-7) and sg == pytest.approx(full)
    assert h2 == pytest.approx(0.005)
    assert max(abs(full - h2), abs(sg - h2)) == pytest.approx(0.1**4 / 24, rel=1e-2)
    assert limit_energies(ClassicalState(0, 0)) == (-2.0, -1.0, 0.0)
    full, sg, h2 = shifted_offsets(ClassicalState(0.0, 0.1))
    assert full == pytest.approx(0.0049958, abs=1e-7)
    assert sg == pytest.approx(0.005) and h2 == pytest.approx(0.005)
