import math

import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, settings, strategies as st

from torusquant import (
    DimensionMismatch,
    build_hamiltonian,
    commutator,
    heisenberg_defect,
    make_moduli,
    momentum_operator,
    position_grid,
    position_operator,
    shift_operator,
)
from torusquant.operators import (
    hamiltonian_from_operators,
    is_hermitian,
    is_unitary,
    matrix_from_pairs,
    matrix_to_pairs,
)


def test_position_operator():
    np.testing.assert_array_equal(position_operator(make_moduli(2.0)), np.diag([0.0, math.pi]))
    np.testing.assert_allclose(
        np.diag(position_operator(make_moduli(3.0))).real, [0, 2 * math.pi / 3, -2 * math.pi / 3], atol=1e-15
    )
    assert position_operator(make_moduli(1.0)).tolist() == [[0j]]
    assert is_hermitian(position_operator(make_moduli(1.0, 0.0, 9)))


def test_shift_operator_small():
    assert shift_operator(1).tolist() == [[-1j]]
    np.testing.assert_array_equal(shift_operator(2), [[0, -1j], [-1j, 0]])


@pytest.mark.parametrize("n", range(1, 65))
def test_shift_operator_unitary(n):
    U = shift_operator(n)
    assert is_unitary(U, 1e-14)
    # U^dagger = U^{-1} acts as +i times the backward shift
    e = np.eye(n)
    for j in range(n):
        np.testing.assert_array_equal(U.conj().T @ e[:, j], 1j * e[:, (j - 1) % n])


def test_momentum_n1():
    np.testing.assert_allclose(momentum_operator(1), [[-math.pi / 2]], atol=1e-15)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 8, 13, 32])
def test_momentum_spectrum_and_exponential(n):
    P = momentum_operator(n)
    assert is_hermitian(P)
    k = np.arange(n)
    expected = np.angle(np.exp(1j * (2 * math.pi * k / n - math.pi / 2)))
    # principal branch keeps pi, never -pi
    expected[np.isclose(expected, -math.pi)] = math.pi
    np.testing.assert_allclose(np.linalg.eigvalsh(P), np.sort(expected), atol=1e-12)
    np.testing.assert_allclose(scipy.linalg.expm(1j * P), shift_operator(n), atol=1e-12)


def test_commutator_n2():
    m = make_moduli(2.0)
    C = commutator(position_operator(m), shift_operator(2))
    e = np.eye(2)
    np.testing.assert_allclose(C @ e[:, 0], -1j * math.pi * e[:, 1], atol=1e-15)
    np.testing.assert_allclose(C @ e[:, 1], 1j * math.pi * e[:, 0], atol=1e-15)


def test_commutator_self_and_shapes():
    A = np.arange(9.0).reshape(3, 3) + 1j
    assert not np.any(commutator(A, A))
    with pytest.raises(DimensionMismatch):
        commutator(np.eye(2), np.eye(3))


@pytest.mark.parametrize("n", range(1, 33))
def test_commutator_formula(n):
    q = position_grid(n).points
    C = commutator(position_operator(make_moduli(1.0, 0.0, n)), shift_operator(n))
    expected = np.zeros((n, n), dtype=complex)
    for j in range(n):
        expected[(j + 1) % n, j] += -1j * (q[(j + 1) % n] - q[j])
    np.testing.assert_allclose(C, expected, atol=1e-12)


def test_hamiltonian_examples():
    assert build_hamiltonian(make_moduli(1.0, 0.0)).tolist() == [[-1 + 0j]]
    h1 = build_hamiltonian(make_moduli(1.0, math.pi / 3))
    np.testing.assert_allclose(h1, [[-0.5]], atol=1e-15)
    np.testing.assert_allclose(build_hamiltonian(make_moduli(2.5, 0.0)), np.diag([-1.0, 0.0]), atol=1e-15)
    expected = np.array(
        [[-1, -0.5j, 0.5j], [0.5j, -1, -0.5j], [-0.5j, 0.5j, -1]],
    )
    np.testing.assert_allclose(build_hamiltonian(make_moduli(3.0, 0.0)), expected, atol=1e-15)


@settings(max_examples=60, deadline=None)
@given(st.floats(0.1, 40.0), st.floats(-10.0, 10.0), st.integers(1, 40))
def test_hamiltonian_routes_agree_and_hermitian(beta, delta, n):
    m = make_moduli(beta, delta, n)
    H = build_hamiltonian(m)
    assert is_hermitian(H, 1e-12)
    np.testing.assert_allclose(H, hamiltonian_from_operators(m), atol=1e-14, rtol=0)
    E = np.linalg.eigvalsh(H)
    assert E[0] >= -2 - 1e-12 and E[-1] <= 2 + 1e-12


def test_kinetic_off_is_diagonal():
    H = build_hamiltonian(make_moduli(1.0, 0.0, 6), kinetic=False)
    np.testing.assert_allclose(H, np.diag(-np.cos(position_grid(6).points)), atol=0)


@pytest.mark.parametrize("n", range(1, 65))
def test_heisenberg_obstruction(n):
    q = position_grid(n).points
    C = commutator(np.diag(q).astype(complex), momentum_operator(n))
    assert abs(np.trace(C)) <= 1e-12
    assert heisenberg_defect(n) >= math.sqrt(n) * (1 - 1e-12)


def test_heisenberg_small_cases():
    assert heisenberg_defect(1) == pytest.approx(1.0, abs=1e-15)
    assert heisenberg_defect(4) >= 2.0


def test_matrix_pairs_round_trip():
    H = build_hamiltonian(make_moduli(3.3, 0.4))
    pairs = matrix_to_pairs(H)
    assert pairs[0][1] == [0.0, -0.5]
    np.testing.assert_array_equal(matrix_from_pairs(pairs), H)
