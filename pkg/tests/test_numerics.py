import math

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from conftest import exact_hamiltonian, sympy_to_object
from torusquant import (
    ConvergenceError,
    Polynomial,
    build_hamiltonian,
    charpoly_oracle,
    eigh,
    make_moduli,
    poly_eval,
    poly_mul,
)
from torusquant.numerics import faddeev_leverrier


def random_hermitian(rng, n):
    A = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return A + A.conj().T


def check_spectrum(H, spec, tol=1e-10):
    H = np.asarray(H, dtype=complex)
    E, V = spec.eigenvalues, spec.eigenvectors
    scale = max(1.0, np.linalg.norm(H, 2))
    assert np.all(np.diff(E) >= 0)
    for k in range(len(E)):
        assert np.linalg.norm(H @ V[:, k] - E[k] * V[:, k]) <= tol * scale
    np.testing.assert_allclose(V.conj().T @ V, np.eye(len(E)), atol=tol)
    assert np.linalg.norm(V @ np.diag(E) @ V.conj().T - H) <= 1e-9 * scale


def test_eigh_diagonal():
    spec = eigh(np.diag([-1.0, 0.0]))
    assert spec.eigenvalues.tolist() == [-1.0, 0.0]


def test_eigh_n3_closed_form():
    E = eigh(build_hamiltonian(make_moduli(3.0, 0.0))).eigenvalues
    r = math.sqrt(3) / 2
    np.testing.assert_allclose(E, [-1 - r, -1, -1 + r], atol=1e-13)


def test_eigh_n4_fourier():
    E = eigh(build_hamiltonian(make_moduli(4.0, 0.0))).eigenvalues
    np.testing.assert_allclose(E, [-2, -1, -1, 0], atol=1e-13)


@pytest.mark.parametrize("n", [1, 2, 3, 7, 16, 40])
def test_eigh_random(rng, n):
    H = random_hermitian(rng, n)
    spec = eigh(H)
    check_spectrum(H, spec)
    np.testing.assert_allclose(spec.eigenvalues, np.linalg.eigvalsh(H), atol=1e-11)


@settings(max_examples=40, deadline=None)
@given(st.floats(1.0, 30.0), st.floats(0.0, 6.3), st.integers(1, 24))
def test_eigh_on_hamiltonians(beta, delta, n):
    H = build_hamiltonian(make_moduli(beta, delta, n))
    spec = eigh(H)
    check_spectrum(H, spec)
    assert spec.eigenvalues.sum() == pytest.approx(np.trace(H).real, abs=1e-10)


def test_eigh_phase_convention(rng):
    V = eigh(random_hermitian(rng, 6)).eigenvectors
    for k in range(6):
        j = int(np.argmax(np.abs(V[:, k])))
        assert V[j, k].imag == 0.0 and V[j, k].real > 0


def test_eigh_deterministic(rng):
    H = random_hermitian(rng, 9)
    a, b = eigh(H), eigh(H.copy())
    assert np.array_equal(a.eigenvalues, b.eigenvalues)
    assert np.array_equal(a.eigenvectors, b.eigenvectors)


def test_eigh_degenerate_subspace():
    H = build_hamiltonian(make_moduli(8.0, 0.0))
    spec = eigh(H)
    check_spectrum(H, spec)
    E, V = spec.eigenvalues, spec.eigenvectors
    # projector onto the doubly degenerate level is basis independent
    w, U = np.linalg.eigh(H)
    for level in np.unique(np.round(E, 9)):
        mine = V[:, np.abs(E - level) < 1e-9]
        ref = U[:, np.abs(w - level) < 1e-9]
        np.testing.assert_allclose(mine @ mine.conj().T, ref @ ref.conj().T, atol=1e-10)


def test_eigh_sweep_budget(rng):
    with pytest.raises(ConvergenceError):
        eigh(random_hermitian(rng, 12), max_sweeps=1)


def test_charpoly_examples():
    np.testing.assert_allclose(charpoly_oracle(np.diag([-1.0, -1.0])).coeffs, [1, 2, 1])
    np.testing.assert_allclose(charpoly_oracle(build_hamiltonian(make_moduli(1.0, math.pi / 3))).coeffs, [0.5, 1])
    np.testing.assert_allclose(
        charpoly_oracle(build_hamiltonian(make_moduli(3.0, 0.0))).coeffs, [0.25, 2.25, 3, 1], atol=1e-14
    )


def test_charpoly_real_for_hermitian(rng):
    c = charpoly_oracle(random_hermitian(rng, 7)).coeffs
    assert c.dtype == float and c[-1] == 1.0


def test_charpoly_keeps_complex_for_general_input():
    c = charpoly_oracle(np.array([[1j, 0], [0, 2.0]])).coeffs
    assert np.iscomplexobj(c)
    np.testing.assert_allclose(c, [2j, -2 - 1j, 1])


@pytest.mark.parametrize(
    "cosines",
    [
        [1, 1, 1],
        [1, 1, 1, 1],
        [1, 0, -1, 0],
        [1, sympy.Rational(1, 2), sympy.Rational(-1, 2), -1, sympy.Rational(-1, 2), sympy.Rational(1, 2)],
        [sympy.Rational(1, 3), 0, 2, -1, sympy.Rational(5, 7)],
    ],
)
def test_faddeev_leverrier_exact(cosines):
    H = exact_hamiltonian(cosines)
    E = sympy.Symbol("E")
    expected = sympy.Poly((E * sympy.eye(len(cosines)) - H).det(), E).all_coeffs()[::-1]
    got = [sympy.nsimplify(sympy.expand(c)) for c in faddeev_leverrier(sympy_to_object(H))]
    assert [sympy.simplify(a - b) for a, b in zip(got, expected)] == [0] * len(expected)


@settings(max_examples=40, deadline=None)
@given(st.floats(1.0, 30.0), st.floats(0.0, 6.3), st.integers(1, 10))
def test_oracle_consistent_with_eigh(beta, delta, n):
    H = build_hamiltonian(make_moduli(beta, delta, n))
    c = charpoly_oracle(H).coeffs
    E = eigh(H).eigenvalues
    assert c[-1] == 1.0
    assert E.sum() == pytest.approx(-c[-2], abs=1e-10)
    prod = np.prod(E)
    assert prod == pytest.approx((-1) ** n * c[0], rel=1e-8, abs=1e-12)
    scale = max(1.0, np.max(np.abs(c)))
    assert np.max(np.abs(poly_eval(Polynomial(c), E))) <= 1e-10 * scale


def test_oracle_roots_match_eigh(rng):
    for n in range(2, 9):
        m = make_moduli(float(rng.uniform(n, n + 1)), float(rng.uniform(0, 6.28)))
        H = build_hamiltonian(m)
        roots = np.sort(np.polynomial.polynomial.polyroots(charpoly_oracle(H).coeffs).real)
        np.testing.assert_allclose(roots, eigh(H).eigenvalues, atol=1e-8)


def test_poly_helpers():
    a = Polynomial([1.0, 1.0])
    sq = poly_mul(a, a)
    np.testing.assert_array_equal(sq.coeffs, [1, 2, 1])
    assert poly_eval(sq, -1.0) == 0.0
    assert sq(2.0) == 9.0
    b = Polynomial([3.0, 0.0, 5.0, 1.0])
    assert poly_mul(a, b).degree == a.degree + b.degree
    np.testing.assert_array_equal((a + b).coeffs, [4, 1, 5, 1])
