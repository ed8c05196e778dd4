import sys
import numpy as np
import pytest
import sympy


def exact_hamiltonian(cosines):
    """Hamiltonian with exact (sympy) potential values ``-cos theta_j``."""
    n = len(cosines)
    H = sympy.zeros(n, n)
    if n > 2:
        for k in range(n):
            H[(k + 1) % n, k] += sympy.I / 2
            H[(k - 1) % n, k] -= sympy.I / 2
    for j, c in enumerate(cosines):
        H[j, j] -= c
    return H


def sympy_to_object(M):
    return np.array(M.tolist(), dtype=object)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
