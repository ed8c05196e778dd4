"""Frozen reference values.

Factorisation study at beta = 1, delta = 0, measured with numpy.linalg.eigvalsh
and numpy.poly on the reordered Hamiltonian (independent of the package's
Jacobi and Faddeev-LeVerrier kernels).  Columns: normalised coefficient
defect of s_n - s_3 s_{n-3}, lowest corner-block eigenvalue, vacuum energy.
"""

FACTORIZATION_FIXTURES = {
    8: (0.32812499999999867, -1.5756659922051874, -1.645328776016073),
    12: (0.19784752386136886, -1.6432853946713946, -1.7550208042349642),
    16: (0.21600182569257975, -1.670070108348591, -1.8131480714547423),
    24: (0.20735764499568568, -1.6902749110128874, -1.8733405070354154),
}
