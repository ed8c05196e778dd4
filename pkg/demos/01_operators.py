"""Position, shift and momentum operators on a finite grid."""

# %%
import numpy as np

from torusquant import (
    commutator,
    heisenberg_defect,
    make_moduli,
    momentum_operator,
    position_grid,
    position_operator,
    shift_operator,
)

np.set_printoptions(precision=3, suppress=True, linewidth=100)

# %% The grid for n = 6 starts at q = 0 and wraps into (-pi, pi]
n = 6
print("grid / pi:", position_grid(n).points / np.pi)

# %% U shifts each grid point to the next one and is unitary
U = shift_operator(n)
print("U =\n", U)
print("|U U^+ - I| =", np.abs(U @ U.conj().T - np.eye(n)).max())

# %% [Q, U] only sees the jump of q between neighbouring sites
Q = position_operator(make_moduli(1.0, 0.0, n))
print("[Q, U] =\n", commutator(Q, U))

# %% No finite matrices satisfy [Q, P] = i: the trace of a commutator vanishes
P = momentum_operator(n)
C = commutator(Q, P)
print("tr [Q, P] =", np.trace(C).real)
for n in (2, 8, 32):
    print(f"n = {n:2d}   || [Q, P] - i || = {heisenberg_defect(n):.3f}   sqrt(n) = {np.sqrt(n):.3f}")
