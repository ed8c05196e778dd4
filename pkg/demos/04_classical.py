"""Classical motion on the torus and its small-amplitude limits."""

# %%
import numpy as np

from torusquant import ClassicalState, estimate_period, flow, limit_energies, make_moduli
from torusquant.classical import shifted_offsets

m = make_moduli(1.0, 0.0)

# %% Small oscillations have period 2 pi
traj = flow(ClassicalState(0.01, 0.0), m, 40.0, 1e-3)
print(f"period {estimate_period(traj):.6f}   2 pi {2 * np.pi:.6f}")

# %% Stormer-Verlet keeps the energy bounded over long runs
traj = flow(ClassicalState(1.0, 0.0), m, 100.0, 1e-3)
print("max energy drift:", np.abs(traj.H - traj.H[0]).max())

# %% Full, pendulum and harmonic energies near the origin
for q, p in [(0.1, 0.0), (0.0, 0.1), (0.1, 0.1), (0.05, 0.05)]:
    s = ClassicalState(q, p)
    full, pend, harm = shifted_offsets(s)
    print(f"(q, p) = ({q}, {p})  H+2 = {full:.8f}  H_SG+1 = {pend:.8f}  H_2 = {harm:.8f}")
print("raw values at (0.1, 0.1):", limit_energies(ClassicalState(0.1, 0.1)))
