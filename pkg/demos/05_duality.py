"""One classical system, many quantum systems."""

# %%
import numpy as np

from torusquant import (
    ClassicalState,
    classical_equivalence_check,
    delta_grid,
    duality_certificate,
    make_moduli,
    moduli_scan,
)

# %% At beta = 1 shifting q absorbs delta: the classical flows coincide
s0 = ClassicalState(0.5, 0.2)
a, b = make_moduli(1.0, 0.0, 4), make_moduli(1.0, 3.0, 4)
print("classically equivalent:", classical_equivalence_check(a, b, s0, 10.0, 1e-3))

# %% ...but the quantum spectra move with delta
cert = duality_certificate(a, b)
print(f"max spectral difference {cert.max_spectral_difference:.4f}, duality {cert.is_duality}")

# %% Ground energy and gap along a full loop in delta
scan = moduli_scan(1.0, delta_grid(12), dim_override=4)
for row in scan:
    print(f"delta {row.delta:6.3f}  E0 {row.energy:8.4f}  gap {row.gap:7.4f}")

# %% Shifts by 2 pi / n only translate the grid, so those spectra agree
c = duality_certificate(make_moduli(1.0, 0.0, 4), make_moduli(1.0, np.pi / 2, 4))
print(f"delta = 0 vs pi/2 at n = 4: max difference {c.max_spectral_difference:.2e}")
