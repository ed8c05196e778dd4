"""The vacuum, its pairing structure and the corner factorisation."""

# %%
import numpy as np

from torusquant import degeneracy_pairing, factorization_defect, make_moduli, vacuum_report

# %% At beta = 4 the spectrum is -sin(2 pi k / 4): one lowest level, one degenerate pair
m = make_moduli(4.0, 0.0)
r = vacuum_report(m)
print(f"E0 = {r.energy:.6f}, gap = {r.gap:.6f}, nondegenerate = {r.nondegenerate}")
print("pairs with kinetic term:   ", degeneracy_pairing(m, kinetic_off=False).pairs)
print("pairs without kinetic term:", degeneracy_pairing(m, kinetic_off=True).pairs)

# %% The vacuum is localised at the bottom of the potential
r = vacuum_report(make_moduli(1.0, 0.0, 16))
print("largest amplitude at site", r.localization_index)
print("|psi|^2:", np.round(np.abs(np.array(r.vector)) ** 2, 3))

# %% Cutting out the 3x3 corner around q = 0
for n in (8, 12, 16, 24):
    f = factorization_defect(make_moduli(1.0, 0.0, n))
    print(
        f"n = {n:2d}  defect {f.defect:.4f}  corner E {f.corner_energy:.4f}  "
        f"vacuum E {f.vacuum_energy:.4f}  overlap {f.overlap:.3f}"
    )

# %% With the coupling blocks removed the factorisation is exact
print("defect without boxes:", factorization_defect(make_moduli(1.0, 0.0, 12), drop_boxes=True).defect)
