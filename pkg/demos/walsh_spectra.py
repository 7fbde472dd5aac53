"""
Walsh spectra of a few power functions
======================================

Histograms of W_F(a, b) over b != 0, and the differential uniformity.
"""

from collections import Counter

from sidonkit import families, vbf
from sidonkit.gf2core import default_modulus

for n in (5, 6):
    ctx = default_modulus(n)
    for name, F in [
        ("x^3", families.gold_function(ctx, 1)),
        ("inverse", families.inverse_function(ctx)),
        ("x^7", families.power_function(ctx, 7)),
    ]:
        rows = vbf.walsh_spectrum(F).as_matrix()[1:]
        hist = Counter(rows.reshape(-1).tolist())
        print(f"n={n} {name:>7}: delta={vbf.differential_uniformity(F)} lin={vbf.linearity(F)}"
              f" quadratic={vbf.is_quadratic(F)} degree={vbf.algebraic_degree(F)}")
        print("    ", dict(sorted(hist.items())))

# Parseval: every component row has squared norm 2^(2n)
F = families.inverse_function(default_modulus(7))
rows = vbf.walsh_spectrum(F).as_matrix().astype(int)
print(set((rows ** 2).sum(axis=1).tolist()), 1 << 14)
