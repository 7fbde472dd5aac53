"""
Sidon sets from graphs of APN functions
=======================================

The graph {(x, F(x))} of an APN function is a Sidon set in F_2^(2n).  Cutting
it with the hyperplane that sees the largest Walsh value keeps
2^(n-1) + lin(F)/2 points in one dimension less.  High linearity is what we
want here.
"""

from sidonkit import families, sidon, vbf
from sidonkit.gf2core import default_modulus

cases = [
    ("x^3", 4, families.gold_function),
    ("x^3", 5, families.gold_function),
    ("inverse", 5, families.inverse_function),
    ("inverse", 7, families.inverse_function),
    ("inverse", 9, families.inverse_function),
    ("dobbertin", 5, families.dobbertin_function),
    ("dobbertin", 10, families.dobbertin_function),
]

print(f"{'function':>10} {'n':>3} {'lin':>4} {'t':>3} {'size':>5} {'expected':>8}")
for name, n, make in cases:
    F = make(default_modulus(n))
    assert vbf.is_apn(F)
    lin = vbf.linearity(F)
    G = families.graph(F)
    res = sidon.best_hyperplane_slice(G)
    S = res.sliced
    assert sidon.is_sidon(S)
    print(f"{name:>10} {n:>3} {lin:>4} {S.t:>3} {len(S):>5} {families.apn_slice_size(n, lin):>8}")

# the inverse function's linearity has a closed form for odd n
for n in (5, 7, 9, 11):
    print(n, families.inverse_linearity_formula(n), vbf.linearity(families.inverse_function(default_modulus(n))))
