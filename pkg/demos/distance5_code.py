"""
A [191, 176, 5] binary code
===========================

Translate the 192-point Sidon set so it contains 0, drop 0, and use the rest
as parity-check columns.  Sidon plus sum-free means no 1..4 columns sum to
zero, so d >= 5; a weight-5 codeword shows d = 5 exactly.
"""

import io

import sidonkit
from sidonkit import codes

code = codes.sidon_to_code(sidonkit.sidon_15_192())
print("length, dimension, check bits:", code.length, code.dimension, code.t)
print("d >= 5:", codes.verify_distance_ge5(code))

d = codes.exact_min_distance(code, cap=5)
print("minimum distance:", d)
print("weight-5 support:", d.witness, "->", [code.columns[j] for j in d.witness])
assert codes.is_codeword(code, d.witness)

# parity-check matrix as text, and back
buf = io.StringIO()
codes.export_parity_check(code, buf)
text = buf.getvalue()
print(text.splitlines()[0], "/", len(text.splitlines()) - 1, "rows")
again = codes.import_parity_check(io.StringIO(text).readlines())
print("round trip:", again.columns == code.columns)

# a small one, checked against full codeword enumeration
small = codes.sidon_to_code(sidonkit.apn_slice_sidon(sidonkit.inverse_function(sidonkit.default_modulus(5))))
print(small.params, codes.exact_min_distance(small, cap=6), codes.min_distance_enumerate(small))
