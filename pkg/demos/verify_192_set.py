"""
A maximal Sidon set of 192 points in F_2^15
===========================================

Load the bundled set, check that no four points xor to zero, that nothing
can be added, and look at its Walsh spectrum.
"""

import numpy as np

import sidonkit
from sidonkit import sidon

M = sidonkit.sidon_15_192()
print(M)

# pairwise sums are all distinct: 192*191/2 = 18336 of the 32767 nonzero vectors
print("sidon:", sidon.is_sidon(M))
print("sum-free:", sidon.is_sum_free(M))

# every point outside M is the sum of three points of M
blocked = sidon.blocked_points(M)
print("blocked points:", int(np.count_nonzero(blocked)), "of", 1 << M.t)
print("maximal:", sidon.is_maximal_sidon(M))

W = sidon.set_walsh(M).values
values, counts = np.unique(W[1:], return_counts=True)
print("nontrivial Walsh values:", dict(zip(values.tolist(), counts.tolist())))
print("linearity:", sidon.set_linearity(M), " span:", sidon.span_dimension(M))
