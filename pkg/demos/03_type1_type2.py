"""
Type-I and Type-II extensions
=============================

Both constructions double the input and add one hub vertex ``w``. Type-I
copies the input; Type-II copies its inversion and reads the arrows between
the two halves off a 0-1 matrix with prescribed row and column sums.
"""

import numpy as np

from regtourn import core, galeryser, scores
from regtourn.constructions import embed_type1, embed_type2

t = scores.realize((1, 1, 2, 2, 4))
print(t.outdegrees())

r1 = embed_type1(t)
w = r1.trace.witness[0]
print("type1:", r1.output.n, core.is_regular(r1.output), core.certify_type(r1.output, core.TYPE_I, w))

r2 = embed_type2(t)
c = r2.trace.matrixC
print("type2:", r2.output.n, core.is_regular(r2.output))
print(galeryser.format_matrix(c))

# Row and column i of C both sum to n - out(v_i).
n = t.n
print(galeryser.row_col_sums(c), tuple(n - s for s in t.outdegrees()))

# The block matrix of the output: A, C / (J - C)^T, A^T, plus the hub.
b = r2.output.adjacency()
print(np.array_equal(b[:n, :n], t.adjacency()), np.array_equal(b[n:2 * n, n:2 * n], t.adjacency().T))
print(np.array_equal(b[n:2 * n, :n], (1 - c).T))
print(core.certify_type(r2.output, core.TYPE_II, 2 * n))

# Feasibility and realization work for any sum vectors, not only these.
print(galeryser.feasible((3, 1, 1), (2, 2, 1)), galeryser.realize01((3, 1, 1), (2, 2, 1)))
