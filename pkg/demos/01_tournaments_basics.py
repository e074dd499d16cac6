"""
Tournaments, degrees and the two regular types
==============================================

Build a few small tournaments, look at their degrees and charges, invert
them, and ask whether a regular tournament is Type-I or Type-II.
"""

import numpy as np

from regtourn import core, formats

# A directed triangle is the smallest interesting tournament.
c3 = core.cycle3()
print(formats.to_matrix_text(c3))
print([core.degrees(c3, v) for v in range(3)])

# In the transitive tournament vertex i beats every j < i, so the score
# sequence is 0, 1, ..., n-1 and the charges run from n-1 down to -(n-1).
t5 = core.transitive(5)
print(core.score_sequence(t5), [core.degrees(t5, v).charge for v in range(5)])

# Every charge has the parity of n - 1.
print({core.degrees(t5, v).charge % 2 for v in range(5)})

# Inverting transposes the adjacency matrix.
a = t5.adjacency()
print(np.array_equal(core.invert(t5).adjacency(), a.T))
print(core.validate_tournament_matrix(a))

# Quadratic residues mod 7 give a regular tournament of order 7.
qr7 = core.rotational(7, [1, 2, 4])
print(core.is_regular(qr7), core.score_sequence(qr7))
print(core.certify_type(qr7, core.TYPE_I))
print(core.certify_type(qr7, core.TYPE_II))

# DOT output can go straight into graphviz.
print(formats.to_dot(c3))
