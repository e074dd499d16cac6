"""
Growing regular tournaments and regularizing arbitrary ones
===========================================================

``plus_two`` adds two vertices to a regular tournament, ``pad_to_order``
repeats it, and ``embed_regular`` turns any tournament into a subtournament
of a regular one.
"""

import json

from regtourn import core
from regtourn.constructions import embed_regular, pad_to_order, plus_two

c3 = core.cycle3()
grown = plus_two(c3)
print(grown.output.outdegrees(), grown.trace.to_dict())

padded = pad_to_order(c3, 9)
print(padded.output.n, core.is_regular(padded.output))

# A transitive tournament is as far from regular as it gets.
t = core.transitive(5)
res = embed_regular(t)
print("order", res.output.n, "regular", core.is_regular(res.output))
print("embedding ok", core.is_embedding(t, res.output, res.embedding))

# The trace names the pivot v and the mirror vertex u, the balancing set B,
# and the vertices s0, X, Y used to close the triangle and the squares.
print(json.dumps(res.trace.to_dict(), indent=1)[:600])

# Output orders for every transitive tournament up to order 8.
print([embed_regular(core.transitive(n)).output.n for n in range(1, 9)])
