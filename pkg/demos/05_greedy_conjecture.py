"""
The greedy Type-II algorithm
============================

Run the greedy construction on one example with its relabel log, then sweep
every score sequence of small order and count non-regular outcomes.
"""

from regtourn import harness, scores
from regtourn.constructions import greedy_type2

t = scores.realize((0, 2, 2, 3, 3))
res = greedy_type2(t)
print("regular:", res.regular_verdict)
for step, order in enumerate(res.trace.relabel_log, start=1):
    print(step, order)

rep = harness.verify_greedy_over_scores(9)
print(rep.table())

# Tie order in the relabel step does not matter at these sizes either.
for tb in ("reverse", "label"):
    print(harness.verify_greedy_over_scores(9, tie_break=tb).table().splitlines()[0])

# Over labeled tournaments instead of score sequences.
print(harness.verify_greedy_over_labeled(5).table().splitlines()[0])
