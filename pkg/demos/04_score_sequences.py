"""
Score sequences and the conditions behind the Type-II construction
==================================================================

Enumerate score sequences, evaluate the three conditions on
``r_i = n - s_i``, and follow the Griggs-Reid operation down to the
transitive sequence.
"""

from regtourn import scores

for s in scores.enumerate_scores(5):
    print(s, scores.r_of(s), tuple(scores.evaluate_conditions(s)))

s = (2, 2, 2, 2, 2, 5, 6)
print(scores.is_landau(s))
for x in scores.griggs_reid_chain(s):
    print(scores.format_scores(x))

# Slack of the third condition at k = r_t is always positive for a
# nontransitive sequence.
print(min(scores.claim_a_slack(x) for x in scores.enumerate_scores(8) if x != tuple(range(8))))

print([len(list(scores.enumerate_scores(n))) for n in range(1, 11)])
