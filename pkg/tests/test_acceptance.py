"""Acceptance criteria, one test per criterion.

Each test prints a PASS/FAIL line; the lines are repeated in the pytest
terminal summary. Run directly with ``python tests/test_acceptance.py`` for
the same lines without pytest.
"""

import sys

import pytest

from regtourn import formats, harness
from regtourn.constructions import embed_regular, embed_type1, embed_type2, greedy_type2

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run as a script
    ACCEPTANCE_LINES = []

REPORTS = {}


def record(name, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def criterion_1():
    return harness.sweep_embeddings(6, kinds=("inductive", "type1", "type2"))


def criterion_2(n_max=12):
    return harness.verify_greedy_over_scores(n_max)


def criterion_3():
    return harness.gale_ryser_oracle_report(4, 4)


def criterion_4():
    return harness.scores_chain_report(10)


def criterion_5():
    return harness.plus_two_report((3, 5, 7))


def criterion_6():
    return harness.oracle_report(4)


CRITERIA = {1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5, 6: criterion_6}


def _run(k):
    if k not in REPORTS:
        REPORTS[k] = CRITERIA[k]()
    return REPORTS[k]


def test_criterion_1_exhaustive_embeddings():
    rep = _run(1)
    expected = 3 * sum(1 << (n * (n - 1) // 2) for n in range(0, 7))
    ok = rep.passed and rep.checked == expected and rep.per_order[6]["checked"] == 3 * 32768
    record("1 exhaustive embeddings n<=6", ok,
           f"{rep.checked} checks, {len(rep.failures)} failures, {rep.elapsed:.1f}s")
    assert ok, rep.table()
    assert rep.elapsed < 600


def test_criterion_2_greedy_sweep(request):
    rep = _run(2)
    counts = [1, 1, 2, 4, 9, 22, 59, 167, 490, 1486, 4639, 14805]
    ok = rep.passed and [rep.per_order[n]["checked"] for n in range(1, 13)] == counts
    record("2 greedy sweep n<=12", ok,
           f"{rep.checked} score sequences, {len(rep.failures)} counterexamples, {rep.elapsed:.1f}s")
    assert ok, rep.table()
    if request.config.getoption("--extended"):
        ext = harness.verify_greedy_over_scores(14, n_min=13)
        ok = record("2x greedy sweep n=13..14", ext.passed,
                    f"{ext.checked} score sequences, {len(ext.failures)} counterexamples, {ext.elapsed:.1f}s")
        assert ok, ext.table()


def test_criterion_3_gale_ryser_oracle():
    rep = _run(3)
    record("3 Gale-Ryser oracle m,n<=4 entries<=4", rep.passed,
           f"{rep.checked} (P,Q) pairs, {len(rep.failures)} disagreements")
    assert rep.passed, rep.table()


def test_criterion_4_theorem_chain():
    rep = _run(4)
    ok = rep.passed and rep.elapsed < 60
    record("4 condition chain n<=10", ok,
           f"{rep.checked} score sequences, {len(rep.failures)} failures, {rep.elapsed:.1f}s")
    assert ok, rep.table()


def test_criterion_5_plus_two():
    rep = _run(5)
    # labeled regular tournaments of orders 3, 5, 7 found by filtering
    ok = rep.passed and rep.per_order[3]["checked"] == 2 and rep.per_order[5]["checked"] == 24
    record("5 plus_two on regular orders 3,5,7", ok,
           f"{rep.checked} regular inputs ({rep.per_order[7]['checked']} of order 7), {len(rep.failures)} failures")
    assert ok, rep.table()


def test_criterion_6_minimality():
    rep = _run(6)
    record("6 oracle minimality n<=4", rep.passed, f"{rep.checked} inputs, {len(rep.failures)} failures")
    assert rep.passed, rep.table()


def _fixtures():
    for n in range(0, 7):
        ts = list(harness.enumerate_labeled(n)) if n <= 4 else list(harness.enumerate_labeled(n))[::97]
        yield from ts
        for t in ts[::11]:
            for f in (embed_regular, embed_type1, embed_type2, greedy_type2):
                yield f(t).output


def test_criterion_7_determinism_and_formats():
    first = {k: _run(k).to_json() for k in CRITERIA}
    again = {k: CRITERIA[k]().to_json() for k in CRITERIA}
    diff = [k for k in CRITERIA if first[k] != again[k]]
    lossy = 0
    count = 0
    for t in _fixtures():
        count += 1
        for write in formats.WRITERS.values():
            if formats.read_tournament(write(t)) != t:
                lossy += 1
    ok = not diff and lossy == 0
    record("7 determinism and formats", ok,
           f"reports differing on rerun: {diff or 'none'}; {count} fixtures x 3 formats, {lossy} lossy")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
