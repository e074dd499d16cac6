import json

import pytest

from regtourn import harness
from regtourn.constructions import ExtensionResult, embed_regular, embed_type1
from regtourn.core import Tournament, build, cycle3, is_regular, transitive
from regtourn.harness import (
    VerificationReport,
    enumerate_labeled,
    min_regular_extension_oracle,
    run_suite,
    verify_extension,
    verify_greedy_over_scores,
)


def test_enumerate_labeled_counts():
    assert len(list(enumerate_labeled(2))) == 2
    three = list(enumerate_labeled(3))
    assert len(three) == 8
    assert sum(is_regular(t) for t in three) == 2
    four = list(enumerate_labeled(4))
    assert len(four) == 64 and not any(is_regular(t) for t in four)
    assert len({t.rows for t in four}) == 64
    assert [t.n for t in enumerate_labeled(0)] == [0]


def test_verify_extension_passes():
    for n in range(0, 6):
        for t in list(enumerate_labeled(n))[::5]:
            assert verify_extension(t, embed_type1(t), "type1").passed


def test_verify_extension_noop():
    rep = verify_extension(cycle3(), embed_regular(cycle3()), "inductive")
    assert rep.passed and embed_regular(cycle3()).output == cycle3()


def test_verify_extension_fault_injection():
    t = transitive(3)
    res = embed_type1(t)
    rows = list(res.output.rows)
    rows[1] &= ~1
    rows[0] |= 1 << 1
    tampered = ExtensionResult(Tournament.from_rows(rows), res.embedding, res.trace)
    rep = verify_extension(t, tampered, "type1")
    assert not rep.passed
    assert {f.violated for f in rep.failures} == {"regular", "embedding"}


def test_verify_extension_order_check():
    # the no-op inductive result has order 3, not 7, and no type witness
    rep = verify_extension(cycle3(), embed_regular(cycle3()), "type1")
    assert sorted(f.violated for f in rep.failures) == ["certify", "order"]


def test_oracle_examples():
    assert min_regular_extension_oracle(build(1, [])) == (1, build(1, []))
    order, ex = min_regular_extension_oracle(transitive(2))
    assert order == 3 and is_regular(ex) and ex.has_edge(1, 0)
    order, ex = min_regular_extension_oracle(transitive(3))
    assert order >= 5 and is_regular(ex)
    with pytest.raises(ValueError):
        min_regular_extension_oracle(transitive(5))


def test_oracle_transitive3_is_five():
    # the regular 5-tournament contains a transitive triple
    order, ex = min_regular_extension_oracle(transitive(3))
    assert order == 5
    assert [ex.has_edge(i, j) for i, j in [(1, 0), (2, 0), (2, 1)]] == [True] * 3


def test_oracle_report():
    rep = harness.oracle_report(4)
    assert rep.passed, rep.table()


def test_greedy_sweep_small():
    rep = verify_greedy_over_scores(3)
    assert rep.passed and rep.checked == 4
    assert rep.per_order == {1: {"checked": 1, "failures": 0}, 2: {"checked": 1, "failures": 0},
                             3: {"checked": 2, "failures": 0}}
    rep = verify_greedy_over_scores(6)
    assert rep.passed and rep.per_order[6]["checked"] == 22


def test_greedy_sweep_checkpoint_resume(tmp_path):
    ck = tmp_path / "ck.jsonl"
    first = verify_greedy_over_scores(9, checkpoint=str(ck))
    lines = ck.read_text().splitlines()
    assert lines
    # drop the last shard to simulate an interrupted run
    ck.write_text("\n".join(lines[:-3]) + "\n")
    second = verify_greedy_over_scores(9, checkpoint=str(ck))
    assert second.to_json() == first.to_json()
    assert len(ck.read_text().splitlines()) == len(lines)


def test_greedy_sweep_parallel_matches_serial():
    a = verify_greedy_over_scores(9, shards=1)
    b = verify_greedy_over_scores(9, shards=2)
    assert a.to_json() == b.to_json()


@pytest.mark.parametrize("tie_break", ["reverse", "label"])
def test_greedy_sweep_alternate_ties(tie_break):
    rep = verify_greedy_over_scores(9, tie_break=tie_break)
    assert rep.checked == 1 + 1 + 2 + 4 + 9 + 22 + 59 + 167 + 490
    assert tie_break in rep.scope


def test_greedy_over_labeled_and_decoupling():
    assert harness.verify_greedy_over_labeled(5).passed
    rep = harness.greedy_decoupling_report(5)
    assert rep.passed and rep.checked == 1 + 2 + 8 + 64 + 1024


def test_report_merge_and_json():
    a = VerificationReport("x")
    a.count(3)
    b = VerificationReport("x")
    b.count(3, ok=False)
    b.fail(cycle3(), "type1", "regular")
    m = a.merge(b)
    assert m.checked == 2 and not m.passed
    assert m.per_order == {3: {"checked": 2, "failures": 1}}
    assert m.to_json() == b.merge(a).to_json()
    back = VerificationReport.from_dict(json.loads(m.to_json()))
    assert back.to_json() == m.to_json()
    assert "FAIL" in m.table()
    assert "elapsed" not in m.to_dict() and "elapsed" in m.to_dict(timing=True)


def test_run_suite_small():
    rep = run_suite({"n_max": 4, "greedy_n_max": 6,
                     "families": ["core", "scores", "plus_two", "embeddings", "greedy", "decoupling", "oracle"]})
    assert rep.passed, rep.table()


def test_run_suite_fault_injection():
    rep = run_suite({"families": ["core"], "n_max": 3, "fault_injection": True})
    assert not rep.passed
    assert any(f.violated == "regular" for f in rep.failures)


def test_run_suite_rejects_bad_config():
    with pytest.raises(ValueError):
        run_suite({"nmax": 3})
    with pytest.raises(ValueError):
        run_suite({"families": ["nope"]})


def test_embedding_sweep_parallel_matches_serial():
    a = harness.sweep_embeddings(4, shards=1)
    b = harness.sweep_embeddings(4, shards=2)
    assert a.passed and a.to_json() == b.to_json()
