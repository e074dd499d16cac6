import json

import pytest

from regtourn import formats
from regtourn.cli import main
from regtourn.core import cycle3, is_regular, transitive
from regtourn.harness import enumerate_labeled


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def one_file(tmp_path):
    p = tmp_path / "one.json"
    p.write_text('{"n": 1, "edges": []}')
    return str(p)


def test_embed_type1_single_vertex(capsys, one_file):
    code, out, _ = run(capsys, "embed", "--kind", "type1", one_file)
    assert code == 0
    d = json.loads(out)
    t = formats.from_dict(d["output"])
    assert t.n == 3 and is_regular(t)
    assert d["embedding"] == [0] and "trace" not in d


def test_embed_with_trace(capsys):
    code, out, _ = run(capsys, "embed", "--kind", "type2", "--trace", "--edges", formats.to_json(transitive(3)))
    d = json.loads(out)
    assert code == 0 and d["trace"]["kind"] == "type2"
    assert [sum(r) for r in d["trace"]["matrixC"]] == [3, 2, 1]


@pytest.mark.parametrize("kind", ["regular", "type1", "type2", "greedy"])
def test_embed_kinds_dot(capsys, kind):
    code, out, _ = run(capsys, "embed", "--kind", kind, "--format", "dot", "--edges", formats.to_json(transitive(4)))
    assert code == 0 and is_regular(formats.from_dot(out))


def test_check_transitive(capsys):
    code, out, _ = run(capsys, "check", "--edges", formats.to_json(transitive(3)))
    d = json.loads(out)
    assert code == 0 and d["regular"] is False and d["scores"] == [0, 1, 2]
    assert d["type1"] is None


def test_check_regular(capsys):
    code, out, _ = run(capsys, "check", "--edges", formats.to_matrix_text(cycle3()))
    d = json.loads(out)
    assert d["regular"] and d["type1"]["vertex"] == 0 and d["type2"]["vertex"] == 0
    assert d["conditions"] == {"star": True, "dagger": True, "ddagger": True}


def test_scores_enumerate_and_realize(capsys):
    code, out, _ = run(capsys, "scores", "--enumerate", "3")
    assert code == 0 and out.split() == ["1,1,1", "0,1,2"]
    code, out, _ = run(capsys, "scores", "--realize", "1,1,1,3")
    assert code == 0 and sorted(formats.from_json(out).outdegrees()) == [1, 1, 1, 3]
    code, _, err = run(capsys, "scores", "--realize", "0,0,3")
    assert code == 2 and "Landau" in err


def test_galeryser(capsys):
    code, out, _ = run(capsys, "galeryser", "--realize", "--rows", "2,1", "--cols", "2,1")
    assert code == 0 and out.split() == ["11", "10"]
    code, out, _ = run(capsys, "galeryser", "--feasible", "--rows", "2,0", "--cols", "2,0")
    assert json.loads(out) == {"feasible": False}
    code, _, err = run(capsys, "galeryser", "--realize", "--rows", "2,0", "--cols", "2,0")
    assert code == 1 and err
    code, _, err = run(capsys, "galeryser", "--feasible", "--rows", "1,1", "--cols", "0,2")
    assert code == 2 and "nonincreasing" in err


def test_verify_conjecture(capsys):
    code, out, _ = run(capsys, "verify-conjecture", "--n-max", "6")
    d = json.loads(out)
    assert code == 0 and d["passed"] and d["per_order"]["6"]["checked"] == 22
    code2, out2, _ = run(capsys, "verify-conjecture", "--n-max", "6")
    assert out2 == out


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--order", "3")
    assert code == 0 and len(out.splitlines()) == 8
    code, a, _ = run(capsys, "enumerate", "--order", "5", "--sample", "4", "--seed", "7")
    code, b, _ = run(capsys, "enumerate", "--order", "5", "--sample", "4", "--seed", "7")
    assert a == b and len(a.splitlines()) == 4


@pytest.mark.parametrize("n", range(0, 6))
def test_export_round_trip(capsys, n, tmp_path):
    for t in list(enumerate_labeled(n))[::3]:
        for fmt in ("json", "dot", "matrix"):
            p = tmp_path / f"t.{fmt}"
            p.write_text(formats.to_json(t))
            code, out, _ = run(capsys, "export", "--format", fmt, str(p))
            assert code == 0 and formats.read_tournament(out) == t


def test_dot_edge_lines(capsys):
    code, out, _ = run(capsys, "export", "--format", "dot", "--edges", formats.to_json(transitive(6)))
    assert sum("->" in ln for ln in out.splitlines()) == 15


def test_input_errors(capsys, tmp_path):
    code, _, err = run(capsys, "check", "--edges", '{"n": 3, "edges": [[0, 1]]}')
    assert code == 2 and "missing edge" in err
    code, _, err = run(capsys, "check", str(tmp_path / "absent.json"))
    assert code == 2 and "cannot read" in err
    with pytest.raises(SystemExit) as info:
        main(["embed", "--bogus"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["embed", "--kind", "type3"])
    assert info.value.code == 2
