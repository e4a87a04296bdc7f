import json

import pytest

from minupsets import TournamentMatrix
from minupsets.cli import main

from golden import MULTI_MATRICES, UNIQUE_MATRIX


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--format", "json", *argv)
    return code, json.loads(out)


def test_analyze_unique(capsys):
    code, doc = run_json(capsys, "analyze", "2,2,2,2,2,5,6,7,9,9,9")
    assert code == 0
    assert doc["command"] == "analyze"
    res = doc["result"]
    assert res["feasible"] and res["unique"] and res["ell"] == 4
    assert res["decomposition"] == [
        {"type": "segment", "peak": 2, "middle_zeros": 1},
        {"type": "zeros", "length": 3},
        {"type": "segment", "peak": 1, "middle_zeros": 1},
    ]
    assert res["x"] == [[1, 2], [2, 1], [9, 1]]


def test_analyze_not_unique(capsys):
    code, doc = run_json(capsys, "analyze", "2, 2, 2, 2, 3, 5, 6, 8, 8, 8, 9")
    res = doc["result"]
    assert code == 0
    assert res["ell"] == 4 and res["unique"] is False and res["fail_position"] == 5


def test_analyze_transitive_text(capsys):
    code, out, _ = run(capsys, "analyze", "0,1,2")
    assert code == 0
    assert "min upsets:  0" in out and "unique:      yes" in out


def test_analyze_infeasible_is_a_result(capsys):
    code, doc = run_json(capsys, "analyze", "0,0,2")
    assert code == 0
    assert doc["result"]["verdict"] == "infeasible"
    assert doc["result"]["violation"] == {"kind": "sum", "index": 3, "detail": "sum 2 != C(3,2) = 3"}


@pytest.mark.parametrize("bad", ["1,x", "", "1,,2"])
def test_parse_error(capsys, bad):
    code, _, err = run(capsys, "analyze", bad)
    assert code == 2 and "cannot parse" in err


def test_matrices_unique(capsys):
    code, doc = run_json(capsys, "matrices", "2,2,2,2,2,5,6,7,9,9,9")
    assert code == 0
    res = doc["result"]
    assert res["total"] == 1
    assert res["matrices"][0]["tuple"] == [[1, 4], [1, 5], [2, 5], [9, 11]]
    assert "\n".join(res["matrices"][0]["rows"]) + "\n" == UNIQUE_MATRIX


def test_matrices_text_round_trip(capsys):
    code, out, _ = run(capsys, "matrices", "2,2,2,2,3,5,6,8,8,8,9")
    assert code == 0
    blocks = [b for b in out.split("# matrix ")[1:]]
    assert len(blocks) == 6
    parsed = {TournamentMatrix.from_text("\n".join(b.splitlines()[1:12])).rows for b in blocks}
    assert parsed == {TournamentMatrix.from_text(t).rows for t in MULTI_MATRICES}
    assert "# total: 6" in out


def test_matrices_limit_and_infeasible(capsys):
    code, doc = run_json(capsys, "matrices", "2,2,2,2,3,5,6,8,8,8,9", "--limit", "2")
    assert doc["result"]["truncated"] and doc["result"]["shown"] == 2 and doc["result"]["total"] == 6
    code, out, _ = run(capsys, "matrices", "0,1,2,3", "--format", "text")
    assert out.startswith("# matrix 1: \n0000\n1000\n1100\n1110\n")
    code, _, err = run(capsys, "matrices", "0,0,2")
    assert code == 1 and "infeasible" in err


def test_count(capsys):
    code, doc = run_json(capsys, "count", "4")
    assert code == 0
    assert doc["result"]["values"] == {"recurrence": 4, "linear": 4, "closed": 4}
    code, doc = run_json(capsys, "count", "5", "--list")
    assert len(doc["result"]["sequences"]) == 8
    assert [2, 2, 2, 2, 2] in doc["result"]["sequences"]
    code, out, _ = run(capsys, "count", "1", "--method", "linear")
    assert code == 0 and out.strip() == "a_1 (linear) = 1"


def test_count_large_n_agrees(capsys):
    code, doc = run_json(capsys, "count", "200")
    assert code == 0 and doc["result"]["agree"]


def test_count_disagreement_exit_code(capsys, monkeypatch):
    monkeypatch.setattr("minupsets.counting.count_unique_linear", lambda n: 5)
    code, _, _ = run(capsys, "count", "4")
    assert code == 3


def test_count_list_bound(capsys):
    code, _, _ = run(capsys, "count", "19", "--list")
    assert code == 2


@pytest.mark.parametrize("suite, max_n", [("census", "6"), ("count", "12"), ("families", "20")])
def test_verify_suites(capsys, suite, max_n):
    code, doc = run_json(capsys, "verify", "--suite", suite, "--max-n", max_n)
    assert code == 0 and doc["result"]["passed"]


def test_verify_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setattr("minupsets.oracle.count_unique_recurrence", lambda n: -1)
    code, doc = run_json(capsys, "verify", "--suite", "count", "--max-n", "3")
    assert code == 4
    assert doc["result"]["checks"][0]["counterexamples"][0] == {"n": 1, "census": 1, "a_n": -1}


def test_json_is_deterministic(capsys):
    first = run(capsys, "--format", "json", "matrices", "2,2,2,2,3,5,6,8,8,8,9")[1]
    second = run(capsys, "--format", "json", "matrices", "2,2,2,2,3,5,6,8,8,8,9")[1]
    assert first == second
