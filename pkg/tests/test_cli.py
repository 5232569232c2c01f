import json

import pytest

from bitableaux.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_g_example(capsys):
    code, out, _ = run(capsys, "g", "--lam", "4,3", "--mu", "4,3", "--nu", "3,2,2")
    assert code == 0 and out.strip() == "1"


def test_g_sweep_table(capsys):
    code, out, _ = run(capsys, "g", "--sweep-k", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "lam,mu,nu,g"
    assert len(lines) == 28
    assert lines[1] == "3,3,3,1"


def test_word_example(capsys):
    code, out, _ = run(
        capsys,
        "word",
        "--method",
        "w",
        "--shape",
        "2,2,1",
        "--tableau",
        "[[[1,2],[2,1]],[[2,2],[2,2]],[[3,1]]]",
    )
    assert code == 0 and out.strip() == "22211"


def test_verify_thm2(capsys):
    code, out, _ = run(capsys, "verify-thm2", "--k", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "lam,mu,nu,crystal,oracle"
    assert lines[-1] == "OK k=3 triples=27"


def test_byte_identical_reruns(capsys):
    first = run(capsys, "crystal", "--shape", "2,1", "--n", "2", "--m", "2")
    second = run(capsys, "crystal", "--shape", "2,1", "--n", "2", "--m", "2")
    assert first == second and first[0] == 0


def test_enumerate_partitions(capsys):
    code, out, _ = run(capsys, "enumerate", "--k", "4")
    assert code == 0
    assert json.loads(out) == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]


def test_enumerate_bitableaux_round_trip(capsys):
    code, out, _ = run(capsys, "enumerate", "--shape", "2", "--n", "2", "--m", "2")
    assert code == 0
    items = json.loads(out)
    assert len(items) == 10
    for item in items:
        assert set(item) == {"shape", "rows", "n", "m"}


def test_weights(capsys):
    code, out, _ = run(
        capsys,
        "weights",
        "--tableau",
        "[[[1,2],[2,1]],[[2,2],[2,2]],[[3,1]]]",
        "--n",
        "3",
        "--m",
        "3",
    )
    assert code == 0
    assert json.loads(out) == {"a": [1, 3, 1], "b": [2, 3, 0]}


def test_rsk_and_jdt(capsys):
    code, out, _ = run(capsys, "rsk", "--tops", "1,1,2", "--bottoms", "2,3,1")
    assert code == 0
    pair = json.loads(out)
    assert pair["P"]["rows"] == [[1, 3], [2]]
    code, out, _ = run(
        capsys, "jdt", "--left", "[[1,3],[2]]", "--right", "[[1,1,2],[2,3]]"
    )
    assert code == 0
    assert json.loads(out)["rows"] == [[1, 1, 1, 2], [2, 2, 3], [3]]


def test_brsk_from_file(tmp_path, capsys):
    column = [[[1, 1]], [[1, 2]], [[2, 1]], [[2, 3]], [[2, 4]], [[3, 1]], [[3, 3]]]
    path = tmp_path / "column.json"
    path.write_text(json.dumps(column))
    code, out, _ = run(capsys, "brsk", "--in", str(path))
    assert code == 0
    pair = json.loads(out)
    assert pair["P"]["rows"] == [[1, 1, 1], [2, 3, 3], [4]]
    assert pair["Q"]["rows"] == [[1, 1, 2], [2, 2], [3, 3]]


def test_d_both_modes(capsys):
    code, out, _ = run(capsys, "d", "--lam", "2,1", "--mu", "2,1", "--nu", "2,1")
    assert code == 0 and out.strip() == "2"
    code, out, _ = run(
        capsys, "d", "--lam", "2", "--mu", "1,1", "--nu", "2", "--mode", "oracle"
    )
    assert code == 0 and out.strip() == "1"


def test_kron_tableaux_csv(capsys):
    code, out, _ = run(
        capsys, "kron-tableaux", "--lam", "4,3", "--p", "3", "--nu", "3,2,2"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "lam,p,nu,count,g,regime_flag"
    assert lines[1] == '"4,3",3,"3,2,2",2,1,0'


def test_skeleton_and_census(capsys):
    code, out, _ = run(capsys, "skeleton", "--shape", "2,2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["completions"] == 2
    assert payload["forced_vertex_count"] == 18
    code, out, _ = run(capsys, "skeleton", "--shape", "2,2")
    assert code == 0
    assert out.count("style=dashed") == 2
    code, out, _ = run(capsys, "census", "--shape", "2,2", "--completion", "1")
    assert code == 0
    rows = out.strip().splitlines()
    assert rows[0] == "mu,nu,count"
    assert len(rows) == 5


def test_completions_json(capsys):
    code, out, _ = run(capsys, "completions", "--shape", "2,2")
    assert code == 0
    assert len(json.loads(out)) == 2


def test_candidate_crystal_flag(capsys):
    code, out, _ = run(capsys, "crystal", "--candidate-21", "south")
    assert code == 0
    assert out.count(" -> ") == 20


def test_crystal_json_round_trips(capsys):
    code, out, _ = run(
        capsys, "crystal", "--shape", "2", "--n", "2", "--m", "2", "--format", "json"
    )
    assert code == 0
    graph = json.loads(out)
    assert {e["dir"] for e in graph["edges"]} == {"f"}
    assert len(graph["vertices"]) == 10
    for vertex in graph["vertices"]:
        assert set(vertex) == {"id", "payload", "weight_a", "weight_b"}


def test_word_row_method(capsys):
    code, out, _ = run(
        capsys, "word", "--method", "row", "--tableau", "[[1,1,1,2,2,3],[2,2,3],[3,4]]"
    )
    assert code == 0 and out.strip() == "34223111223"
    code, _, err = run(capsys, "word", "--method", "row")
    assert code == 1 and "error" in err


def test_usage_errors_exit_one(capsys):
    with pytest.raises(SystemExit) as err:
        main(["g", "--lam", "oops", "--mu", "1", "--nu", "1"])
    assert err.value.code == 1
    code, _, errtext = run(capsys, "enumerate")
    assert code == 1 and "error" in errtext


def test_mismatch_exit_code(capsys, monkeypatch):
    import bitableaux.cli as cli

    monkeypatch.setattr(cli, "count_d", lambda *a, **k: 99)
    code, out, err = run(capsys, "d", "--lam", "1", "--mu", "1", "--nu", "1")
    assert code == 2
    assert "MISMATCH" in err
