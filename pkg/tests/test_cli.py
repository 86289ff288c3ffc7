import json

from cyclecount.cli import main
from cyclecount.plane_graph import parse_cubic

from helpers import CORPUS, GRAPHS


from pathlib import Path


def g(name):
    return str(Path(GRAPHS) / (name + ".g"))


def test_count_theta(capsys):
    assert main(["count", g("theta")]) == 0
    assert capsys.readouterr().out.strip() == "3"


def test_count_include_empty(capsys):
    assert main(["count", g("theta"), "--include-empty"]) == 0
    assert capsys.readouterr().out.strip() == "4"


def test_count_by_length(capsys):
    assert main(["count", g("cube"), "--by-length"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines == ["4 6", "6 16", "8 6", "total 28"]


def test_count_json(capsys):
    assert main(["count", g("k4"), "--json", "--by-length"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["count"] == "7"
    assert data["by_length"] == {"3": "4", "4": "3"}


def test_length(capsys):
    assert main(["length", g("k4"), "--l", "3"]) == 0
    assert capsys.readouterr().out.strip() == "4"


def test_constrained(capsys):
    assert main(["constrained", g("k4"), "--require", "0"]) == 0
    assert capsys.readouterr().out.strip() == "4"


def test_constrained_overlap_is_an_input_error(capsys):
    assert main(["constrained", g("k4"), "--require", "0", "--forbid", "0"]) == 2
    assert "error" in capsys.readouterr().err


def test_partitions_sphere(capsys):
    assert main(["partitions", g("k4")]) == 0
    assert capsys.readouterr().out.strip() == "7"


def test_partitions_bordered(capsys):
    assert main(["partitions", g("k4"), "--border", "0,1,2"]) == 0
    assert capsys.readouterr().out.strip() == "4"


def test_oracle_and_verify(capsys):
    for name in CORPUS:
        assert main(["verify", g(name)]) == 0
        assert capsys.readouterr().out.strip() == "ok"


def test_invalid_graph_exits_2(capsys):
    assert main(["count", g("petersen")]) == 2
    assert "error" in capsys.readouterr().err


def test_missing_file_exits_2(capsys):
    assert main(["count", "/nonexistent/path.g"]) == 2
    capsys.readouterr()


def test_sample_deterministic(capsys):
    assert main(["sample", g("cube"), "--n", "3", "--seed", "9"]) == 0
    first = capsys.readouterr().out
    assert main(["sample", g("cube"), "--n", "3", "--seed", "9"]) == 0
    assert capsys.readouterr().out == first
    assert len(first.strip().splitlines()) == 3


def test_random_round_trips(capsys):
    assert main(["random", "--n", "12", "--seed", "3"]) == 0
    text = capsys.readouterr().out
    graph = parse_cubic(text)
    assert len(graph.vertices) == 12


def test_separator_stats(capsys):
    assert main(["separator-stats", g("dodecahedron"), "--tau", "6"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].split() == ["n_vertices", "separator_len", "balance"]
    assert len(lines) > 1


def test_stats_csv(tmp_path, capsys):
    out = tmp_path / "stats.csv"
    assert main(["count", g("dodecahedron"), "--tau", "6", "--stats", str(out)]) == 0
    capsys.readouterr()
    rows = out.read_text().strip().splitlines()
    assert rows[0] == "depth,n_vertices,separator_len,balance"
    assert len(rows) > 1
