import json
import subprocess
import sys
from pathlib import Path

import pytest

from distinct_triangles.cli import main

HERE = Path(__file__).parent
DATA = HERE / "data"
GOLDEN = HERE / "golden"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    return code, json.loads(out) if out else None, err


def test_count_square(capsys):
    code, rep, _ = run_json(capsys, "count", DATA / "square.txt")
    assert code == 0 and rep["distinct_triangle_count"] == 1 and rep["schema"] == 1


def test_count_pentagon_text(capsys):
    code, out, _ = run(capsys, "count", DATA / "pentagon.txt", "--classes")
    assert code == 0
    assert out.splitlines() == ["points: 5", "distinct triangles: 2", "  1/5 1/5 2/5", "  1/5 2/5 2/5"]


def test_count_collinear_warns(capsys):
    code, rep, err = run_json(capsys, "count", DATA / "collinear3.txt")
    assert code == 0 and rep["distinct_triangle_count"] == 0
    assert "no noncollinear triple" in err


def test_count_lattice(capsys):
    code, rep, _ = run_json(capsys, "count", DATA / "lattice4.txt", "--classes")
    assert code == 0 and rep["kind"] == "eisenstein" and rep["distinct_triangle_count"] == 2


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("points\n0 0\n0.5 1\n")
    code, out, err = run(capsys, "count", bad)
    assert code == 2 and out == "" and "line 3" in err


@pytest.mark.parametrize("text", ["points\n0 0\n0 0\n1 1\n", "points\n0 0\n1 1\n", "circle\n0\n1/2\n1/2\n"])
def test_semantic_error_exit_code(tmp_path, capsys, text):
    f = tmp_path / "f.txt"
    f.write_text(text)
    assert run(capsys, "count", f)[0] == 3


def test_missing_file(capsys):
    assert run(capsys, "count", DATA / "nope.txt")[0] == 3


@pytest.mark.parametrize("name, case, flags, bound, actual", [
    ("square.txt", "Rhombus", {"is_square", "is_rectangle"}, 1, 1),
    ("kite.txt", "Kite", set(), 3, 3),
    ("three_collinear.txt", "ThreeCollinear", set(), 2, 3),
])
def test_classify(capsys, name, case, flags, bound, actual):
    code, rep, _ = run_json(capsys, "classify", DATA / name)
    assert code == 0
    assert rep["case"] == case and {k for k, v in rep["flags"].items() if v} == flags
    assert rep["bound"] == bound and rep["actual"] == actual and rep["bound_respected"]


def test_classify_text(capsys):
    code, out, _ = run(capsys, "classify", DATA / "square.txt")
    assert out.splitlines()[0] == "case: Rhombus(is_rectangle, is_square)"
    assert "bound: 1" in out and "actual: 1" in out


@pytest.mark.parametrize("name", ["pentagon.txt", "triangle.txt"])
def test_classify_rejects(capsys, name):
    assert run(capsys, "classify", DATA / name)[0] == 3


@pytest.mark.parametrize("n, p", [(6, 3), (9, 7), (100, 833)])
def test_ngon(capsys, n, p):
    code, rep, _ = run_json(capsys, "ngon", n)
    assert code == 0 and rep["p_n_3"] == rep["nearest_n2_over_12"] == p and rep["agree"]


def test_ngon_list_and_error(capsys):
    code, out, _ = run(capsys, "ngon", 9, "--list")
    assert code == 0 and "  4+3+2" in out.splitlines() and out.count("+") == 14
    assert run(capsys, "ngon", 2)[0] == 3


def test_search_examples(capsys):
    code, rep, _ = run_json(capsys, "search", "--circle", 10, "--n", 5)
    assert code == 0 and rep["best_count"] == 2 and ["0", "1/5", "2/5", "3/5", "4/5"] in rep["witness_sites"]
    code, rep, _ = run_json(capsys, "search", "--grid", 2, "--n", 4)
    assert rep["best_count"] == 1 and rep["exhaustive"]
    code, rep, _ = run_json(capsys, "search", "--circle", 14, "--n", 7)
    assert rep["best_count"] >= 4


def test_search_text_mentions_qualifier(capsys):
    code, out, _ = run(capsys, "search", "--circle", 10, "--n", 5)
    assert "exhaustive over CircleDivisions(D=10)" in out
    assert "witness: 0, 1/5, 2/5, 3/5, 4/5" in out


def test_search_budget_truncation_still_exits_zero(capsys):
    code, out, _ = run(capsys, "search", "--grid", 4, "--n", 6, "--budget", 10)
    assert code == 0 and "TRUNCATED" in out


def test_search_max_mode(capsys):
    code, rep, _ = run_json(capsys, "search", "--circle", 20, "--center", "--exactly", 2)
    assert code == 0 and rep["max_n"] == 5 and rep["exhaustive_over"] == "CircleDivisions(D=20, with_center)"
    assert ["0", "1/5", "2/5", "3/5", "4/5"] in rep["all_witness_sites"]


def test_search_errors(capsys):
    assert run(capsys, "search", "--grid", 2, "--n", 9)[0] == 3
    assert run(capsys, "search", "--grid", 1, "--n", 2)[0] == 3
    with pytest.raises(SystemExit):
        main(["search", "--grid", "3"])
    with pytest.raises(SystemExit):
        main(["search", "--grid", "3", "--circle", "5", "--n", "3"])


def test_verify(capsys):
    code, rep, _ = run_json(capsys, "verify", "theorem1")
    assert code == 0 and rep["ok"] and all(c["ok"] for c in rep["checks"])
    with pytest.raises(SystemExit):
        main(["verify", "nonsense"])


def test_verify_failure_exit_code(capsys, monkeypatch):
    from distinct_triangles import cli
    from distinct_triangles.verify import Check

    monkeypatch.setattr(cli, "run_suite", lambda *a, **k: [Check("x", False, "forced")])
    code, out, _ = run(capsys, "verify", "lemma")
    assert code == 1 and out.startswith("FAIL x: forced")


@pytest.mark.parametrize("name, n", [("hexagon.txt", 6), ("square_center.txt", 5), ("triangle.txt", 3)])
def test_render_counts(tmp_path, capsys, name, n):
    out = tmp_path / "o.svg"
    code, rep, _ = run_json(capsys, "render", DATA / name, "-o", out)
    svg = out.read_text()
    assert code == 0 and rep["segments"] == n * (n - 1) // 2
    assert svg.count("<line") == n * (n - 1) // 2 and svg.count("<circle") == n
    assert 'width="600" height="600"' in svg


def test_render_dashes_diameters(tmp_path, capsys):
    out = tmp_path / "o.svg"
    run(capsys, "render", DATA / "square_center.txt", "-o", out)
    assert out.read_text().count("stroke-dasharray") == 6  # two diameters, four radii


def test_render_unwritable(capsys, tmp_path):
    assert run(capsys, "render", DATA / "hexagon.txt", "-o", tmp_path / "no" / "dir" / "x.svg")[0] == 3


@pytest.mark.parametrize("name", ["hexagon", "square_center"])
def test_render_golden(tmp_path, capsys, name):
    for attempt in range(2):
        out = tmp_path / f"{attempt}.svg"
        run(capsys, "render", DATA / f"{name}.txt", "-o", out)
        assert out.read_bytes() == (GOLDEN / f"{name}.svg").read_bytes()


@pytest.mark.parametrize("golden, argv", [
    ("search_circle10_n5.json", ["search", "--circle", "10", "--n", "5"]),
    ("search_grid4_exactly1.json", ["search", "--grid", "4", "--exactly", "1"]),
    ("search_lattice2_n6.json", ["search", "--lattice", "2", "--n", "6"]),
    ("count_pentagon.json", ["count", str(DATA / "pentagon.txt"), "--classes"]),
])
def test_json_golden(capsys, golden, argv):
    expected = (GOLDEN / golden).read_text()
    for _ in range(2):
        _, out, _ = run(capsys, *argv, "--format", "json")
        assert out == expected


def test_log_appends_one_record_per_invocation(tmp_path, capsys):
    log = tmp_path / "runs.jsonl"
    run(capsys, "ngon", 6, "--log", log)
    run(capsys, "count", DATA / "square.txt", "--log", log)
    run(capsys, "--log", log, "count", DATA / "nope.txt")
    records = [json.loads(line) for line in log.read_text().splitlines()]
    assert [r["command"] for r in records] == ["ngon", "count", "count"]
    assert records[0]["result"]["p_n_3"] == 3 and records[0]["parameters"]["n"] == 6
    assert records[2]["exit_code"] == 3 and records[2]["result"] is None
    assert all({"wall_time", "version", "schema"} <= set(r) for r in records)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "distinct_triangles", "ngon", "6"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "p(n,3) = 3" in proc.stdout
