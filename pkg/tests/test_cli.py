import json
import math
import subprocess
import sys

import pytest

from cliquetensor.cli import main
from cliquetensor.graph import Graph, complete_multipartite, emit_edge_list, read_edge_list, turan_graph
from conftest import cycle, petersen


@pytest.fixture
def files(tmp_path):
    graphs = {
        "k4": Graph.complete(4),
        "t3_28": turan_graph(28, 3),
        "t3_6": turan_graph(6, 3),
        "petersen": petersen(),
        "k23": complete_multipartite((2, 3)),
        "c5": cycle(5),
        "k5": Graph.complete(5),
        "empty10": Graph.empty(10),
    }
    out = {}
    for name, g in graphs.items():
        path = tmp_path / f"{name}.el"
        path.write_text(emit_edge_list(g))
        out[name] = str(path)
    bad = tmp_path / "bad.el"
    bad.write_text("0 1\n2 2\n")
    out["bad"] = str(bad)
    return out


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


@pytest.mark.parametrize("name, count", [("k4", 4), ("t3_28", 810), ("petersen", 0)])
def test_cliques_count(files, capsys, name, count):
    code, data = run_json(capsys, "cliques", files[name], "--r", "3")
    assert code == 0 and data["count"] == count


def test_cliques_list(files, capsys):
    code, data = run_json(capsys, "cliques", files["k4"], "--r", "3", "--list")
    assert data["cliques"] == [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]
    code, out, _ = run(capsys, "cliques", files["k4"], "--r", "3", "--list", "--output", "text")
    assert out.splitlines()[1:] == ["0 1 2", "0 1 3", "0 2 3", "1 2 3"]


def test_spectral_octahedron(files, capsys):
    code, data = run_json(capsys, "spectral", files["t3_6"], "--r", "3")
    assert code == 0 and data["converged"]
    assert data["rho"] == pytest.approx(4.0, abs=1e-9)
    assert data["is_clique_connected"] and len(data["components"]) == 1


def test_spectral_k23(files, capsys):
    _, data = run_json(capsys, "spectral", files["k23"], "--r", "2")
    assert data["rho"] == pytest.approx(math.sqrt(6), abs=1e-9)


def test_spectral_empty(files, capsys):
    _, data = run_json(capsys, "spectral", files["empty10"], "--r", "3")
    assert data["rho"] == 0.0 and data["components"] == []


def test_spectral_nonconverged_exit_zero(files, capsys):
    code, data = run_json(capsys, "spectral", files["petersen"], "--r", "2", "--max-iter", "1")
    assert code == 0
    # Petersen is 3-regular so even one step is exact; use a less symmetric graph.
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 2)])
    path = files["k4"].replace("k4", "irregular")
    with open(path, "w") as fh:
        fh.write(emit_edge_list(g))
    code, data = run_json(capsys, "spectral", path, "--r", "2", "--max-iter", "2")
    assert code == 0 and data["converged"] is False
    assert data["lower"] <= data["upper"]


def test_turan_28_3(files, capsys, tmp_path):
    emit = tmp_path / "t.el"
    code, data = run_json(capsys, "turan", "--n", "28", "--r", "3", "--emit", str(emit))
    assert code == 0
    assert data["parts"] == [9, 9, 10]
    assert (data["clique_count"], data["floor_bound"]) == (810, 811)
    assert read_edge_list(emit) == turan_graph(28, 3)


@pytest.mark.parametrize("n, r, rho, count, floor", [(6, 3, 4.0, 8, 8), (4, 2, 2.0, 4, 4)])
def test_turan_small(capsys, n, r, rho, count, floor):
    _, data = run_json(capsys, "turan", "--n", str(n), "--r", str(r))
    assert data["rho_closed_form"] == pytest.approx(rho)
    assert (data["clique_count"], data["floor_bound"]) == (count, floor)


def test_turan_r_above_n(capsys):
    code, out, err = run(capsys, "turan", "--n", "2", "--r", "3")
    assert code == 2 and "exceeds" in err and out == ""


def test_bound_t3_28(files, capsys):
    code, data = run_json(capsys, "bound", files["t3_28"], "--r", "3")
    assert code == 0
    assert (data["c_r"], data["floor_bound"], data["equality"]) == (810, 811, False)


def test_mantel_c5(files, capsys):
    code, data = run_json(capsys, "mantel", files["c5"], "--r", "2")
    assert code == 0 and data["applicable"] and data["satisfied"]
    assert data["rho"] == pytest.approx(2.0)
    assert data["turan_rho"] == pytest.approx(math.sqrt(6))


def test_mantel_not_applicable(files, capsys):
    code, data = run_json(capsys, "mantel", files["k5"], "--r", "2")
    assert code == 0 and data["applicable"] is False and data["satisfied"] is None


def test_mantel_violation_exit_one(files, capsys):
    code, data = run_json(capsys, "mantel", files["t3_6"], "--r", "3", "--mantel-tol", "-1")
    assert code == 1 and data["satisfied"] is False


def test_scan_exhaustive(capsys):
    code, data = run_json(capsys, "scan", "--n", "6", "--r", "3", "--mode", "exhaustive")
    assert code == 0
    assert data["violation_count"] == 0
    assert data["max_rho"] == pytest.approx(4.0, abs=1e-9)
    assert data["witness_count"] >= 1 and data["witnesses_match"]


def test_scan_violation_exit_one(capsys):
    code, out, err = run(capsys, "scan", "--n", "4", "--r", "2", "--mantel-tol", "-1")
    assert code == 1 and "violation:" in err


def test_scan_usage_errors(capsys):
    assert run(capsys, "scan", "--n", "9", "--r", "2")[0] == 2
    assert run(capsys, "scan", "--r", "2")[0] == 2


def test_gap_table(capsys):
    _, data = run_json(capsys, "gap-table", "--n", "30", "--r", "3")
    row = next(row for row in data["rows"] if row["n"] == 28)
    assert (row["floor_bound"], row["erdos"], row["exact"]) == (811, 810, False)
    _, data = run_json(capsys, "gap-table", "--n", "12")
    assert {row["r"] for row in data["rows"]} == {2, 3, 4, 5}


def test_input_errors_exit_two(files, capsys, tmp_path):
    code, _, err = run(capsys, "cliques", files["bad"], "--r", "3")
    assert code == 2 and "line 2" in err
    code, _, err = run(capsys, "spectral", str(tmp_path / "missing.el"), "--r", "3")
    assert code == 2
    code, _, _ = run(capsys, "spectral", files["k4"], "--r", "1")
    assert code == 2
    code, _, _ = run(capsys, "spectral", files["k4"], "--r", "3", "--tol", "0")
    assert code == 2


def test_argparse_usage_exit_two(capsys):
    with pytest.raises(SystemExit) as info:
        main(["cliques"])
    assert info.value.code == 2


def test_text_output(files, capsys):
    code, out, _ = run(capsys, "bound", files["k4"], "--r", "3", "--output", "text")
    assert code == 0 and "c_r: 4" in out


def test_fifteen_significant_digits(files, capsys):
    _, out, _ = run(capsys, "turan", "--n", "28", "--r", "3")
    text = out.split('"rho_closed_form": ')[1].split(",")[0]
    assert len(text.replace(".", "").lstrip("0")) <= 15


def test_module_entry_point_byte_identical(files):
    cmd = [sys.executable, "-m", "cliquetensor", "spectral", files["t3_28"], "--r", "3"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second
    assert json.loads(first)["rho"] == pytest.approx(810 ** (2 / 3), abs=1e-8)
