#!/usr/bin/env python3
"""
Test script for the kclique command line
Runs every subcommand end to end on small demo graphs
"""

import json

import pytest

from cli import EXIT_OK, EXIT_RUNTIME, EXIT_USAGE, format_number
from cli import main as cli_main
from demo_data import (
    complete_graph,
    complete_with_pendant,
    create_demo_files,
    gnp_graph,
    random_tree,
)
from graph_core import load_graph, save_edge_list


@pytest.fixture
def graph_file(tmp_path):
    """Write a graph to a temporary edge list and return its path as a string"""
    def write(g, name="graph.txt"):
        path = tmp_path / name
        save_edge_list(g, path)
        return str(path)
    return write


def _run(capsys, *argv):
    code = cli_main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_count_complete_graph(graph_file, capsys):
    path = graph_file(complete_graph(6))
    code, out, _ = _run(capsys, "count", "--input", path, "--k", 4)
    assert code == EXIT_OK
    assert out == "15\n"


def test_count_modes_agree(graph_file, capsys):
    path = graph_file(gnp_graph(30, 0.5, seed=2))
    outputs = set()
    for extra in (["--parallelism", "node"], ["--parallelism", "edge"], ["--no-induced"]):
        code, out, _ = _run(capsys, "count", "--input", path, "--k", 4, "--threads", 2, *extra)
        assert code == EXIT_OK
        outputs.add(out)
    assert len(outputs) == 1


def test_count_writes_per_vertex_list_and_id_map(tmp_path, capsys):
    path = tmp_path / "sparse.txt"
    path.write_text("# triangle with sparse ids\n10 20\n20 30\n30 10\n30 40\n")
    per_vertex, listing, id_map = tmp_path / "pv.tsv", tmp_path / "list.txt", tmp_path / "ids.tsv"
    code, out, _ = _run(capsys, "count", "--input", path, "--k", 3, "--per-vertex", per_vertex,
                        "--list", listing, "--id-map", id_map)
    assert code == EXIT_OK
    assert out == "1\n"
    assert per_vertex.read_text() == "10\t1\n20\t1\n30\t1\n40\t0\n"
    assert listing.read_text() == "10 20 30\n"
    assert id_map.read_text() == "0\t10\n1\t20\n2\t30\n3\t40\n"


def test_approx_single_color_is_exact(graph_file, capsys):
    path = graph_file(complete_graph(3))
    code, out, _ = _run(capsys, "approx", "--input", path, "--k", 3, "--colors", 1)
    assert code == EXIT_OK
    assert out == "1\n"


def test_approx_is_deterministic_per_seed(graph_file, capsys):
    path = graph_file(gnp_graph(40, 0.5, seed=3))
    argv = ["approx", "--input", path, "--k", 3, "--colors", 3, "--seed", 42]
    _, first, _ = _run(capsys, *argv)
    _, second, _ = _run(capsys, *argv, "--threads", 1)
    assert first == second


def test_approx_trials_and_variance_report(graph_file, tmp_path, capsys):
    path = graph_file(complete_graph(4))
    report = tmp_path / "report.json"
    code, out, _ = _run(capsys, "approx", "--input", path, "--k", 3, "--colors", 2,
                        "--trials", 5, "--variance", "--json", report)
    assert code == EXIT_OK
    assert "±" in out
    data = json.loads(report.read_text())
    assert data["result"]["analytic_variance"] == pytest.approx(24.0)
    assert data["result"]["trials"] == 5


def test_peel_complete_graph(graph_file, capsys):
    path = graph_file(complete_graph(5))
    for mode in ("exact", "approx"):
        code, out, _ = _run(capsys, "peel", "--input", path, "--k", 3, "--mode", mode)
        assert code == EXIT_OK
        assert out == "rho=1 density=2\n"


def test_peel_writes_cores_and_dense_set(graph_file, tmp_path, capsys):
    path = graph_file(complete_with_pendant(4))
    cores, dense = tmp_path / "cores.tsv", tmp_path / "dense.txt"
    code, out, _ = _run(capsys, "peel", "--input", path, "--k", 3, "--cores", cores, "--dense", dense)
    assert code == EXIT_OK
    assert out == "rho=2 density=1\n"
    assert cores.read_text() == "0\t3\n1\t3\n2\t3\n3\t3\n4\t0\n"
    assert dense.read_text() == "0\n1\n2\n3\n"


def test_peel_approx_with_cores_is_usage_error(graph_file, tmp_path, capsys):
    path = graph_file(complete_graph(5))
    code, out, err = _run(capsys, "peel", "--input", path, "--k", 3, "--mode", "approx",
                          "--cores", tmp_path / "cores.tsv")
    assert code == EXIT_USAGE
    assert out == ""
    assert "exact mode" in err


def test_usage_errors(graph_file, capsys):
    path = graph_file(complete_graph(3))
    assert _run(capsys, "count", "--input", path, "--k", 1)[0] == EXIT_USAGE
    assert _run(capsys, "count", "--input", path)[0] == EXIT_USAGE
    assert _run(capsys, "approx", "--input", path, "--k", 3, "--colors", 0)[0] == EXIT_USAGE
    assert _run(capsys, "orient", "--input", path, "--order", "random")[0] == EXIT_USAGE
    assert _run(capsys, "frobnicate")[0] == EXIT_USAGE


def test_runtime_errors(tmp_path, capsys):
    code, out, err = _run(capsys, "count", "--input", tmp_path / "missing.txt", "--k", 3)
    assert code == EXIT_RUNTIME
    assert out == ""
    bad = tmp_path / "bad.txt"
    bad.write_text("0 1\n1 two\n")
    code, _, err = _run(capsys, "count", "--input", bad, "--k", 3)
    assert code == EXIT_RUNTIME
    assert "line 2" in err


@pytest.mark.parametrize("content", [
    b"0 1\n1 \xff\n",
    b"0 1\n0 18446744073709551616\n",
    b"0 1\n+2 1_0\n",
])
def test_bad_input_bytes_are_runtime_errors(tmp_path, capsys, content):
    bad = tmp_path / "bad.txt"
    bad.write_bytes(content)
    code, out, err = _run(capsys, "count", "--input", bad, "--k", 3)
    assert code == EXIT_RUNTIME
    assert out == ""
    assert "line 2" in err


def test_orient_reports_max_out_degree(graph_file, tmp_path, capsys):
    assert _run(capsys, "orient", "--input", graph_file(complete_graph(4)))[1] == "max_out_degree=3\n"
    tree = graph_file(random_tree(12, seed=4), name="tree.txt")
    assert _run(capsys, "orient", "--input", tree, "--order", "kcore")[1] == "max_out_degree=1\n"

    ranking = tmp_path / "ranking.txt"
    code, _, _ = _run(capsys, "orient", "--input", tree, "--order", "goodrich", "--output", ranking)
    assert code == EXIT_OK
    assert sorted(int(x) for x in ranking.read_text().split()) == list(range(12))


def test_json_report(graph_file, tmp_path, capsys):
    path = graph_file(complete_graph(6))
    report = tmp_path / "run.json"
    code, out, err = _run(capsys, "count", "--input", path, "--k", 3, "--order", "barenboim",
                          "--json", report, "--verbose")
    assert code == EXIT_OK
    assert out == "20\n"
    assert "Loaded n=6 m=15" in err
    data = json.loads(report.read_text())
    assert data["schema"] == 1
    assert data["command"] == "count"
    assert (data["n"], data["m"], data["k"]) == (6, 15, 3)
    assert data["strategy"] == "barenboim_elkin"
    assert data["parallelism"] == "node"
    assert data["result"] == {"total": 20}
    assert set(data["seconds"]) == {"load", "orient", "compute"}


def test_quiet_runs_write_nothing_to_stderr(graph_file, capsys):
    _, _, err = _run(capsys, "count", "--input", graph_file(complete_graph(4)), "--k", 3)
    assert err == ""


def test_oracle_command(graph_file, capsys):
    code, out, _ = _run(capsys, "oracle", "--input", graph_file(complete_with_pendant(4)), "--k", 3)
    assert code == EXIT_OK
    result = json.loads(out)
    assert result["total"] == 4
    assert result["densest_subset"] == [0, 1, 2, 3]


def test_demo_files_round_trip(tmp_path, capsys):
    code = cli_main(["demo", "--output-dir", str(tmp_path)])
    assert code == EXIT_OK
    paths = create_demo_files(tmp_path, verbose=False)
    k6 = load_graph(paths["k6"])
    assert (k6.n, k6.m) == (6, 15)
    assert _run(capsys, "count", "--input", paths["k8"], "--k", 8)[1] == "1\n"


def test_run_entry_point(graph_file, tmp_path, monkeypatch, capsys):
    import run

    path = graph_file(complete_graph(5))
    monkeypatch.chdir(tmp_path)
    assert run.check_dependencies()
    assert run.main(["count", "--input", path, "--k", 3]) == EXIT_OK
    assert capsys.readouterr().out == "10\n"
    assert (tmp_path / "data").is_dir() and (tmp_path / "results").is_dir()


def test_format_number():
    assert format_number(15) == "15"
    assert format_number(2.0) == "2"
    assert format_number(1 / 3) == "0.333333"
    assert format_number(0.25) == "0.25"


def main():
    """Run all tests"""
    print("🚀 Running kclique command line tests...")
    raise SystemExit(pytest.main([__file__, "-q"]))


if __name__ == "__main__":
    main()
