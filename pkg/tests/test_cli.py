import json

import pytest

from evencycles.core.graph import serialize_edge_list
from evencycles.main import cli_dispatch
from evencycles.oracle.generators import gen_complete_bipartite

from .graphs import complete_graph, cycle_graph


@pytest.fixture
def graph_file(tmp_path):
    def write(g, name="graph.txt"):
        path = tmp_path / name
        path.write_text(serialize_edge_list(g))
        return str(path)

    return write


def run(capsys, argv):
    code = cli_dispatch(argv)
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_disjoint_success(capsys, graph_file, k55):
    code, data = run(capsys, ["disjoint", "-k", "2", graph_file(k55)])
    assert code == 0
    assert data["schema"] == 1
    assert data["outcome"] == "success"
    assert [len(c) for c in data["family"]] == [4, 6]
    assert data["disjoint"] is True
    assert data["params"]["k"] == 2


def test_disjoint_failure_is_exit_one(capsys, graph_file, k48):
    code, data = run(capsys, ["disjoint", graph_file(k48)])
    assert code == 1
    assert data["outcome"] == "failure"
    assert data["family"] is None
    assert all(not stage["ok"] for stage in data["stages"] if stage["name"] != "partition")


def test_oracle(capsys, graph_file, k48, k55):
    code, data = run(capsys, ["oracle", graph_file(k48)])
    assert code == 1
    assert data["oracle"]["exists"] is False
    code, data = run(capsys, ["oracle", graph_file(k55, "k55.txt")])
    assert code == 0
    assert data["oracle"]["exists"] is True
    assert data["r"] == 2


def test_oracle_budget_is_exit_three(capsys, graph_file, k55):
    code, data = run(capsys, ["oracle", "--budget", "3", graph_file(k55)])
    assert code == 3
    assert data["error"] == "BudgetExceeded"


def test_verify_round_trip_and_tampering(capsys, graph_file, tmp_path, k55):
    path = graph_file(k55)
    report = tmp_path / "report.json"
    code, data = run(capsys, ["disjoint", path, "-o", str(report)])
    assert code == 0
    assert data is None

    code, data = run(capsys, ["verify", path, "-c", str(report)])
    assert code == 0
    assert data["ok"] is True
    assert data["kind"] == "family"

    tampered = json.loads(report.read_text())
    tampered["family"][0][1] = tampered["family"][0][0]
    report.write_text(json.dumps(tampered))
    code, data = run(capsys, ["verify", path, "-c", str(report)])
    assert code == 1
    assert data["ok"] is False
    assert data["invariant"] == "distinct"


def test_verify_single_certificate(capsys, graph_file, tmp_path, k55):
    cert = tmp_path / "cycle.json"
    cert.write_text(json.dumps({"kind": "cycle", "vertices": [0, 5, 1, 6]}))
    code, data = run(capsys, ["verify", graph_file(k55), "-c", str(cert)])
    assert code == 0
    assert data["kind"] == "cycle"

    cert.write_text(json.dumps({"kind": "cycle", "vertices": [0, 1, 5, 6]}))
    code, data = run(capsys, ["verify", graph_file(k55), "-c", str(cert)])
    assert code == 1
    assert data["invariant"] == "edge"


def test_verify_failure_report(capsys, graph_file, tmp_path, k48):
    report = tmp_path / "report.json"
    report.write_text(json.dumps({"schema": 1, "outcome": "failure", "family": None}))
    code, data = run(capsys, ["verify", graph_file(k48), "-c", str(report)])
    assert code == 1
    assert data["invariant"] == "outcome"


def test_find(capsys, graph_file):
    code, data = run(capsys, ["find", "-k", "2", graph_file(cycle_graph(10))])
    assert code == 1
    assert data["outcome"] == "failure"
    assert data["stages"][0]["name"] == "consecutive"


@pytest.mark.slow
def test_find_rejects_budget(capsys, graph_file, k55):
    code, data = run(capsys, ["find", "--budget", "5", graph_file(k55)])
    assert code == 2
    assert data["error"] == "UsageError"


def test_find_on_dense_graph(capsys, graph_file):
    code, data = run(capsys, ["find", "-k", "2", graph_file(complete_graph(13))])
    assert code == 0
    assert data["disjoint"] is False
    lengths = [len(c) for c in data["family"]]
    assert lengths[1] == lengths[0] + 2


def test_gen_to_stdout(capsys):
    code, data = run(capsys, ["gen", "complete-bipartite", "4", "8"])
    assert code == 0
    assert data["metadata"]["expected_average_degree"] == "16/3"
    assert (data["n"], data["m"]) == (12, 32)
    assert data["edge_list"].startswith("n 12\n0 4\n")


def test_gen_to_file(capsys, tmp_path):
    target = tmp_path / "theta.txt"
    code, data = run(capsys, ["gen", "theta", "1", "2", "2", "-o", str(target)])
    assert code == 0
    assert data["edge_list_path"] == str(target)
    assert data["certificate"]["kind"] == "theta"
    assert target.read_text().startswith("n 4\n")


def test_gen_random_is_reproducible(capsys):
    first = run(capsys, ["gen", "random", "30", "3", "--seed", "7"])
    second = run(capsys, ["gen", "random", "30", "3", "--seed", "7"])
    assert first == second


def test_gen_arity(capsys):
    code, data = run(capsys, ["gen", "theta", "1", "2"])
    assert code == 2
    assert data["error"] == "InvalidInput"


def test_stats(capsys, graph_file, k55):
    code, data = run(capsys, ["stats", graph_file(k55)])
    assert code == 0
    assert (data["n"], data["m"]) == (10, 25)
    assert data["average_degree"] == "5"
    assert data["degree_histogram"] == [0, 0, 0, 0, 0, 10]
    assert data["bipartite"] is True
    assert data["max_core_number"] == 5
    assert data["partition_preview"]["u"] == 10


@pytest.mark.parametrize(
    "argv",
    [["disjoint", "--no-such-flag"], [], ["gen", "unknown", "1"], ["disjoint", "-k", "1", "-"]],
)
def test_usage_errors_are_exit_two(capsys, argv):
    code, data = run(capsys, argv)
    assert code == 2
    assert "error" in data


def test_parse_error_is_exit_two(capsys, tmp_path):
    path = tmp_path / "loop.txt"
    path.write_text("0 1\n2 2\n")
    code, data = run(capsys, ["disjoint", str(path)])
    assert code == 2
    assert data["error"] == "SelfLoopError"
    assert "line 2" in data["message"]


def test_missing_file_is_exit_two(capsys, tmp_path):
    code, data = run(capsys, ["disjoint", str(tmp_path / "absent.txt")])
    assert code == 2
    assert data["error"] == "FileNotFoundError"


def test_output_is_deterministic(capsys, graph_file):
    path = graph_file(gen_complete_bipartite(4, 8).graph)
    first = run(capsys, ["disjoint", "-k", "2", path])
    second = run(capsys, ["disjoint", "-k", "2", path])
    assert first == second
