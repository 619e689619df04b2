"""CLI surface: subcommands, determinism, error objects."""

import json

import pytest

from specgraph import graph6_encode, pyramid_graph, star_graph
from specgraph.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_family_default_is_bare_graph6(capsys):
    code, out = run_cli(capsys, "family", "--star", "4")
    assert code == 0
    assert out.strip() == graph6_encode(star_graph(4))


def test_family_json(capsys):
    code, out = run_cli(capsys, "family", "--pyramid", "6", "3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["edges"] == 12
    assert payload["order"] == 6
    assert payload["graph6"] == graph6_encode(pyramid_graph(6, 3))
    assert payload["family"] == {"kind": "pyramid", "params": [6, 3]}


def test_family_dot(capsys):
    code, out = run_cli(capsys, "family", "--cycle", "4", "--format", "dot")
    assert code == 0
    assert out.startswith("graph G {")
    assert "3 -- 0;" in out or "0 -- 3;" in out


def test_charpoly_subcommand(capsys):
    code, out = run_cli(capsys, "charpoly", "--pyramid", "6", "3")
    payload = json.loads(out)
    assert code == 0
    assert payload["coefficients"] == [1, 0, -12, -20, -9, 0, 0]
    assert payload["factored"][-1] == {"coefficients": [1, -2, -9], "exponent": 1}


def test_spectrum_subcommand(capsys):
    code, out = run_cli(capsys, "spectrum", "--pyramid", "6", "3")
    payload = json.loads(out)
    assert code == 0
    assert payload["charpoly"] == [1, 0, -12, -20, -9, 0, 0]
    assert len(payload["eigenvalues"]) == 6
    assert payload["closed_form"][0]["kind"] == "quadratic-surd"


def test_spectrum_of_graph6_input(capsys):
    g6 = graph6_encode(star_graph(4))
    code, out = run_cli(capsys, "spectrum", g6)
    payload = json.loads(out)
    assert code == 0
    assert payload["charpoly"] == [1, 0, -4, 0, 0, 0]
    assert "closed_form" not in payload  # no family given


def test_cospectral_subcommand(capsys):
    star = graph6_encode(star_graph(4))
    code, out = run_cli(capsys, "cospectral", star, star)
    payload = json.loads(out)
    assert code == 0 and payload["cospectral"] and payload["isomorphic"]


def test_ds_composes_with_family(capsys):
    _, star_line = run_cli(capsys, "family", "--star", "4")
    code, out = run_cli(capsys, "ds", star_line.strip())
    payload = json.loads(out)
    assert code == 0
    assert payload["is_ds"] is False
    assert len(payload["mates"]) == 1
    assert payload["searched_order"] == 5


def test_cp_subcommand(capsys):
    code, out = run_cli(capsys, "cp", "--cycle", "5")
    payload = json.loads(out)
    assert code == 0
    assert payload["is_cp"] is False
    assert payload["reason"] == "long-odd-cycle-found"
    assert sorted(payload["witness"]) == [0, 1, 2, 3, 4]


def test_cycle_subcommand(capsys):
    code, out = run_cli(capsys, "cycle", "--complete", "4")
    payload = json.loads(out)
    assert code == 0 and payload["long_odd_cycle"] is None


def test_enumerate_subcommand(capsys, tmp_path):
    csv_path = tmp_path / "census.csv"
    code, out = run_cli(capsys, "enumerate", "5", "--csv", str(csv_path))
    payload = json.loads(out)
    assert code == 0
    assert payload["graph_count"] == 34
    assert len(payload["nontrivial_classes"]) == 1
    lines = csv_path.read_text().strip().splitlines()
    assert lines[0] == "graph6,charpoly,is_ds,is_cp"
    assert len(lines) == 35


def test_nu_subcommand_below_cap(capsys):
    code, out = run_cli(capsys, "nu", "--cap", "5")
    payload = json.loads(out)
    assert code == 0
    assert payload["nu"] is None


def test_output_is_deterministic(capsys):
    _, first = run_cli(capsys, "spectrum", "--pyramid", "7", "4")
    _, second = run_cli(capsys, "spectrum", "--pyramid", "7", "4")
    assert first == second


def test_table_format(capsys):
    code, out = run_cli(capsys, "charpoly", "--complete", "3", "--format", "table")
    assert code == 0
    assert "coefficients: [1, 0, -3, -2]" in out


def test_error_object_on_bad_graph6(capsys):
    code, out = run_cli(capsys, "cp", "D~~~~")
    assert code == 1
    payload = json.loads(out)
    assert payload["error"]["type"] == "Graph6Error"


def test_error_object_on_bad_family(capsys):
    code, out = run_cli(capsys, "family", "--pyramid", "3", "5")
    assert code == 1
    payload = json.loads(out)
    assert payload["error"]["type"] == "ParameterError"


def test_error_when_no_graph_given(capsys):
    code, out = run_cli(capsys, "charpoly")
    assert code == 1
    assert "error" in json.loads(out)


def test_usage_error_exits_nonzero():
    with pytest.raises(SystemExit) as exc:
        main(["family", "--pyramid", "six", "3"])
    assert exc.value.code == 2
