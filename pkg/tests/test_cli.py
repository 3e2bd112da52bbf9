"""CLI subcommands: argument handling, JSON output, exit codes."""

import json

import pytest

from heavycycle.cli import main
from heavycycle.extremal import ExtremalParams, generate
from heavycycle.graphs import Graph, from_graph6, to_graph6


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out


def test_analyze_single_graph(capsys):
    code, out = run(capsys, "analyze", to_graph6(Graph.cycle(5)))
    assert code == 0
    rec = json.loads(out.strip())
    assert rec["circumference"] == 5


def test_realize_example(capsys):
    code, out = run(capsys, "realize", to_graph6(Graph.cycle(4)), "0,1,2")
    assert code == 0
    doc = json.loads(out)
    assert doc["cycle"] == [0, 1, 2, 3]
    assert doc["deficit"] == 1 and doc["iterations"] == 1


def test_realize_rejects_non_ocycle(capsys):
    code, _ = run(capsys, "realize", to_graph6(Graph.cycle(5)), "0,1,3")
    assert code == 1


def test_heavycycle_certificate(capsys):
    t1, _ = generate(ExtremalParams("t1", n=8))
    code, out = run(capsys, "heavycycle", to_graph6(t1))
    assert code == 0
    doc = json.loads(out)
    assert doc["cycle"] is None
    assert doc["certificate"]["kind"] == "two_heavy_bridge"


def test_circumference_command(capsys):
    code, out = run(capsys, "circumference", to_graph6(Graph.complete(5)))
    assert code == 0
    doc = json.loads(out)
    assert doc["length"] == 5 and doc["exhausted"]


def test_gen_and_roundtrip(capsys):
    code, out = run(capsys, "gen", "g1", "--r", "4", "--k", "10")
    assert code == 0
    g = from_graph6(out.strip())
    assert g.n == 22


def test_gen_roles(capsys):
    code, out = run(capsys, "gen", "t1", "--n", "8", "--roles")
    assert code == 0
    doc = json.loads(out)
    assert doc["roles"]["x"] == 0 and doc["n"] == 8


def test_gen_missing_params():
    with pytest.raises(SystemExit):
        main(["gen", "t1"])


def test_gen_invalid_params(capsys):
    with pytest.raises(ValueError):
        main(["gen", "g1", "--r", "4", "--k", "9"])


def test_verify_family_command(capsys):
    code, out = run(capsys, "verify-family", "g2", "--r", "4", "--k", "7")
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] and doc["exhausted"]


def test_verify_theorem_command(capsys):
    code, out = run(capsys, "verify", "--theorem", "1", "--max-n", "5")
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "holds"


def test_verify_theorem_with_jobs(capsys):
    code, out = run(capsys, "verify", "--theorem", "2", "--max-n", "5", "--jobs", "2")
    assert code == 0
    assert json.loads(out)["verdict"] == "holds"


def test_enumerate_command(capsys):
    code, out = run(capsys, "enumerate", "5")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 21
    assert all(from_graph6(line).n == 5 for line in lines)


def test_enumerate_two_connected(capsys):
    code, out = run(capsys, "enumerate", "5", "--two-connected")
    assert code == 0
    assert len(out.strip().splitlines()) == 10


def test_obstruction_command(capsys):
    code, out = run(capsys, "obstruction", to_graph6(Graph.path(5)))
    assert code == 0
    doc = json.loads(out)
    assert doc["pattern"] == "p4" and doc["exceptional"] is None


def test_obstruction_error_exit(capsys):
    code, _ = run(capsys, "obstruction", to_graph6(Graph.path(2)))
    assert code == 1


def test_config_file_defaults(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"max_n": 4}))
    code, out = run(capsys, "--config", str(cfg), "verify", "--theorem", "1")
    assert code == 0
    doc = json.loads(out)
    assert "n <= 4" in doc["corpus"]


def test_config_file_cli_wins(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"max_n": 4}))
    code, out = run(capsys, "--config", str(cfg), "verify", "--theorem", "1", "--max-n", "3")
    assert code == 0
    assert "n <= 3" in json.loads(out)["corpus"]


def test_analyze_output_file(tmp_path, capsys):
    out_path = tmp_path / "sweep.jsonl"
    code, _ = run(
        capsys, "analyze", "--max-n", "4", "--output", str(out_path),
        "--filter", "two-connected",
    )
    assert code == 0
    lines = out_path.read_text().splitlines()
    assert len(lines) == 4  # 1 + 3 two-connected classes at n=3,4
