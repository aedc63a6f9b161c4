"""Command-line interface: subcommands and exit codes."""
import json

import pytest
from click.testing import CliRunner

from diagmut import io
from diagmut.cli import main
from diagmut.seeds import dynkin_seed


@pytest.fixture
def runner():
    return CliRunner()


def _seed_file(tmp_path, t, rank, name="d.json"):
    p = tmp_path / name
    p.write_bytes(io.serialize(dynkin_seed(t, rank)))
    return str(p)


def test_seed_and_classify(runner, tmp_path):
    path = _seed_file(tmp_path, "A", 3)
    res = runner.invoke(main, ["classify", path])
    assert res.exit_code == 0
    assert "type=A3" in res.output and "family=A" in res.output


def test_classify_unknown_exits_3(runner, tmp_path):
    doc = {"format_version": 1,
           "vertices": [{"id": str(i)} for i in range(3)],
           "edges": [{"tail": "0", "head": "1", "weight": 4},
                     {"tail": "1", "head": "2", "weight": 4},
                     {"tail": "2", "head": "0", "weight": 4}]}
    p = tmp_path / "x.json"
    p.write_text(json.dumps(doc))
    res = runner.invoke(main, ["classify", str(p)])
    assert res.exit_code == 3 and "Unknown" in res.output


def test_parse_error_exits_2(runner, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    assert runner.invoke(main, ["classify", str(p)]).exit_code == 2


def test_usage_error_exits_1(runner):
    assert runner.invoke(main, ["nonsense"]).exit_code == 1
    assert runner.invoke(main, ["verify"]).exit_code == 1


def test_mutate_twice_is_identity(runner, tmp_path):
    path = _seed_file(tmp_path, "B", 2)
    out1 = tmp_path / "m1.json"
    res = runner.invoke(main, ["mutate", path, "-k", "0",
                               "-o", str(out1)])
    assert res.exit_code == 0
    res = runner.invoke(main, ["mutate", str(out1), "-k", "0"])
    assert res.exit_code == 0
    assert res.output.encode() == (tmp_path / "d.json").read_bytes()


def test_mutate_unknown_vertex_exits_2(runner, tmp_path):
    path = _seed_file(tmp_path, "A", 2)
    assert runner.invoke(main, ["mutate", path, "-k", "zz"]).exit_code == 2


def test_orbit_census(runner, tmp_path):
    path = _seed_file(tmp_path, "D", 4)
    res = runner.invoke(main, ["orbit", path])
    assert res.exit_code == 0
    assert "size=6 exhausted=true" in res.output
    assert "D_perp" in res.output


def test_export_dot(runner, tmp_path):
    path = _seed_file(tmp_path, "C1", 2)
    res = runner.invoke(main, ["export-dot", path])
    assert res.exit_code == 0 and res.output.startswith("digraph")


def test_verify_single_suite_with_report(runner, tmp_path):
    rep = tmp_path / "rep"
    res = runner.invoke(main, ["verify", "--type", "C1", "--rank", "2",
                               "--report", str(rep)])
    assert res.exit_code == 0
    assert (rep / "report.csv").exists()
    assert (rep / "class_sizes.png").exists()


def test_seed_rejects_bad_rank(runner):
    assert runner.invoke(main, ["seed", "D", "2"]).exit_code == 1
