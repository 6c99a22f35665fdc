# tests/test_cli.py

import io
import json

import pytest

from app import cli
from app.analysis import explore as explore_module
from app.cli import main
from app.errors import InvariantViolation, ResourceLimitExceeded
from app.normalizers.enums import EXIT_INVARIANT, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE
from helpers import TRIANGLE_TEXT


def run_json(capsys, *argv):
    code = main([*argv, "--format", "json"])
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_betti_json(capsys, triangle_file):
    code, report = run_json(capsys, "betti", str(triangle_file), "--no-cache")
    assert code == EXIT_OK
    assert report["command"] == "betti"
    assert report["status"] == "ok"
    assert report["outputs"]["totals"] == [1, 3, 2]
    assert report["outputs"]["depth"] == 1
    assert report["tool_version"]


def test_retract_certificate(capsys, ex_no_file):
    code, report = run_json(capsys, "retract", str(ex_no_file), "--no-cache")
    assert code == EXIT_OK
    assert report["outputs"]["U"] == [1, 2, 3]
    assert report["outputs"]["retraction_checked"] is True
    assert report["certificates"]["private_variables"] == [1, 2, 3]


def test_summand_witness(capsys, triangle_file):
    code, report = run_json(capsys, "summand", str(triangle_file), "--no-cache")
    assert code == EXIT_OK
    assert report["outputs"]["status"] == "false"
    assert report["outputs"]["witness"] == [2, 0, 0]


def test_hilbert_and_dim(capsys, ex_no_file):
    code, report = run_json(capsys, "dim", str(ex_no_file), "--no-cache")
    assert report["outputs"]["dim"] == 4
    code, report = run_json(capsys, "hilbert", str(ex_no_file), "--degree", "3", "--no-cache")
    assert code == EXIT_OK
    assert report["outputs"]["dim"] == 4
    assert report["outputs"]["hilbert_function"][:2] == [1, 6]


def test_stdin_input(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(TRIANGLE_TEXT))
    code, report = run_json(capsys, "dim", "-", "--no-cache")
    assert code == EXIT_OK
    assert report["outputs"]["dim"] == 1


def test_text_and_json_agree(capsys, triangle_file, tmp_path):
    cache = str(tmp_path / "cache")
    code, report = run_json(capsys, "betti", str(triangle_file), "--cache-dir", cache)
    assert code == EXIT_OK
    assert main(["betti", str(triangle_file), "--cache-dir", cache]) == EXIT_OK
    lines = dict(line.split(": ", 1) for line in capsys.readouterr().out.splitlines())
    assert lines["cached"] == "true"
    assert json.loads(lines["outputs.totals"]) == report["outputs"]["totals"]
    assert json.loads(lines["outputs.graded.total"]) == report["outputs"]["graded"]["total"]


def test_cache_hit_is_flagged(capsys, triangle_file, tmp_path):
    cache = str(tmp_path)
    _, first = run_json(capsys, "dim", str(triangle_file), "--cache-dir", cache)
    _, second = run_json(capsys, "dim", str(triangle_file), "--cache-dir", cache)
    assert first["cached"] is False
    assert second["cached"] is True
    assert first["outputs"] == second["outputs"]


def test_resource_ceiling_exits_2(capsys, triangle_file):
    code, report = run_json(capsys, "summand", str(triangle_file), "--no-cache", "--limit-hilbert-basis", "1")
    assert code == EXIT_RESOURCE
    assert report["status"] == "partial"
    assert report["outputs"]["status"] == "unknown"


def test_kmax_ceiling_exits_2(capsys, triangle_file):
    code, report = run_json(
        capsys, "depth-function", str(triangle_file), "--no-cache", "--max-power", "3", "--limit-kmax", "2"
    )
    assert code == EXIT_RESOURCE
    assert report["outputs"]["depths"] == [1, 0]
    assert report["outputs"]["truncated_at"] == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        ["betti"],
        ["betti", "x.ideal", "--max-power", "many"],
        ["degree-selection", "--blocks", "1", "--vars", "2"],
    ],
)
def test_usage_errors_exit_1(capsys, argv):
    assert main(argv) == EXIT_USAGE
    assert "usage:" in capsys.readouterr().err


def test_input_errors_exit_1(capsys, tmp_path):
    missing = tmp_path / "missing.ideal"
    assert main(["betti", str(missing)]) == EXIT_USAGE

    bad = tmp_path / "bad.ideal"
    bad.write_text("vars: 3\nx1*y2\n")
    assert main(["betti", str(bad), "--no-cache"]) == EXIT_USAGE
    assert "line 2, column 4" in capsys.readouterr().err

    unit = tmp_path / "unit.ideal"
    unit.write_text("vars: 2\n1\n")
    assert main(["betti", str(unit), "--no-cache"]) == EXIT_USAGE

    mixed = tmp_path / "mixed.ideal"
    mixed.write_text("vars: 3\nx1\nx2*x3\n")
    assert main(["rees-hvector", str(mixed), "--no-cache"]) == EXIT_USAGE

    assert main(["dim", str(mixed), "--field", "fp:6", "--no-cache"]) == EXIT_USAGE


def test_depth_ceiling_in_analyze_exits_2(capsys, tmp_path):
    path = tmp_path / "path.ideal"
    path.write_text("vars: 3\nx1*x2\nx2*x3\n")
    code, report = run_json(
        capsys, "analyze", str(path), "--max-power", "3", "--degree-bound", "12",
        "--limit-closure", "1", "--no-cache",
    )
    assert code == EXIT_RESOURCE
    assert report["status"] == "partial"
    assert report["outputs"]["depths"] == []
    assert report["outputs"]["theorem_applies"] is True


def test_invariant_violation_exits_3(capsys, triangle_file, monkeypatch):
    def broken(*args, **kwargs):
        raise InvariantViolation("beta_1 mismatch")

    monkeypatch.setattr(cli, "run_command", broken)
    assert main(["betti", str(triangle_file), "--no-cache"]) == EXIT_INVARIANT
    assert "beta_1 mismatch" in capsys.readouterr().err


def test_degree_selection(capsys):
    code, report = run_json(
        capsys, "degree-selection", "--blocks", "1", "--subgroup", "2", "--vars", "2", "--no-cache"
    )
    assert code == EXIT_OK
    assert report["outputs"]["ideal"]["gens"] == [[2, 0], [1, 1], [0, 2]]

    code, report = run_json(
        capsys, "degree-selection", "--blocks", "1;2", "--subgroup", "1,1", "--vars", "2", "--no-cache"
    )
    assert report["outputs"]["generators"] == "(x1*x2)"


def test_graph_command(capsys):
    code, report = run_json(capsys, "graph", "--vars", "3", "--edges", "1-2,2-3", "--max-power", "2", "--no-cache")
    assert code == EXIT_OK
    assert report["outputs"]["consistent"] is True
    assert report["outputs"]["components"][0]["chain_holds"] is True


def test_small_exploration(capsys):
    code, report = run_json(
        capsys, "explore", "--nmax", "2", "--rmax", "2", "--max-power", "2", "--no-cache"
    )
    assert code == EXIT_OK
    assert report["outputs"]["analyzed"] == 3
    assert report["outputs"]["candidates"] == 0


def test_exploration_budget_is_partial(capsys):
    code, report = run_json(
        capsys, "explore", "--nmax", "2", "--rmax", "2", "--max-power", "2", "--budget", "1", "--no-cache"
    )
    assert code == EXIT_RESOURCE
    assert report["outputs"]["exhausted"] is True


@pytest.mark.slow
def test_ex_no_h_vector(capsys, ex_no_file):
    code, report = run_json(
        capsys, "rees-hvector", str(ex_no_file), "--degree-bound", "20", "--window", "4", "--no-cache"
    )
    assert code == EXIT_OK
    assert report["outputs"]["h_vector"] == [1, 2, 3, 4, 3, 1, -1]
    assert report["outputs"]["stable"] is True


@pytest.mark.slow
def test_ex_no_analysis(capsys, ex_no_file):
    code, report = run_json(
        capsys, "analyze", str(ex_no_file), "--max-power", "4", "--degree-bound", "20", "--no-cache"
    )
    assert code == EXIT_OK
    outputs = report["outputs"]
    assert outputs["summand"]["method"] == "retract"
    assert outputs["rees"]["status"] == "CertifiedNotCM"
    assert outputs["rees"]["negative_index"] == 6
    assert outputs["depths"] == [3, 3, 3, 3]
    assert outputs["theorem_applies"] is False


def test_exploration_ceiling_keeps_finished_records(capsys, monkeypatch):
    real_classify = explore_module.classify
    calls = []

    def classify_then_stop(args):
        calls.append(args)
        if len(calls) > 1:
            raise ResourceLimitExceeded("closure", 1)
        return real_classify(args)

    monkeypatch.setattr(explore_module, "classify", classify_then_stop)
    code, report = run_json(
        capsys, "explore", "--nmax", "2", "--rmax", "2", "--max-power", "2", "--no-cache"
    )
    assert code == EXIT_RESOURCE
    assert report["status"] == "partial"
    assert report["outputs"]["analyzed"] == 1
    assert report["outputs"]["enumerated"] == 3
    assert "1 of 3 ideals analyzed" in report["notes"][0]
