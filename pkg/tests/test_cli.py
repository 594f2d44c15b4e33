import io
import json
import os
import subprocess
import sys
from contextlib import redirect_stdout

import pytest

from gridcross.cli import main
from gridcross.errors import ValidationError
from gridcross.experiments import ExperimentConfig, emit_report, run_experiment
from gridcross.graph import parse_graph


def run_cli(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


def test_gen_bipartite_round_trips():
    code, out = run_cli(["gen", "--kind", "bipartite", "--k", "2", "--dim", "3"])
    assert code == 0
    g = parse_graph(out)
    assert len(g.vertices) == 8 and len(g.edges) == 16


def test_gen_random_requires_seed():
    code, _ = run_cli(["gen", "--kind", "random", "--sides", "4x4", "--edges", "5"])
    assert code == 2


def test_cross_naive_on_generated_graph(tmp_path):
    path = tmp_path / "g.json"
    code, out = run_cli(["gen", "--kind", "bipartite", "--k", "2", "--dim", "3",
                         "--out", str(path)])
    assert code == 0
    code, out = run_cli(["cross", str(path), "--method", "naive"])
    assert code == 0
    doc = json.loads(out)
    assert doc["total"] == 10
    assert doc["per_edge_max"] == 3


def test_cross_all_certificates_sound(tmp_path):
    path = tmp_path / "g.json"
    run_cli(["gen", "--kind", "random", "--sides", "4x4", "--edges", "14",
             "--seed", "3", "--out", str(path)])
    code, out = run_cli(["cross", str(path), "--method", "all-certificates", "--p-max", "4"])
    assert code == 0
    doc = json.loads(out)
    assert doc["sound"] is True


def test_cross_rejects_improper_graph(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"dim":2,"vertices":[[1,1],[2,2],[3,3]],"edges":[[0,2]]}')
    code, _ = run_cli(["cross", str(path)])
    assert code == 2


def test_enum_counts_and_caps():
    code, out = run_cli(["enum", "--sides", "2x2"])
    assert code == 0
    doc = json.loads(out)
    assert (doc["subgraphs"], doc["matchings"], doc["spanning_trees"]) == ("48", "9", "12")
    code, _ = run_cli(["enum", "--sides", "9x9"])
    assert code == 3
    code, _ = run_cli(["enum", "--sides", "2x5", "--trees"])
    assert code == 3  # volume 10 exceeds the spanning-tree cap


def test_nt_table_values():
    code, out = run_cli(["nt", "--n-max", "3"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,phi,s1,s2,s3,s3_float"
    assert lines[3].startswith("3,2,4,6,275/216,")


def test_experiment_growth3d_records():
    code, out = run_cli(["experiment", "--kind", "growth3d", "--k-values", "2,3"])
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 3
    assert lines[1].split(",")[5] == "10"  # crossings at k=2


def test_experiment_certificates_sound():
    code, out = run_cli(["experiment", "--kind", "certificates", "--sides", "4x4",
                         "--edges", "10", "--seeds", "0,1,2,3,4,5,6,7,8,9",
                         "--format", "json"])
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 10
    assert all(r["sound"] for r in rows)
    assert all(r["pruned_equal"] for r in rows)


def test_experiment_validation_errors():
    code, _ = run_cli(["experiment", "--kind", "growth3d"])
    assert code == 2
    code, _ = run_cli(["experiment", "--kind", "growth_hd", "--k-values", "2", "--dim", "3"])
    assert code == 2


@pytest.mark.parametrize("argv", [
    ["gen", "--kind", "random", "--sides", "5x5", "--edges", "12", "--seed", "7"],
    ["gen", "--kind", "tiled", "--k", "2", "--side", "4", "--dim", "3"],
    ["enum", "--sides", "2x2x2"],
    ["nt", "--n-max", "50"],
    ["experiment", "--kind", "growth3d", "--k-values", "2,3", "--format", "json"],
    ["experiment", "--kind", "certificates", "--sides", "4x4,2x2x2", "--edges", "9",
     "--seeds", "5,6"],
    ["experiment", "--kind", "enumeration", "--sides", "2x2,1x3"],
])
def test_cli_byte_identical_reruns(argv):
    code1, out1 = run_cli(argv)
    code2, out2 = run_cli(argv)
    assert code1 == code2 == 0
    assert out1 == out2


def test_cli_subprocess_with_jit_disabled_matches_default_backend(tmp_path):
    # the env flag selects the numpy kernels; results must be identical bytes
    path = tmp_path / "g.json"
    run_cli(["gen", "--kind", "bipartite", "--k", "3", "--dim", "3", "--out", str(path)])
    code, expected = run_cli(["cross", str(path), "--method", "pruned"])
    assert code == 0
    env = dict(os.environ, GRIDCROSS_JIT="0")
    proc = subprocess.run(
        [sys.executable, "-m", "gridcross.cli", "cross", str(path), "--method", "pruned"],
        capture_output=True, text=True, env=env, check=True)
    assert proc.stdout == expected


def test_validation_failure_prints_one_line_error(capsys):
    code = main(["enum", "--sides", "0x2"])
    assert code == 2
    err = capsys.readouterr().err
    assert err.startswith("error: ") and err.count("\n") == 1


def test_cross_reduce_preprocesses_non_primitive_edges(tmp_path):
    path = tmp_path / "long.json"
    path.write_text('{"dim":2,"vertices":[[0,0],[4,6]],"edges":[[0,1]]}')
    code, out = run_cli(["cross", str(path), "--method", "all-certificates",
                         "--reduce", "--p-max", "2"])
    assert code == 0
    doc = json.loads(out)
    assert doc["certificates"]["essential-pgrid"] is not None


def test_emit_report_shapes():
    records = run_experiment(ExperimentConfig(kind="enumeration", sides=((2, 2),)))
    csv_text = emit_report(records, "csv")
    lines = csv_text.strip().splitlines()
    assert len(lines) == 2
    assert "elapsed_s" not in lines[0]
    timed = emit_report(records, "json", include_timing=True)
    assert "elapsed_s" in timed
    with pytest.raises(ValidationError):
        emit_report([], "csv")
    with pytest.raises(ValidationError):
        emit_report(records, "yaml")
