import json
from pathlib import Path

import numpy as np
import pytest

from tfq import io as tfq_io
from tfq.cli import run


@pytest.fixture(scope="module")
def schema():
    import jsonschema

    path = Path(__file__).resolve().parents[1] / "src/tfq/schemas/report.schema.json"
    with open(path) as fh:
        doc = json.load(fh)
    return lambda report: jsonschema.validate(report, doc)


def test_synth_writes_signal(tmp_path):
    out = tmp_path / "phi.csv"
    code = run(["synth", "--kind", "gaussian", "--lam", "1", "--n", "256",
                "--dx", "0.0625", "--output", str(out)])
    assert code == 0
    sig = tfq_io.read_signal(out)
    assert sig.n == 256
    x = sig.axis
    assert np.abs(sig.samples - np.exp(-np.pi * x**2)).max() == 0.0


def test_synth_two_atoms_energy(tmp_path):
    out = tmp_path / "atoms.csv"
    assert run(["synth", "--kind", "two_atoms", "--dt", "4", "--dnu", "0",
                "--n", "512", "--output", str(out)]) == 0
    sig = tfq_io.read_signal(out)
    assert abs(sig.energy() - 2.0) < 1e-8


def test_synth_from_file_roundtrip(tmp_path):
    first = tmp_path / "a.csv"
    second = tmp_path / "b.csv"
    assert run(["synth", "--kind", "chirp", "--rate", "0.5", "--n", "256",
                "--output", str(first)]) == 0
    assert run(["synth", "--kind", "from_file", "--path", str(first),
                "--output", str(second)]) == 0
    a = tfq_io.read_signal(first)
    b = tfq_io.read_signal(second)
    assert np.array_equal(a.samples, b.samples)
    assert a.same_grid(b)


def test_transform_wigner_roundtrip(tmp_path):
    sig = tmp_path / "phi.csv"
    mat = tmp_path / "w.mat"
    run(["synth", "--kind", "gaussian", "--n", "256", "--output", str(sig)])
    code = run(["transform", "--method", "wigner", "--input", str(sig),
                "--output", str(mat)])
    assert code == 0
    m = tfq_io.read_matrix(mat)
    assert m.grid.nx == 256 and m.grid.nw == 256
    assert m.domain_tag == "phase_space"
    # matches the library call byte for byte
    from tfq import wigner

    f = tfq_io.read_signal(sig)
    direct = wigner(f, f)
    assert np.array_equal(m.values, direct.values)


def test_transform_methods_agree_with_library(tmp_path):
    sig = tmp_path / "f.csv"
    run(["synth", "--kind", "gaussian", "--lam", "2", "--n", "256",
         "--output", str(sig)])
    for method, extra in [("stft", []), ("bj", []), ("tau", ["--tau", "0.3"])]:
        mat = tmp_path / f"{method}.mat"
        assert run(["transform", "--method", method, "--input", str(sig),
                    "--output", str(mat)] + extra) == 0


def test_kernel_subcommand(tmp_path, schema):
    out = tmp_path / "bj.mat"
    assert run(["kernel", "--kind", "bj", "--n", "64", "--dx", "0.125",
                "--output", str(out)]) == 0
    m = tfq_io.read_matrix(out)
    assert m.domain_tag == "ambiguity"
    n = m.grid.nx
    assert abs(m.values[n // 2, n // 2] - 1.0) < 1e-12


def test_norm_subcommand_json(tmp_path, capsys, schema):
    sig = tmp_path / "phi.csv"
    run(["synth", "--kind", "gaussian", "--n", "256", "--output", str(sig)])
    capsys.readouterr()  # drop the synth status line
    assert run(["norm", "--input", str(sig), "--p", "2", "--q", "2",
                "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    schema(report)
    assert abs(report["value"] - 2.0**-0.5) < 1e-5
    assert run(["norm", "--input", str(sig), "--p", "inf", "--q", "1",
                "--amalgam", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    schema(report)
    assert report["nesting"] == "frequency_inner"


def test_op_subcommand_identity(tmp_path):
    sig = tmp_path / "f.csv"
    assert run(["synth", "--kind", "gaussian", "--n", "128", "--dx", "0.125",
                "--output", str(sig)]) == 0
    f = tfq_io.read_signal(sig)
    from tfq import symbol_grid_for
    from tfq.grid import TFMatrix, PHASE_SPACE

    grid = symbol_grid_for(f)
    sym = tmp_path / "one.mat"
    tfq_io.write_matrix(
        TFMatrix(np.ones((grid.nx, grid.nw), dtype=complex), grid, PHASE_SPACE), sym
    )
    out = tmp_path / "g.csv"
    assert run(["op", "--rule", "bj", "--symbol", str(sym), "--input", str(sig),
                "--output", str(out)]) == 0
    g = tfq_io.read_signal(out)
    assert np.abs(g.samples - f.samples).max() < 1e-6


def test_oracle_subcommand(capsys, schema):
    assert run(["oracle", "--which", "fourier-symplectic", "--lam", "3",
                "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    schema(report)
    assert abs(report["re"] - 0.5) < 1e-12
    assert report["im"] == 0.0


def test_experiment_scaling_json(capsys, schema):
    assert run(["experiment", "scaling", "--family", "gaussian_mod",
                "--p", "2", "--q", "2", "--lambda-min", "16",
                "--lambda-max", "256", "--points", "6", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    schema(report)
    assert abs(report["exponent"] + 0.25) < 0.03
    assert len(report["table"]) == 6


def test_experiment_ghost_json(capsys, schema):
    assert run(["experiment", "ghost", "--signal", "two_atoms", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    schema(report)
    rows = {r["kernel"]: r for r in report["rows"]}
    assert rows["delta"]["ratio_vs_wigner"] == 1.0
    assert rows["born_jordan"]["ratio_vs_wigner"] < 0.5


def test_usage_errors_exit_2(capsys):
    assert run(["transform", "--method", "nope", "--input", "x",
                "--output", "y"]) == 2
    assert run(["norm", "--input", "f.csv", "--p", "2", "--q", "2",
                "--unknown-flag"]) == 2
    err = capsys.readouterr().err
    assert "usage" in err


def test_missing_input_exits_3(tmp_path):
    assert run(["transform", "--method", "wigner",
                "--input", str(tmp_path / "absent.csv"),
                "--output", str(tmp_path / "out.mat")]) == 3


def test_domain_error_exits_2(tmp_path):
    sig = tmp_path / "f.csv"
    run(["synth", "--kind", "gaussian", "--n", "256", "--output", str(sig)])
    assert run(["transform", "--method", "tau", "--tau", "1.7",
                "--input", str(sig), "--output", str(tmp_path / "o.mat")]) == 2


def test_synth_support_violation_exits_2(tmp_path):
    # a wide two-tone envelope cannot fit a small window
    assert run(["synth", "--kind", "two_tone", "--n", "128", "--dx", "0.0625",
                "--output", str(tmp_path / "x.csv")]) == 2
