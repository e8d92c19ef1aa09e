"""Command-line interface: output formats, determinism, config handling, exit codes."""
import json

import pytest

from qillum import cli

BOUNDS_ARGS = [
    "bounds", "--ns", "0.01", "--nb", "20", "--kappa", "0.01",
    "--m-min", "1e3", "--m-max", "1e6", "--m-points", "10",
]


def run_capture(capsys, argv):
    code = cli.run(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_bounds_csv_header_and_shape(capsys):
    code, out, _ = run_capture(capsys, BOUNDS_ARGS)
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "M,pe_cs_upper,pe_cs_lower,pe_qi_upper"
    assert len(lines) == 11
    row = [float(v) for v in lines[1].split(",")]
    assert len(row) == 4
    assert all(0 <= v <= 0.5 for v in row[1:])


def test_opa_csv_header(capsys):
    code, out, _ = run_capture(
        capsys,
        ["opa", "--ns", "0.01", "--nb", "20", "--kappa", "0.01",
         "--m-min", "1e3", "--m-max", "1e5", "--m-points", "5"],
    )
    assert code == 0
    assert out.split("\n")[0] == "M,pe_cs,pe_opa,pe_qi"


def test_roc_csv_header_and_grid(capsys):
    code, out, _ = run_capture(
        capsys, ["roc", "--ns", "0.01", "--nb", "20", "--kappa", "0.01", "--m", "1500000"]
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "pf,pd_ci,pd_opa,pd_ffsfg"
    assert len(lines) == 513
    first = [float(v) for v in lines[1].split(",")]
    assert first[0] == pytest.approx(1e-7)


def test_snr_csv(capsys):
    code, out, _ = run_capture(capsys, ["snr", "--pf", "0.01", "--points", "11"])
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "snr_db,pd_ci,pd_qi"
    assert len(lines) == 12


def test_wigner_single_mode_header(capsys):
    code, out, _ = run_capture(
        capsys, ["wigner", "--state", "coherent", "--alpha-re", "1", "--points", "5"]
    )
    assert code == 0
    assert out.split("\n")[0] == "x,p,w"


def test_wigner_two_mode_header(capsys):
    code, out, _ = run_capture(capsys, ["wigner", "--state", "tmsv", "--points", "5"])
    assert code == 0
    assert out.split("\n")[0] == "q1,q2,w"


def test_montecarlo_json_schema(capsys):
    argv = ["montecarlo", "--ns", "0.01", "--nb", "20", "--kappa", "0.01",
            "--m", "100000", "--receiver", "homodyne", "--trials", "5000", "--seed", "3"]
    code, out, _ = run_capture(capsys, argv)
    assert code == 0
    report = json.loads(out)
    assert report["schema_version"] == cli.SCHEMA_VERSION
    assert report["seed"] == 3
    assert sum(report["counts"].values()) == 5000
    assert 0 <= report["estimates"]["p_e"] <= 1


def test_feasibility_json(capsys):
    code, out, _ = run_capture(
        capsys,
        ["feasibility", "--freq-hz", "1e10", "--bandwidth-hz", "1e8", "--ns", "0.01",
         "--m", "1e6"],
    )
    assert code == 0
    report = json.loads(out)
    assert report["schema_version"] == cli.SCHEMA_VERSION
    assert report["T_s"] == pytest.approx(1e-2)
    assert report["M"] == pytest.approx(1e6)
    assert report["power_W"] == pytest.approx(6.62607014594008e-18, rel=1e-9)


def test_output_flag_writes_file(tmp_path, capsys):
    path = tmp_path / "bounds.csv"
    code, out, _ = run_capture(capsys, BOUNDS_ARGS + ["-o", str(path)])
    assert code == 0
    assert out == ""
    assert path.read_text().startswith("M,pe_cs_upper")


def test_deterministic_byte_identical_output(tmp_path):
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    assert cli.run(BOUNDS_ARGS + ["-o", str(p1)]) == 0
    assert cli.run(BOUNDS_ARGS + ["-o", str(p2)]) == 0
    assert p1.read_bytes() == p2.read_bytes()

    m1, m2 = tmp_path / "m1.json", tmp_path / "m2.json"
    mc = ["montecarlo", "--ns", "0.01", "--nb", "20", "--kappa", "0.01",
          "--m", "100000", "--receiver", "opa", "--trials", "2000", "--seed", "7"]
    assert cli.run(mc + ["-o", str(m1)]) == 0
    assert cli.run(mc + ["-o", str(m2)]) == 0
    assert m1.read_bytes() == m2.read_bytes()


def test_golden_bounds_first_row(capsys):
    # Frozen first data row guards the formatting contract (9 significant digits).
    code, out, _ = run_capture(
        capsys,
        ["bounds", "--ns", "0.01", "--nb", "20", "--kappa", "0.01",
         "--m-min", "1e3", "--m-max", "1e5", "--m-points", "5"],
    )
    assert code == 0
    assert out.split("\n")[1] == "1000,0.499390525,0.482543267,0.49750624"


def test_config_file_defaults_and_flag_priority(tmp_path, capsys):
    config = tmp_path / "cfg.json"
    config.write_text(json.dumps({"ns": 0.01, "nb": 20.0, "kappa": 0.01, "m": 1000}))
    argv = ["--config", str(config), "montecarlo", "--ns", "0.02", "--nb", "1", "--kappa", "1",
            "--m", "1", "--receiver", "homodyne", "--trials", "100", "--seed", "0"]
    # Flags given explicitly win; config supplies nothing new here.
    code, out, _ = run_capture(capsys, argv)
    assert code == 0

    # Config value fills a flag not given on the command line.
    argv2 = ["--config", str(config), "snr", "--pf", "0.01", "--points", "3"]
    config.write_text(json.dumps({"snr-db-max": 10.0}))
    code, out, _ = run_capture(capsys, argv2)
    assert code == 0
    assert out.strip().split("\n")[-1].startswith("10,")


def test_config_unknown_key_is_validation_error(tmp_path, capsys):
    config = tmp_path / "cfg.json"
    config.write_text(json.dumps({"bogus": 1}))
    code, _, err = run_capture(capsys, ["--config", str(config), "snr", "--pf", "0.01"])
    assert code == 2
    assert "bogus" in err


def test_invalid_parameter_exit_code(capsys):
    code, _, err = run_capture(
        capsys,
        ["bounds", "--ns", "0.01", "--nb", "20", "--kappa", "0.01", "--m-min", "-5"],
    )
    assert code == 2
    assert "error" in err


def test_missing_config_file_is_io_error(capsys):
    code, _, _ = run_capture(capsys, ["--config", "/nonexistent.json", "snr", "--pf", "0.01"])
    assert code == 1


def test_unknown_subcommand_exit_code():
    with pytest.raises(SystemExit) as exc:
        cli.run(["frobnicate"])
    assert exc.value.code == 2
