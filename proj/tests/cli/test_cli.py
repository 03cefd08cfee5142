"""Black-box tests of the command-line tool (path in $SPHQUAD_CLI)."""

import math
import os
import subprocess

import pytest

CLI = os.environ["SPHQUAD_CLI"]

INTEGRATE_HEADER = "rule,N,t_or_n,function,transform,q_or_m,value,exact,abs_error,rel_error,wall_ms"


def run(*args, expect=0):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True, timeout=300)
    assert proc.returncode == expect, (args, proc.returncode, proc.stdout, proc.stderr)
    return proc


def csv_rows(text):
    lines = text.strip("\n").split("\n")
    return [line.split(",") for line in lines]


def test_help_and_missing_subcommand():
    assert "quadrature" in run("--help").stdout
    run(expect=2)
    run("no-such-command", expect=2)


def test_partition_stdout_and_file(tmp_path):
    out = run("partition", "6").stdout
    lines = [l for l in out.splitlines() if l and not l.startswith("#")]
    assert len(lines) == 6
    for line in lines:
        x, y, z = map(float, line.split())
        assert math.isclose(x * x + y * y + z * z, 1.0, rel_tol=1e-12)

    target = tmp_path / "centers.txt"
    msg = run("partition", "9", "--out", str(target)).stdout
    assert "N=9" in msg
    assert target.exists()
    run("partition", expect=2)  # N missing


def test_gen_design_verify_roundtrip(tmp_path):
    target = tmp_path / "design_t5_N36.txt"
    msg = run("gen-design", "5", "--out", str(target)).stdout
    assert "N=36" in msg and "t=5" in msg and "converged=true" in msg

    report = run("verify", str(target), "5", "1e-10").stdout
    assert "ok=true" in report

    # claiming a higher degree than the optimizer achieved must fail
    bad = run("verify", str(target), "7", "1e-10", expect=3)
    assert "ok=false" in bad.stdout


def test_gen_design_failure_modes(tmp_path):
    run("gen-design", "31", "--out", str(tmp_path / "x.txt"), expect=2)  # degree out of range
    run("gen-design", "8", "--out", str(tmp_path / "y.txt"),
        "--set", "max_iterations=1", expect=3)  # optimizer starved of iterations


def test_verify_rejects_non_design(tmp_path):
    centers = tmp_path / "centers.txt"
    run("partition", "20", "--out", str(centers))
    out = run("verify", str(centers), "5", "1e-12", expect=3).stdout
    assert "ok=false" in out


def test_integrate_csv_contract(tmp_path):
    out = tmp_path / "integrate.csv"
    run("integrate", "--set", "rule=equal_area", "--set", "N_list=100,400",
        "--set", "function=f1,f3", "--out", str(out))
    rows = csv_rows(out.read_text())
    assert ",".join(rows[0]) == INTEGRATE_HEADER
    assert len(rows) == 1 + 4  # 2 rules x 2 functions
    for row in rows[1:]:
        assert len(row) == 11
        assert row[0] == "equal_area"
        assert row[4] == "none" and row[5] == ""
        assert row[10] == ""  # timings off
        value, exact, abs_err, rel_err = map(float, row[6:10])
        assert math.isclose(abs_err, abs(value - exact), rel_tol=1e-12)
        assert math.isclose(rel_err, abs_err / abs(exact), rel_tol=1e-12)
    # equal-area rules converge on the smooth integrands
    f1_400 = next(r for r in rows[1:] if r[1] == "400" and r[3] == "f1")
    assert float(f1_400[9]) < 0.05


def test_integrate_design_and_transform():
    proc = run("integrate", "--set", "rule=design", "--set", "t_list=8",
               "--set", "function=f5", "--set", "transform=sidi", "--set", "grading=3",
               "--out", "-")
    rows = csv_rows(proc.stdout)
    assert rows[1][0] == "design" and rows[1][2] == "8" and rows[1][4] == "sidi"
    assert float(rows[1][5]) == 3.0
    assert float(rows[1][9]) < 0.05  # singular integrand, graded rule


def test_integrate_timings_column(tmp_path):
    out = tmp_path / "timed.csv"
    run("integrate", "--set", "rule=equal_area", "--set", "N_list=50",
        "--set", "timings=on", "--out", str(out))
    rows = csv_rows(out.read_text())
    assert float(rows[1][10]) >= 0.0


def test_integrate_rejects_bad_input(tmp_path):
    run("integrate", "--set", "rule=unknown", expect=2)
    run("integrate", "--set", "function=f9", expect=2)
    run("integrate", "--set", "transform=bogus", expect=2)
    run("integrate", "--set", "bogus_key=1", expect=2)
    run("integrate", "--set", "rule=file", expect=2)  # no points_file
    missing = tmp_path / "missing.txt"
    run("integrate", "--set", "rule=file", "--set", f"points_file={missing}", expect=2)


def test_integrate_deterministic_bytes(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["integrate", "--set", "rule=design", "--set", "t_list=6",
            "--set", "function=f2", "--threads", "3"]
    run(*args, "--out", str(a))
    run(*args, "--out", str(b))
    assert a.read_bytes() == b.read_bytes()
    assert b"\r" not in a.read_bytes()


def test_wce_command():
    proc = run("wce", "--set", "t_list=3,5", "--set", "s_list=1.5,2.5",
               "--set", "conjecture=off", "--out", "-")
    rows = csv_rows(proc.stdout)
    assert ",".join(rows[0]) == "pointset,N,t,s,wce,note"
    assert len(rows) == 1 + 4
    by_key = {(r[0], r[3]): float(r[4]) for r in rows[1:]}
    assert by_key[("design_t5", "1.5")] < by_key[("design_t3", "1.5")]
    for v in by_key.values():
        assert 0 < v < 2

    run("wce", "--set", "s_list=2", "--set", "conjecture=off", expect=2)  # s=2 undefined


def test_wce_conjecture_ladder():
    proc = run("wce", "--set", "t_list=", "--set", "conjecture_t=3",
               "--set", "conjecture_N_list=6,8", "--out", "-")
    rows = csv_rows(proc.stdout)
    labels = [r[0] for r in rows[1:]]
    assert labels == ["design_t3_N6", "design_t3_N8"]
    assert all(r[5] == "report-only" for r in rows[1:])


def test_geometry_command(tmp_path):
    out = tmp_path / "geometry.csv"
    run("geometry", "--set", "equal_area_N_list=50,100", "--resolution", "60",
        "--out", str(out))
    rows = csv_rows(out.read_text())
    assert ",".join(rows[0]) == "pointset,N,unique_N,resolution,mesh_norm,min_angle,mesh_ratio,wall_ms"
    assert len(rows) == 3
    for row in rows[1:]:
        assert row[3] == "60"
        h, delta, rho = float(row[4]), float(row[5]), float(row[6])
        assert rho >= 1.0 and math.isclose(rho, 2 * h / delta, rel_tol=1e-12)


def test_geometry_trapezoidal_dedup():
    proc = run("geometry", "--set", "trapezoidal_n_list=4", "--resolution", "40", "--out", "-")
    rows = csv_rows(proc.stdout)
    raw, unique = int(rows[1][1]), int(rows[1][2])
    assert raw == 5 * 9  # (n+1)(2n+1)
    assert unique < raw  # poles and seam collapse


def test_config_file_plus_override(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("rule = equal_area\nN_list = 30\nfunction = f3\n")
    out_a = run("integrate", "--config", str(cfg), "--out", "-").stdout
    out_b = run("integrate", "--config", str(cfg), "--set", "N_list=60", "--out", "-").stdout
    assert csv_rows(out_a)[1][1] == "30"
    assert csv_rows(out_b)[1][1] == "60"
    run("integrate", "--config", str(tmp_path / "absent.cfg"), expect=2)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
