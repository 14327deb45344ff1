import math
import subprocess
import sys

from recoherence import (
    BandSpec,
    SqueezeState,
    Trajectory,
    band_coherence_shift_exact,
)


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "recoherence", *args],
        capture_output=True,
        timeout=300,
    )


def test_single_mode_default_table():
    proc = run_cli("single-mode")
    assert proc.returncode == 0
    lines = proc.stdout.decode().strip().split("\n")
    assert lines[0] == "t0,g,w_r,contrast_factor"
    assert len(lines) == 1 + 32  # default t0-grid
    first = lines[1].split(",")
    assert float(first[0]) == 0.0
    assert float(first[2]) < 0.0  # t0 = 0 sits outside the window
    # summary (window, bounds) goes to stderr, never into the CSV stream
    assert "window" in proc.stderr.decode()


def test_single_mode_grid_size_flag():
    proc = run_cli("single-mode", "--t0-grid", "5")
    assert proc.returncode == 0
    assert len(proc.stdout.decode().strip().split("\n")) == 6


def test_estimate_cavity_row():
    proc = run_cli("estimate", "cavity")
    assert proc.returncode == 0
    lines = proc.stdout.decode().strip().split("\n")
    assert lines[0].startswith("kind,ratio_RT")
    cells = lines[1].split(",")
    assert cells[0] == "cavity"
    averaged, exact = float(cells[-2]), float(cells[-1])
    assert 3e-8 < averaged < 3e-7
    assert 0.0 < exact < averaged


def test_estimate_empty_space_row():
    proc = run_cli("estimate", "empty-space")
    assert proc.returncode == 0
    cells = proc.stdout.decode().strip().split("\n")[1].split(",")
    assert cells[0] == "empty-space"
    assert 3e-7 < float(cells[-1]) < 3e-6


def test_band_row_matches_library():
    proc = run_cli("band", "--n-modes", "32")
    assert proc.returncode == 0
    header, row = proc.stdout.decode().strip().split("\n")
    cells = dict(zip(header.split(","), row.split(",")))
    state = SqueezeState(1.0)
    band = BandSpec(center=3.34, half_width=0.334, solid_angle=0.1)
    traj = Trajectory(apex=0.1, half_time=1.0)
    want = band_coherence_shift_exact(state, band, traj)
    assert math.isclose(float(cells["windowed_exact"]), want, rel_tol=1e-12)
    assert float(cells["mode_sum_rel_err"]) < 1e-3


def test_oracle_quick_grid_passes():
    proc = run_cli("oracle", "--grid", "quick")
    assert proc.returncode == 0
    stderr = proc.stderr.decode()
    assert "max relative error" in stderr
    lines = proc.stdout.decode().strip().split("\n")
    assert lines[0] == "omega_bar_T,r,t0,closed,quadrature,rel_err"
    assert len(lines) == 1 + 2 * 2 * 4
    worst = max(float(line.split(",")[-1]) for line in lines[1:])
    assert worst <= 1e-6


def test_oracle_starved_tolerance_exits_two():
    proc = run_cli(
        "oracle", "--grid", "quick", "--rel-tol", "1e-30", "--abs-tol", "1e-300"
    )
    assert proc.returncode == 2
    assert "did not converge" in proc.stderr.decode()


def test_sweep_determinism(tmp_path):
    out_a = tmp_path / "a.csv"
    out_b = tmp_path / "b.csv"
    args = ("sweep", "--vary", "r=0:2:5", "--vary", "omega-bar-T=1,3.34")
    assert run_cli(*args, "--output", str(out_a)).returncode == 0
    assert run_cli(*args, "--output", str(out_b)).returncode == 0
    assert out_a.read_bytes() == out_b.read_bytes()
    streamed = run_cli(*args)
    assert streamed.returncode == 0
    assert streamed.stdout == out_a.read_bytes()


def test_sweep_row_major_order():
    proc = run_cli("sweep", "--vary", "r=0,1", "--vary", "ratio-RT=0.05,0.1")
    lines = proc.stdout.decode().strip().split("\n")
    header = lines[0].split(",")
    i_r, i_ratio = header.index("r"), header.index("ratio_RT")
    grid = [(row.split(",")[i_r], row.split(",")[i_ratio]) for row in lines[1:]]
    # first --vary axis is the slow (outer) index
    assert grid == [
        ("0.0", "0.05"),
        ("0.0", "0.1"),
        ("1.0", "0.05"),
        ("1.0", "0.1"),
    ]


def test_sweep_marks_overflowing_rows():
    proc = run_cli("sweep", "--vary", "r=1,20", "--ratio-RT", "1e150")
    assert proc.returncode == 0
    lines = proc.stdout.decode().strip().split("\n")
    status = [row.split(",")[-1] for row in lines[1:]]
    assert status == ["ok", "range_error"]
    # overflowed cells are nan but the row survives
    assert "nan" in lines[2]


def test_sweep_degenerate_status():
    proc = run_cli("sweep", "--vary", "r=0,1")
    lines = proc.stdout.decode().strip().split("\n")
    assert lines[1].endswith("degenerate")
    assert lines[2].endswith("ok")


def test_config_file_supplies_defaults(tmp_path):
    ini = tmp_path / "run.ini"
    ini.write_text("[single-mode]\nr = 0.5\nt0-grid = 3\n", encoding="utf-8")
    proc = run_cli("single-mode", "--config", str(ini))
    assert proc.returncode == 0
    lines = proc.stdout.decode().strip().split("\n")
    assert len(lines) == 4
    g0 = float(lines[1].split(",")[1])
    assert math.isclose(g0, 0.5 * math.expm1(1.0), rel_tol=1e-12)  # g_max at r = 0.5


def test_flags_override_config(tmp_path):
    ini = tmp_path / "run.ini"
    ini.write_text("[single-mode]\nr = 0.5\nt0-grid = 3\n", encoding="utf-8")
    proc = run_cli("single-mode", "--config", str(ini), "--r", "1.0", "--t0-grid", "2")
    lines = proc.stdout.decode().strip().split("\n")
    assert len(lines) == 3
    g0 = float(lines[1].split(",")[1])
    assert math.isclose(g0, 0.5 * math.expm1(2.0), rel_tol=1e-12)  # g_max at r = 1


def test_sweep_config_vary_axes(tmp_path):
    ini = tmp_path / "run.ini"
    ini.write_text("[sweep]\nvary = r=0:1:3 ; ratio-RT=0.05,0.1\n", encoding="utf-8")
    proc = run_cli("sweep", "--config", str(ini))
    assert proc.returncode == 0
    assert len(proc.stdout.decode().strip().split("\n")) == 1 + 3 * 2


def test_unknown_config_key_exits_one(tmp_path):
    ini = tmp_path / "run.ini"
    ini.write_text("[single-mode]\nnonsense = 1\n", encoding="utf-8")
    proc = run_cli("single-mode", "--config", str(ini))
    assert proc.returncode == 1
    assert "unknown key" in proc.stderr.decode()


def test_missing_config_file_exits_one(tmp_path):
    proc = run_cli("single-mode", "--config", str(tmp_path / "absent.ini"))
    assert proc.returncode == 1


def test_domain_violations_exit_one():
    assert run_cli("single-mode", "--r", "-1").returncode == 1
    assert run_cli("single-mode", "--omega-bar-T", "0").returncode == 1
    assert run_cli("band", "--delta-omega-ratio", "1.5").returncode == 1
    assert run_cli("sweep", "--vary", "bogus=1,2").returncode == 1


def test_usage_errors_exit_one():
    assert run_cli("no-such-command").returncode == 1
    assert run_cli("single-mode", "--r", "abc").returncode == 1
    assert (
        run_cli(
            "sweep",
            "--vary", "r=1",
            "--vary", "theta=1",
            "--vary", "t0-omega=1",
            "--vary", "ratio-RT=0.1",
        ).returncode
        == 1
    )


def test_relativistic_warning_on_stderr():
    proc = run_cli("single-mode", "--ratio-RT", "0.7", "--t0-grid", "1")
    assert proc.returncode == 0
    assert "exceeds 1" in proc.stderr.decode()
