import numpy as np
import pytest

from hjreach.cli import main
from hjreach.runner import (
    ConfigError, RunConfig, RunReport, bench, parse_bool, parse_config, run)
from hjreach.snapshot import read_snapshot, write_snapshot


def test_snapshot_round_trip(tmp_path):
    rng = np.random.default_rng(0)
    data = rng.normal(size=(5, 4, 3))
    data[0, 0, 0] = np.nextafter(1.0, 2.0)
    path = tmp_path / "s.bin"
    write_snapshot(path, data, (-1, 0, -np.pi), (1, 3, np.pi), -0.1)
    snap = read_snapshot(path)
    assert snap.data.tobytes() == data.tobytes()
    assert snap.time == -0.1
    np.testing.assert_array_equal(snap.mins, [-1, 0, -np.pi])
    np.testing.assert_array_equal(snap.maxs, [1, 3, np.pi])


def test_snapshot_layout(tmp_path):
    data = np.arange(6.0).reshape(2, 3)
    path = tmp_path / "s.bin"
    write_snapshot(path, data, (0, 0), (1, 2), 0.0)
    raw = path.read_bytes()
    header, payload = raw[:raw.index(b"time")], raw[-48:]
    assert header.decode().splitlines() == ["dims 2", "counts 2 3", "mins 0.0 0.0", "maxs 1.0 2.0"]
    # column-major: the first index varies fastest
    np.testing.assert_array_equal(np.frombuffer(payload, "<f8"), [0, 3, 1, 4, 2, 5])


def test_snapshot_rejects(tmp_path):
    with pytest.raises(ValueError):
        write_snapshot(tmp_path / "s.bin", np.zeros((2, 2)), (0,), (1,), 0.0)
    path = tmp_path / "t.bin"
    write_snapshot(path, np.zeros((2, 2)), (0, 0), (1, 1), 0.0)
    path.write_bytes(path.read_bytes()[:-1])
    with pytest.raises(ValueError):
        read_snapshot(path)


def test_parse_config():
    config = parse_config("""
        # comment
        problem = rigid_rotation
        grid_counts = 31
        tspan = 0, 1.5
        clamp = no
    """)
    assert config.problem == "rigid_rotation" and config.grid_counts == 31
    assert config.tspan == (0.0, 1.5) and config.clamp is False
    assert config.scheme == "eno2"


@pytest.mark.parametrize("text", [
    "scheme = eno7", "integrator = rk4", "grid_counts = 2", "tspan = 1 0",
    "cfl_factor = 1.5", "checkpoints = 1", "colour = red", "no equals sign",
    "grid_counts = many", "clamp = maybe",
])
def test_config_rejects(text):
    with pytest.raises(ConfigError):
        parse_config(text).validate()


def test_parse_bool():
    assert parse_bool("TRUE") and parse_bool("1") and not parse_bool("off")
    with pytest.raises(ConfigError):
        parse_bool("2")


def test_report_round_trip():
    report = RunReport(1.25, 0.01, 1e-3, 490, 20, "test machine")
    assert RunReport.from_text(report.to_text()) == report


def small_rockets(tmp_path, **kw):
    return RunConfig(grid_counts=15, tspan=(-0.2, 0.0), checkpoints=3,
                     output_dir=str(tmp_path), **kw)


def test_run_writes_snapshots(tmp_path):
    report = run(small_rockets(tmp_path))
    snaps = sorted(tmp_path.glob("snapshot_*.bin"))
    assert len(snaps) == 3
    times = [read_snapshot(p).time for p in snaps]
    np.testing.assert_allclose(times, [-0.2, -0.1, 0.0], atol=1e-15)
    assert RunReport.from_text((tmp_path / "report.txt").read_text()) == report
    assert report.repeats == 1 and report.global_time_std == 0.0
    assert report.avg_local_time * report.steps_taken <= report.global_time_mean * 1.2


def test_run_zero_span(tmp_path):
    config = RunConfig(problem="rigid_rotation", grid_counts=21, tspan=(0.0, 0.0),
                       output_dir=str(tmp_path), clamp=False)
    report = run(config)
    snaps = sorted(tmp_path.glob("snapshot_*.bin"))
    assert len(snaps) == 1 and report.steps_taken == 0


def test_run_validates_before_compute(tmp_path):
    with pytest.raises(ConfigError):
        run(small_rockets(tmp_path / "out", scheme="eno7"))
    assert not (tmp_path / "out").exists()


def test_bench(tmp_path):
    report = bench(small_rockets(tmp_path), repeats=3)
    assert report.repeats == 3 and report.steps_taken > 0
    assert report.global_time_std >= 0
    single = bench(small_rockets(tmp_path), repeats=1)
    assert single.global_time_std == 0.0 and single.steps_taken == report.steps_taken
    with pytest.raises(ConfigError):
        bench(small_rockets(tmp_path), repeats=0)


def test_cli_run(tmp_path, capsys):
    code = main(["run", "--grid-counts", "15", "--tspan", "-0.1", "0", "--checkpoints", "2",
                 "--output", str(tmp_path)])
    assert code == 0
    assert "steps_taken" in capsys.readouterr().out
    assert len(list(tmp_path.glob("snapshot_*.bin"))) == 2


def test_cli_config_and_override(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("problem = rigid_rotation\ngrid_counts = 21\ntspan = 0 0.1\nscheme = eno7\n")
    # the flag overrides the bad scheme in the file
    assert main(["run", "--config", str(cfg), "--scheme", "weno5", "--checkpoints", "2",
                 "--output", str(tmp_path / "o")]) == 0


def test_cli_bench(tmp_path):
    assert main(["bench", "--grid-counts", "15", "--tspan", "-0.05", "0", "--checkpoints", "2",
                 "--repeats", "2", "--output", str(tmp_path)]) == 0
    report = RunReport.from_text((tmp_path / "bench_report.txt").read_text())
    assert report.repeats == 2


def test_cli_convergence(tmp_path, capsys):
    assert main(["convergence", "--scheme", "eno3", "--refinements", "3",
                 "--output", str(tmp_path)]) == 0
    assert "order" in (tmp_path / "convergence.tsv").read_text()


def test_cli_errors(tmp_path, capsys):
    assert main(["run", "--scheme", "eno7", "--output", str(tmp_path)]) == 2
    assert "eno2" in capsys.readouterr().err
    assert main(["run", "--config", str(tmp_path / "missing.cfg")]) == 1
    assert main(["convergence", "--refinements", "2"]) == 2
