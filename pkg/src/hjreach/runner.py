"""
Configuration-driven runs: solve, write snapshots, time repeated solves.

Config files are flat ``key = value`` text; blank lines and ``#`` comments
are ignored. ``tspan`` takes two numbers, ``clamp`` a boolean word.
"""

from __future__ import annotations

import dataclasses
import logging
import platform
import statistics
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np

from hjreach.derivatives import SCHEMES
from hjreach.integrator import INTEGRATORS, IntegratorOptions
from hjreach.problems import Solution, build_rocket_problem, rigid_rotation_problem, solve
from hjreach.snapshot import write_snapshot

logger = logging.getLogger(__name__)

PROBLEMS = ("rockets", "rigid_rotation")


class ConfigError(ValueError):
    pass


_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


def parse_bool(text) -> bool:
    if isinstance(text, bool):
        return text
    word = str(text).strip().lower()
    if word in _TRUE:
        return True
    if word in _FALSE:
        return False
    raise ConfigError(f"expected a boolean, got {text!r}")


@dataclass
class RunConfig:
    problem: str = "rockets"
    grid_counts: int = 50
    tspan: tuple = (-2.5, 0.0)
    checkpoints: int = 11
    scheme: str = "eno2"
    integrator: str = "cfl_3"
    cfl_factor: float = 0.32
    clamp: bool = True
    output_dir: str = "out"
    seed: int = 0

    def validate(self) -> "RunConfig":
        if self.problem not in PROBLEMS:
            raise ConfigError(f"unknown problem {self.problem!r}; valid problems: {list(PROBLEMS)}")
        if self.scheme not in SCHEMES:
            raise ConfigError(f"unknown scheme {self.scheme!r}; valid schemes: {sorted(SCHEMES)}")
        if self.integrator not in INTEGRATORS:
            raise ConfigError(
                f"unknown integrator {self.integrator!r}; valid integrators: {sorted(INTEGRATORS)}"
            )
        if len(self.tspan) != 2 or not self.tspan[1] >= self.tspan[0]:
            raise ConfigError(f"tspan must be (t0, tf) with tf >= t0, got {self.tspan}")
        if self.checkpoints < 2:
            raise ConfigError(f"checkpoints must be at least 2, got {self.checkpoints}")
        if not 0.0 < self.cfl_factor <= 1.0:
            raise ConfigError(f"cfl_factor must lie in (0, 1], got {self.cfl_factor}")
        minimum = 7 if self.problem == "rockets" else 3
        if self.grid_counts < minimum:
            raise ConfigError(f"grid_counts must be at least {minimum}, got {self.grid_counts}")
        return self

    def updated(self, **overrides) -> "RunConfig":
        """Copy with the non-``None`` entries of *overrides* applied."""
        changes = {k: v for k, v in overrides.items() if v is not None}
        unknown = set(changes) - {f.name for f in dataclasses.fields(self)}
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        return dataclasses.replace(self, **changes)


_CONVERTERS = {
    "problem": str,
    "grid_counts": int,
    "tspan": lambda s: tuple(float(t) for t in s.replace(",", " ").split()),
    "checkpoints": int,
    "scheme": str,
    "integrator": str,
    "cfl_factor": float,
    "clamp": parse_bool,
    "output_dir": str,
    "seed": int,
}


def parse_config(text: str, base: Optional[RunConfig] = None) -> RunConfig:
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in _CONVERTERS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}; valid keys: {sorted(_CONVERTERS)}")
        try:
            values[key] = _CONVERTERS[key](value)
        except ValueError as exc:
            raise ConfigError(f"line {lineno}: bad value for {key!r}: {exc}") from None
    return (base or RunConfig()).updated(**values)


def load_config(path, base: Optional[RunConfig] = None) -> RunConfig:
    return parse_config(Path(path).read_text(), base)


# {{{ running

@dataclass
class RunReport:
    global_time_mean: float
    global_time_std: float
    avg_local_time: float
    steps_taken: int
    repeats: int
    hardware_note: str

    def to_text(self) -> str:
        lines = [
            f"global_time_mean = {self.global_time_mean!r}",
            f"global_time_std = {self.global_time_std!r}",
            f"avg_local_time = {self.avg_local_time!r}",
            f"steps_taken = {self.steps_taken}",
            f"repeats = {self.repeats}",
            f"hardware_note = {self.hardware_note}",
        ]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "RunReport":
        fields = dict(
            (s.strip() for s in line.split("=", 1)) for line in text.splitlines() if "=" in line
        )
        return cls(
            global_time_mean=float(fields["global_time_mean"]),
            global_time_std=float(fields["global_time_std"]),
            avg_local_time=float(fields["avg_local_time"]),
            steps_taken=int(fields["steps_taken"]),
            repeats=int(fields["repeats"]),
            hardware_note=fields["hardware_note"],
        )


def hardware_note() -> str:
    return (
        "wall-clock timings of the integrator loop only, excluding I/O; "
        "hardware-dependent and not comparable across machines "
        f"(machine={platform.machine()}, python={platform.python_version()}, "
        f"numpy={np.__version__})"
    )


def build_problem(config: RunConfig):
    if config.problem == "rockets":
        problem, v0 = build_rocket_problem(
            config.grid_counts, costate_scheme=config.scheme, restrict=config.clamp
        )
    else:
        problem, v0 = rigid_rotation_problem(config.grid_counts, costate_scheme=config.scheme)
        problem = dataclasses.replace(problem, restrict_update=config.clamp)
    return problem, v0


def solve_config(config: RunConfig) -> tuple:
    config.validate()
    problem, v0 = build_problem(config)
    solution = solve(
        problem, v0, config.tspan, config.checkpoints, config.integrator,
        IntegratorOptions(cfl_factor=config.cfl_factor),
    )
    return problem, solution


def _report(solutions: list[Solution]) -> RunReport:
    times = [s.global_time for s in solutions]
    steps = {s.steps_taken for s in solutions}
    if len(steps) != 1:
        raise RuntimeError(f"step counts differ across repeats: {sorted(steps)}")
    (steps_taken,) = steps

    local = [
        sum(rec.wall_time for rec in s.log.steps) / steps_taken if steps_taken else 0.0
        for s in solutions
    ]
    return RunReport(
        global_time_mean=statistics.fmean(times),
        global_time_std=statistics.stdev(times) if len(times) > 1 else 0.0,
        avg_local_time=statistics.fmean(local),
        steps_taken=steps_taken,
        repeats=len(solutions),
        hardware_note=hardware_note(),
    )


def write_outputs(config: RunConfig, problem, solution: Solution, report: RunReport) -> list:
    out = Path(config.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    grid = problem.grid

    paths = []
    for k, (t, v) in enumerate(zip(solution.times, solution.values)):
        path = out / f"snapshot_{k:03d}.bin"
        write_snapshot(path, v, grid.mins, grid.maxs, t)
        paths.append(path)

    report_path = out / "report.txt"
    report_path.write_text(report.to_text())
    paths.append(report_path)
    return paths


def run(config: RunConfig) -> RunReport:
    """Solve once and write one snapshot per checkpoint plus ``report.txt``."""
    config.validate()
    problem, solution = solve_config(config)
    report = _report([solution])
    write_outputs(config, problem, solution, report)
    logger.info("wrote %d snapshots to %s", len(solution.values), config.output_dir)
    return report


def bench(config: RunConfig, repeats: int = 20) -> RunReport:
    """Repeat the solve and report mean and sample standard deviation of the time."""
    if repeats < 1:
        raise ConfigError(f"repeats must be at least 1, got {repeats}")
    config.validate()
    solutions = []
    for k in range(repeats):
        _, solution = solve_config(config)
        # checkpoints are not needed for timing
        solution.values = solution.values[-1:]
        solutions.append(solution)
        logger.info("repeat %d/%d: %.4f s", k + 1, repeats, solution.global_time)
    return _report(solutions)

# }}}
