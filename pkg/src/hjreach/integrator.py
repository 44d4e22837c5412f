"""
CFL-constrained TVD Runge-Kutta integrators (method of lines).

A *term* is any callable ``term(t, v) -> (dvdt, step_bound)``, typically
:meth:`hjreach.hamiltonian.HamiltonianProblem.term`. Each step uses

    dt = min(tf - t, max_step, cfl_factor * step_bound, next_checkpoint - t)

with the step bound taken from the first stage of the step.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Optional, Sequence

import numpy as np

from hjreach.hamiltonian import IntegrationError

Term = Callable[[float, np.ndarray], tuple]


@dataclass
class IntegratorOptions:
    cfl_factor: float = 0.32
    max_step: float = np.inf
    termination_epsilon: float = 1.0e-6
    checkpoint_times: Optional[Sequence[float]] = None

    def __post_init__(self):
        if not 0.0 < self.cfl_factor <= 1.0:
            raise ValueError(f"cfl_factor must lie in (0, 1], got {self.cfl_factor}")
        if not self.max_step > 0:
            raise ValueError(f"max_step must be positive, got {self.max_step}")
        if not 0.0 < self.termination_epsilon < 1.0:
            raise ValueError(
                f"termination_epsilon must lie in (0, 1), got {self.termination_epsilon}"
            )
        if self.checkpoint_times is not None:
            ts = np.asarray(self.checkpoint_times, dtype=np.float64)
            if np.any(np.diff(ts) <= 0):
                raise ValueError("checkpoint_times must be strictly increasing")


class StepRecord(NamedTuple):
    t: float
    dt: float
    step_bound: float
    vmin: float
    vmax: float
    wall_time: float


@dataclass
class StepLog:
    """Per-step instrumentation filled in by the integrators."""

    steps: list = field(default_factory=list)
    checkpoints: list = field(default_factory=list)

    def __len__(self):
        return len(self.steps)

    @property
    def dts(self) -> np.ndarray:
        return np.array([s.dt for s in self.steps])

    @property
    def step_bounds(self) -> np.ndarray:
        return np.array([s.step_bound for s in self.steps])


def _euler(v, dt, dvdt):
    return v + dt * dvdt


def _stage_cfl1(term, t, v, dt, first):
    return t + dt, _euler(v, dt, first)


def _stage_cfl2(term, t, v, dt, first):
    v1 = _euler(v, dt, first)
    dvdt1, _ = term(t + dt, v1)
    v2 = _euler(v1, dt, dvdt1)
    # (v + v2) / 2 in increment form, exact when the rate vanishes
    return t + dt, v + 0.5 * (v2 - v)


def _stage_cfl3(term, t, v, dt, first):
    t1 = t + dt
    v1 = _euler(v, dt, first)

    dvdt1, _ = term(t1, v1)
    t2 = t1 + dt
    v2 = _euler(v1, dt, dvdt1)

    # (3 v + v2) / 4 and (v + 2 v_3half) / 3 in increment form: exact when
    # the rate vanishes, and never above v when every stage rate is <= 0
    t_half = (3.0 * t + t2) / 4.0
    v_half = v + 0.25 * (v2 - v)

    dvdt_half, _ = term(t_half, v_half)
    v_3half = _euler(v_half, dt, dvdt_half)
    return t + dt, v + (2.0 / 3.0) * (v_3half - v)


def _integrate(stage, term, tspan, v0, opts, log):
    opts = opts or IntegratorOptions()
    t0, tf = (float(s) for s in tspan)
    if not tf > t0:
        raise ValueError(f"expected tspan with tf > t0, got {tspan}")

    # relative to the span length: tf may be 0 for backward-time problems
    eps = opts.termination_epsilon * (tf - t0)
    checkpoints = [] if opts.checkpoint_times is None else [
        float(c) for c in opts.checkpoint_times if t0 < c < tf
    ]

    t, v = t0, np.array(v0, dtype=np.float64, copy=True)
    while tf - t >= eps:
        tic = time.perf_counter()
        dvdt, step_bound = term(t, v)
        if not (step_bound > 0) or np.isnan(step_bound):
            raise IntegrationError(f"invalid step bound {step_bound} at t={t}")
        if not np.all(np.isfinite(dvdt)):
            raise IntegrationError(f"non-finite time derivative at t={t}")

        target = tf
        while checkpoints and checkpoints[0] - t < eps:
            checkpoints.pop(0)
        if checkpoints:
            target = checkpoints[0]

        dt = min(target - t, opts.max_step, opts.cfl_factor * step_bound)
        if not np.isfinite(dt):
            raise IntegrationError(f"unbounded time step at t={t}")

        t_new, v = stage(term, t, v, dt, dvdt)
        t = target if dt == target - t else t_new

        if not np.all(np.isfinite(v)):
            raise IntegrationError(f"value function became non-finite at t={t}")

        if log is not None:
            log.steps.append(StepRecord(
                t, dt, float(step_bound), float(v.min()), float(v.max()),
                time.perf_counter() - tic,
            ))
            if checkpoints and t == checkpoints[0]:
                log.checkpoints.append((t, v.copy()))

    return t, v


def ode_cfl_1(term: Term, tspan, v0, opts: IntegratorOptions | None = None,
              log: StepLog | None = None):
    """Forward Euler."""
    return _integrate(_stage_cfl1, term, tspan, v0, opts, log)


def ode_cfl_2(term: Term, tspan, v0, opts: IntegratorOptions | None = None,
              log: StepLog | None = None):
    """Second-order TVD Runge-Kutta (Heun)."""
    return _integrate(_stage_cfl2, term, tspan, v0, opts, log)


def ode_cfl_3(term: Term, tspan, v0, opts: IntegratorOptions | None = None,
              log: StepLog | None = None):
    """Third-order TVD Runge-Kutta of Shu and Osher.

    The three stages are convex combinations of forward Euler steps, so the
    scheme inherits any monotonicity the Euler step has under the same
    ``dt``.
    """
    return _integrate(_stage_cfl3, term, tspan, v0, opts, log)


INTEGRATORS = {
    "cfl_1": ode_cfl_1,
    "cfl_2": ode_cfl_2,
    "cfl_3": ode_cfl_3,
}


def get_integrator(name: str):
    try:
        return INTEGRATORS[name]
    except KeyError:
        raise ValueError(
            f"unknown integrator {name!r}; valid integrators: {sorted(INTEGRATORS)}"
        ) from None
