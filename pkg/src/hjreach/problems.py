"""
Ready-made reachability and validation problems.

Rockets
^^^^^^^

Two identical rockets play a pursuit-evasion game in the reduced state
``(x, z, theta)``: relative horizontal position, relative vertical position
and relative thrust inclination. With ``p = (p1, p2, p3)`` the costate,

    H(x, p) = -max_{u_e} min_{u_p} p . f(x, u_e, u_p),
    f = (a cos(theta) + u_e x,
         a sin(theta) + a + u_p x - g,
         u_p - u_e),

and both controls range over ``[u_min, u_max]``. The backward reachable tube
of the capture cylinder ``x**2 + z**2 <= capture_radius**2`` is computed with
ENO2 costates, global Lax-Friedrichs dissipation and third-order TVD-RK.

Two closed forms of ``H`` are available, see :func:`rocket_hamiltonian`.

Rigid rotation
^^^^^^^^^^^^^^

``H(x, p) = u(x) . p`` with ``u(x, y) = (-y, x)``; one revolution takes
``2 pi`` and must return the initial circle.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from hjreach import implicit
from hjreach.grid import create_grid
from hjreach.hamiltonian import HamiltonianProblem
from hjreach.integrator import IntegratorOptions, StepLog, get_integrator


# {{{ rockets

@dataclass(frozen=True)
class RocketParams:
    a: float = 1.0
    g: float = 32.0
    capture_radius: float = 1.5
    u_min: float = -1.0
    u_max: float = 1.0

    def __post_init__(self):
        if not (self.a > 0 and self.g > 0 and self.capture_radius > 0):
            raise ValueError(f"a, g and capture_radius must be positive: {self}")
        if not self.u_min < self.u_max:
            raise ValueError(f"expected u_min < u_max: {self}")


HAMILTONIAN_FORMS = ("printed", "minmax")


def rocket_hamiltonian(t, xs, p, params: RocketParams = RocketParams(), form="printed"):
    """Closed form of the rocket game Hamiltonian.

    ``form="printed"`` is the closed form as it is usually quoted::

        -a p1 cos(theta) - p2 (g - a - a sin(theta))
            - u_max |p1 x + p3| + u_min |p2 x + p3|

    It does not agree with the min-max definition in the module docstring.
    Three terms carry a different sign (see :func:`rocket_hamiltonian_oracle`).
    ``form="minmax"`` is that definition worked out in closed form. It is
    exact for any control box::

        -a p1 cos(theta) - p2 (a sin(theta) + a - g)
            - c (p1 x - p3) - r |p1 x - p3|
            - c (p2 x + p3) + r |p2 x + p3|

    with ``c = (u_max + u_min) / 2`` and ``r = (u_max - u_min) / 2``. For the
    symmetric box ``[-1, 1]`` only the absolute-value terms remain.
    """
    x, _, theta = xs
    p1, p2, p3 = p
    a, g = params.a, params.g

    if form == "printed":
        return (
            -a * p1 * np.cos(theta)
            - p2 * (g - a - a * np.sin(theta))
            - params.u_max * np.abs(p1 * x + p3)
            + params.u_min * np.abs(p2 * x + p3)
        )

    if form == "minmax":
        center = 0.5 * (params.u_max + params.u_min)
        half = 0.5 * (params.u_max - params.u_min)
        evader = p1 * x - p3
        pursuer = p2 * x + p3
        return (
            -a * p1 * np.cos(theta)
            - p2 * (a * np.sin(theta) + a - g)
            - center * evader - half * np.abs(evader)
            - center * pursuer + half * np.abs(pursuer)
        )

    raise ValueError(f"unknown Hamiltonian form {form!r}; valid forms: {HAMILTONIAN_FORMS}")


def rocket_hamiltonian_oracle(xs, p, params: RocketParams = RocketParams()):
    """Brute-force ``-max_{u_e} min_{u_p} p . f`` over the control corners.

    ``p . f`` is affine in each control, so the extrema sit at the corners.
    """
    x, _, theta = xs
    p1, p2, p3 = p
    a, g = params.a, params.g
    corners = (params.u_min, params.u_max)

    def payoff(u_e, u_p):
        return (
            p1 * (a * np.cos(theta) + u_e * x)
            + p2 * (a * np.sin(theta) + a + u_p * x - g)
            + p3 * (u_p - u_e)
        )

    inner = [np.minimum(*(payoff(u_e, u_p) for u_p in corners)) for u_e in corners]
    return -np.maximum(*inner)


def rocket_dissipation(t, xs, dim, params: RocketParams = RocketParams()):
    """Bound on ``|dH/dp_dim|`` over admissible controls."""
    x, _, theta = xs
    a, g = params.a, params.g
    u_bound = max(abs(params.u_min), abs(params.u_max))

    if dim == 0:
        return np.abs(a * np.cos(theta)) + u_bound * np.abs(x)
    if dim == 1:
        return np.abs(a * np.sin(theta) + a - g) + u_bound * np.abs(x)
    if dim == 2:
        # equals u_max - u_min whenever the box contains 0
        width = max(params.u_max - params.u_min, abs(params.u_max) + abs(params.u_min))
        return np.full(x.shape, width)
    raise ValueError(f"rocket problem has 3 dimensions, got dim={dim}")


def build_rocket_problem(
    grid_counts: int = 50,
    params: RocketParams = RocketParams(),
    *,
    form: str = "minmax",
    costate_scheme="eno2",
    restrict: bool = True,
    periodic_theta: bool = False,
):
    """Rocket game on ``[-64, 64]**3`` with a capture cylinder along theta.

    With ``periodic_theta`` the third axis instead covers one period of
    ``[-pi/2, pi/2)`` with wraparound.

    :returns: ``(problem, v0)``.
    """
    if grid_counts < 7:
        raise ValueError(f"grid_counts must be at least 7, got {grid_counts}")
    if form not in HAMILTONIAN_FORMS:
        raise ValueError(f"unknown Hamiltonian form {form!r}; valid forms: {HAMILTONIAN_FORMS}")

    if periodic_theta:
        theta_max = -np.pi / 2 + np.pi * (grid_counts - 1) / grid_counts
        grid = create_grid((-64, -64, -np.pi / 2), (64, 64, theta_max), grid_counts, [2])
    else:
        grid = create_grid((-64, -64, -64), (64, 64, 64), grid_counts)

    problem = HamiltonianProblem(
        grid=grid,
        ham_func=lambda t, xs, p: rocket_hamiltonian(t, xs, p, params, form=form),
        partial_func=lambda t, xs, dim: rocket_dissipation(t, xs, dim, params),
        costate_scheme=costate_scheme,
        update_direction="grow",
        restrict_update=restrict,
    )
    v0 = implicit.cylinder(grid, {2}, np.zeros(3), params.capture_radius)
    return problem, v0

# }}}


# {{{ rigid rotation

def rigid_rotation_problem(grid_counts: int = 101, costate_scheme="weno5"):
    """Rotation of a circle of radius 0.5 centred at ``(0.5, 0)`` on ``[-1, 1]**2``.

    :returns: ``(problem, v0)``.
    """
    grid = create_grid((-1, -1), (1, 1), grid_counts)

    def ham(t, xs, p):
        x, y = xs
        return -y * p[0] + x * p[1]

    def partial(t, xs, dim):
        x, y = xs
        return np.abs(y) if dim == 0 else np.abs(x)

    problem = HamiltonianProblem(
        grid=grid, ham_func=ham, partial_func=partial, costate_scheme=costate_scheme
    )
    v0 = implicit.sphere(grid, (0.5, 0.0), 0.5)
    return problem, v0

# }}}


# {{{ solve driver

@dataclass
class Solution:
    """Checkpointed solution of a time-dependent HJ problem."""

    times: list
    values: list
    log: StepLog = field(default_factory=StepLog)
    global_time: float = 0.0

    @property
    def steps_taken(self) -> int:
        return len(self.log)


def solve(problem, v0, tspan, n_checkpoints: int, integrator="cfl_3",
          opts: IntegratorOptions | None = None) -> Solution:
    """Integrate over *tspan*, returning *n_checkpoints* equally spaced snapshots.

    The first snapshot is *v0* itself. A zero-length *tspan* yields that single
    snapshot. ``global_time`` is the wall time of the integrator calls only.
    """
    if n_checkpoints < 2:
        raise ValueError(f"n_checkpoints must be at least 2, got {n_checkpoints}")
    integrate = get_integrator(integrator) if isinstance(integrator, str) else integrator
    opts = opts or IntegratorOptions()

    t0, tf = (float(s) for s in tspan)
    v = np.array(v0, dtype=np.float64, copy=True)
    solution = Solution(times=[t0], values=[v.copy()])
    if tf == t0:
        return solution

    term = problem.term()
    edges = np.linspace(t0, tf, n_checkpoints)
    for a, b in zip(edges[:-1], edges[1:]):
        tic = time.perf_counter()
        t, v = integrate(term, (a, b), v, opts, solution.log)
        solution.global_time += time.perf_counter() - tic
        solution.times.append(t)
        solution.values.append(v.copy())

    return solution


def solve_brt(problem, v0, tspan=(-2.5, 0.0), n_checkpoints: int = 11,
              opts: IntegratorOptions | None = None) -> Solution:
    """Backward reachable tube with third-order TVD-RK, as for the rocket game."""
    return solve(problem, v0, tspan, n_checkpoints, "cfl_3", opts)

# }}}
