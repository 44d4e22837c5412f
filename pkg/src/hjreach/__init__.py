"""
Level-set solvers for time-dependent Hamilton-Jacobi equations.

The pieces compose as grid -> implicit surface -> upwind derivatives ->
Lax-Friedrichs term -> TVD Runge-Kutta integrator.
"""

from hjreach.contour import extract_zero_set_2d
from hjreach.derivatives import (
    DerivativePair, upwind_first_eno2, upwind_first_eno3, upwind_first_first,
    upwind_first_weno5)
from hjreach.grid import Boundary, Grid, create_grid, pad_ghost, shift_along_dim
from hjreach.hamiltonian import (
    HamiltonianProblem, IntegrationError, TermResult, restrict_update,
    term_lax_friedrichs)
from hjreach.implicit import (
    complement, cylinder, ellipsoid, intersection, rectangle, sphere, union)
from hjreach.integrator import (
    IntegratorOptions, StepLog, ode_cfl_1, ode_cfl_2, ode_cfl_3)
from hjreach.problems import (
    RocketParams, build_rocket_problem, rigid_rotation_problem,
    rocket_dissipation, rocket_hamiltonian, solve, solve_brt)

__all__ = (
    "Grid", "Boundary", "create_grid", "pad_ghost", "shift_along_dim",
    "sphere", "cylinder", "rectangle", "ellipsoid",
    "union", "intersection", "complement",
    "DerivativePair", "upwind_first_first", "upwind_first_eno2",
    "upwind_first_eno3", "upwind_first_weno5",
    "HamiltonianProblem", "TermResult", "IntegrationError",
    "term_lax_friedrichs", "restrict_update",
    "IntegratorOptions", "StepLog", "ode_cfl_1", "ode_cfl_2", "ode_cfl_3",
    "RocketParams", "rocket_hamiltonian", "rocket_dissipation",
    "build_rocket_problem", "rigid_rotation_problem", "solve", "solve_brt",
    "extract_zero_set_2d",
)
