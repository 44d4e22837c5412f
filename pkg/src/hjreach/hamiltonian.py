"""
Lax-Friedrichs numerical Hamiltonian.

The PDE is written ``v_t + H(t, x, grad v) = 0``; :func:`term_lax_friedrichs`
returns ``dv/dt = -H_LF`` together with the CFL step bound, and
:func:`restrict_update` clamps that rate for reachable-tube problems.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence, Union

import numpy as np

from hjreach.derivatives import CostateScheme, get_scheme
from hjreach.grid import Grid

# (t, xs, p) -> H values over the grid
HamFunc = Callable[[float, Sequence[np.ndarray], Sequence[np.ndarray]], np.ndarray]
# (t, xs, dim) -> bound on |dH/dp_dim|, scalar or array over the grid
PartialFunc = Callable[[float, Sequence[np.ndarray], int], Union[float, np.ndarray]]


class IntegrationError(RuntimeError):
    """Raised when a term produces non-finite values or a bad step bound."""


@dataclass(frozen=True)
class HamiltonianProblem:
    """Everything the Lax-Friedrichs term needs for one problem.

    ``partial_func`` must bound ``|dH/dp_d|`` over all admissible controls and
    may depend on the state coordinates but not on the value function.
    ``costate_scheme`` is a scheme name or any callable with the signature
    of :func:`hjreach.derivatives.upwind_first_first`.

    With ``restrict_update`` enabled the update is clamped so that the zero
    sublevel set only grows (``update_direction="grow"``) or only shrinks
    (``"shrink"``).
    """

    grid: Grid
    ham_func: HamFunc
    partial_func: PartialFunc
    costate_scheme: Union[str, CostateScheme] = "eno2"
    update_direction: str = "grow"
    restrict_update: bool = False

    def __post_init__(self):
        if isinstance(self.costate_scheme, str):
            get_scheme(self.costate_scheme)
        if self.update_direction not in ("grow", "shrink"):
            raise ValueError(
                f"update_direction must be 'grow' or 'shrink', got {self.update_direction!r}"
            )

    @property
    def scheme(self) -> CostateScheme:
        if isinstance(self.costate_scheme, str):
            return get_scheme(self.costate_scheme)
        return self.costate_scheme

    def term(self):
        """The time-derivative callable consumed by the integrators."""
        def func(t, v):
            result = term_lax_friedrichs(t, v, self)
            if self.restrict_update:
                result = TermResult(
                    restrict_update(result.dvdt, self.update_direction),
                    result.step_bound,
                )
            return result

        return func


class TermResult(NamedTuple):
    dvdt: np.ndarray
    step_bound: float


def dissipation_glf(t: float, problem: HamiltonianProblem) -> list[float]:
    """Global Lax-Friedrichs coefficients: grid-wide maxima of the partial bounds."""
    grid = problem.grid
    alphas = []
    for d in range(grid.dim):
        alpha = np.asarray(problem.partial_func(t, grid.xs, d), dtype=np.float64)
        if not np.all(np.isfinite(alpha)):
            raise IntegrationError(f"non-finite dissipation bound in dimension {d}")
        if np.any(alpha < 0):
            raise IntegrationError(f"negative dissipation bound in dimension {d}")
        alphas.append(float(np.max(alpha)))
    return alphas


def step_bound_from_alpha(grid: Grid, alphas) -> float:
    """Largest stable step, ``1 / sum_d alpha_d / dx_d``; ``inf`` if nothing moves."""
    rate = sum(a / dx for a, dx in zip(alphas, grid.dx))
    return 1.0 / rate if rate > 0 else np.inf


def term_lax_friedrichs(t: float, v: np.ndarray, problem: HamiltonianProblem) -> TermResult:
    grid = problem.grid
    if v.shape != grid.shape:
        raise ValueError(f"value function shape {v.shape} does not match grid {grid.shape}")

    scheme = problem.scheme
    pairs = [scheme(grid, v, d) for d in range(grid.dim)]
    p = [0.5 * (pair.left + pair.right) for pair in pairs]

    ham = np.asarray(problem.ham_func(t, grid.xs, p), dtype=np.float64)
    if not np.all(np.isfinite(ham)):
        raise IntegrationError("non-finite Hamiltonian in term_lax_friedrichs")

    alphas = dissipation_glf(t, problem)
    diss = sum(
        alpha * (0.5 * (pair.right - pair.left)) for alpha, pair in zip(alphas, pairs)
    )
    return TermResult(-(ham - diss), step_bound_from_alpha(grid, alphas))


def restrict_update(dvdt: np.ndarray, direction: str = "grow") -> np.ndarray:
    """Clamp the update so the zero sublevel set is monotone in time.

    ``"grow"`` keeps only decreasing updates, so ``v`` is pointwise
    non-increasing and the negative region never loses a node.
    """
    if direction == "grow":
        return np.minimum(dvdt, 0.0)
    if direction == "shrink":
        return np.maximum(dvdt, 0.0)
    raise ValueError(f"direction must be 'grow' or 'shrink', got {direction!r}")
