"""
Convergence studies and small diagnostics.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Optional

import numpy as np

from hjreach.derivatives import get_scheme
from hjreach.grid import create_grid
from hjreach.integrator import IntegratorOptions, get_integrator

#: errors below this are reported as exact; no order is computed from them
EXACT_TOLERANCE = 1.0e-12


class ConvergenceRow(NamedTuple):
    n: int
    dx: float
    error: float
    order: Optional[float]


def measured_orders(errors) -> list:
    """``log2`` of successive error ratios; ``None`` where an error is exact."""
    orders = [None]
    for coarse, fine in zip(errors[:-1], errors[1:]):
        if coarse <= EXACT_TOLERANCE or fine <= EXACT_TOLERANCE:
            orders.append(None)
        else:
            orders.append(math.log2(coarse / fine))
    return orders


def spatial_convergence(scheme: str, refinements: int = 4, n0: int = 32,
                        profile: str = "sine") -> list:
    """Max error of left and right derivatives on a periodic unit interval.

    ``profile="sine"`` differentiates ``sin(2 pi x)``; ``"linear"`` uses
    ``3 x - 1`` on a non-periodic grid, where every scheme should be exact.
    The grid is doubled *refinements* times starting from *n0* nodes.
    """
    if refinements < 3:
        raise ValueError(f"need at least 3 refinements, got {refinements}")
    func = get_scheme(scheme)

    ns, dxs, errors = [], [], []
    for level in range(refinements + 1):
        n = n0 * 2**level
        if profile == "sine":
            grid = create_grid([0.0], [1.0 - 1.0 / n], [n], periodic_dims=[0])
            x = grid.xs[0]
            v, exact = np.sin(2 * np.pi * x), 2 * np.pi * np.cos(2 * np.pi * x)
        elif profile == "linear":
            grid = create_grid([0.0], [1.0], [n])
            x = grid.xs[0]
            v, exact = 3.0 * x - 1.0, np.full_like(x, 3.0)
        else:
            raise ValueError(f"unknown profile {profile!r}; valid profiles: ['linear', 'sine']")

        left, right, _ = func(grid, v, 0)
        ns.append(n)
        dxs.append(float(grid.dx[0]))
        errors.append(float(max(np.max(np.abs(left - exact)), np.max(np.abs(right - exact)))))

    return [ConvergenceRow(*row) for row in zip(ns, dxs, errors, measured_orders(errors))]


def temporal_convergence(integrator: str, refinements: int = 4, n0: int = 10) -> list:
    """Error at ``t = 1`` for the uniform decay ``v' = -v`` against ``exp(-1)``.

    The step is fixed at ``1 / n`` through ``max_step``.
    """
    integrate = get_integrator(integrator)

    def term(t, v):
        return -v, np.inf

    ns, dts, errors = [], [], []
    v0 = np.ones((4, 3))
    for level in range(refinements + 1):
        n = n0 * 2**level
        _, v = integrate(term, (0.0, 1.0), v0, IntegratorOptions(max_step=1.0 / n))
        ns.append(n)
        dts.append(1.0 / n)
        errors.append(float(np.max(np.abs(v - math.exp(-1.0)))))

    return [ConvergenceRow(*row) for row in zip(ns, dts, errors, measured_orders(errors))]


def total_variation(v: np.ndarray, periodic: bool = True) -> float:
    """``sum_j |v_{j+1} - v_j|`` of a 1-D array, wrapping around if periodic."""
    tv = float(np.sum(np.abs(np.diff(v))))
    if periodic:
        tv += float(abs(v[0] - v[-1]))
    return tv


def format_table(rows, header=("n", "dx", "max_error", "order")) -> str:
    """Whitespace-separated table, ``exact`` in the order column for exact rows."""
    lines = ["\t".join(header)]
    for row in rows:
        if row.error <= EXACT_TOLERANCE:
            order = "exact"
        elif row.order is None:
            order = "-"
        else:
            order = f"{row.order:.4f}"
        lines.append(f"{row.n}\t{row.dx!r}\t{row.error:.6e}\t{order}")
    return "\n".join(lines)
