r"""
Upwind approximations of the spatial gradient.

Each scheme returns the backward-biased (``left``) and forward-biased
(``right``) derivative of a value function along one dimension, built from
the divided-difference table of the ghost-padded data

.. math::

    D^1_{i+1/2} = \frac{v_{i+1} - v_i}{\Delta x}, \quad
    D^2_i = \frac{D^1_{i+1/2} - D^1_{i-1/2}}{2 \Delta x}, \quad
    D^3_{i+1/2} = \frac{D^2_{i+1} - D^2_i}{3 \Delta x}.

.. autofunction:: upwind_first_first
.. autofunction:: upwind_first_eno2
.. autofunction:: upwind_first_eno3
.. autofunction:: upwind_first_weno5
"""

from __future__ import annotations

from typing import Callable, NamedTuple

import numpy as np

from hjreach.grid import Grid, pad_ghost


class DerivativePair(NamedTuple):
    left: np.ndarray
    right: np.ndarray
    dim: int


class _Table:
    """Divided differences of a padded array, addressed by original node index."""

    def __init__(self, grid: Grid, v: np.ndarray, dim: int, width: int, order: int):
        self.dim = dim
        self.width = width
        self.n = v.shape[dim]
        dx = grid.dx[dim]

        padded = pad_ghost(grid, v, dim, width)
        self.d1 = np.diff(padded, axis=dim) / dx
        if order >= 2:
            self.d2 = np.diff(self.d1, axis=dim) / (2.0 * dx)
        if order >= 3:
            self.d3 = np.diff(self.d2, axis=dim) / (3.0 * dx)

    def _window(self, arr, start):
        index = [slice(None)] * arr.ndim
        index[self.dim] = slice(start, start + self.n)
        return arr[tuple(index)]

    def D1(self, m):
        """:math:`D^1_{i+m+1/2}` for every node ``i``."""
        return self._window(self.d1, self.width + m)

    def D2(self, m):
        """:math:`D^2_{i+m}`."""
        return self._window(self.d2, self.width - 1 + m)

    def D3(self, m):
        """:math:`D^3_{i+m+1/2}`."""
        return self._window(self.d3, self.width - 1 + m)


def _smaller(a, b):
    # ties go to the left-leaning candidate
    return np.abs(a) <= np.abs(b)


def upwind_first_first(grid: Grid, v: np.ndarray, dim: int) -> DerivativePair:
    """First-order one-sided differences."""
    table = _Table(grid, v, dim, width=1, order=1)
    return DerivativePair(table.D1(-1), table.D1(0), dim)


def upwind_first_eno2(grid: Grid, v: np.ndarray, dim: int) -> DerivativePair:
    """Second-order ENO: pick the second difference of smaller magnitude."""
    table = _Table(grid, v, dim, width=2, order=2)
    dx = grid.dx[dim]

    d2m, d2c, d2p = table.D2(-1), table.D2(0), table.D2(1)

    left = table.D1(-1) + dx * np.where(_smaller(d2m, d2c), d2m, d2c)
    right = table.D1(0) - dx * np.where(_smaller(d2c, d2p), d2c, d2p)
    return DerivativePair(left, right, dim)


def _eno3_side(table, dx, k):
    # k is the offset of the base interval: -1 for left, 0 for right
    i_minus_k = -k

    a, b = table.D2(k), table.D2(k + 1)
    go_left = _smaller(a, b)
    c = np.where(go_left, a, b)

    # k* = k - 1 when the left-leaning second difference won, else k
    i_minus_kstar = np.where(go_left, i_minus_k + 1, i_minus_k)

    lo_left, hi_left = table.D3(k - 1), table.D3(k)
    lo_right, hi_right = table.D3(k), table.D3(k + 1)
    d3_lo = np.where(go_left, lo_left, lo_right)
    d3_hi = np.where(go_left, hi_left, hi_right)
    cstar = np.where(_smaller(d3_lo, d3_hi), d3_lo, d3_hi)

    q1 = table.D1(k)
    q2 = c * (2 * i_minus_k - 1) * dx
    q3 = cstar * (3 * i_minus_kstar**2 - 6 * i_minus_kstar + 2) * dx**2
    return q1 + q2 + q3


def upwind_first_eno3(grid: Grid, v: np.ndarray, dim: int) -> DerivativePair:
    """Third-order ENO with stencil selection at the second and third levels."""
    table = _Table(grid, v, dim, width=3, order=3)
    dx = grid.dx[dim]
    return DerivativePair(_eno3_side(table, dx, -1), _eno3_side(table, dx, 0), dim)


WENO_LINEAR_WEIGHTS = (0.1, 0.6, 0.3)
WENO_EPSILON = 1.0e-6


def _weno5_combine(v1, v2, v3, v4, v5, epsilon):
    phi1 = v1 / 3.0 - 7.0 * v2 / 6.0 + 11.0 * v3 / 6.0
    phi2 = -v2 / 6.0 + 5.0 * v3 / 6.0 + v4 / 3.0
    phi3 = v3 / 3.0 + 5.0 * v4 / 6.0 - v5 / 6.0

    s1 = 13.0 / 12.0 * (v1 - 2 * v2 + v3) ** 2 + 0.25 * (v1 - 4 * v2 + 3 * v3) ** 2
    s2 = 13.0 / 12.0 * (v2 - 2 * v3 + v4) ** 2 + 0.25 * (v2 - v4) ** 2
    s3 = 13.0 / 12.0 * (v3 - 2 * v4 + v5) ** 2 + 0.25 * (3 * v3 - 4 * v4 + v5) ** 2

    c1, c2, c3 = WENO_LINEAR_WEIGHTS
    a1 = c1 / (epsilon + s1) ** 2
    a2 = c2 / (epsilon + s2) ** 2
    a3 = c3 / (epsilon + s3) ** 2
    total = a1 + a2 + a3
    return (a1 * phi1 + a2 * phi2 + a3 * phi3) / total


def upwind_first_weno5(
    grid: Grid, v: np.ndarray, dim: int, epsilon: float = WENO_EPSILON
) -> DerivativePair:
    """Fifth-order WENO blend of the three third-order ENO substencils.

    Smoothness indicators and the ``c_k / (epsilon + IS_k)**2`` weighting are
    the classic Jiang-Peng construction for Hamilton-Jacobi equations.
    """
    table = _Table(grid, v, dim, width=3, order=1)
    D1 = table.D1

    left = _weno5_combine(D1(-3), D1(-2), D1(-1), D1(0), D1(1), epsilon)
    right = _weno5_combine(D1(2), D1(1), D1(0), D1(-1), D1(-2), epsilon)
    return DerivativePair(left, right, dim)


CostateScheme = Callable[[Grid, np.ndarray, int], DerivativePair]

SCHEMES: dict[str, CostateScheme] = {
    "first": upwind_first_first,
    "eno2": upwind_first_eno2,
    "eno3": upwind_first_eno3,
    "weno5": upwind_first_weno5,
}

GHOST_WIDTH = {"first": 1, "eno2": 2, "eno3": 3, "weno5": 3}


def get_scheme(name: str) -> CostateScheme:
    try:
        return SCHEMES[name]
    except KeyError:
        raise ValueError(
            f"unknown costate scheme {name!r}; valid schemes: {sorted(SCHEMES)}"
        ) from None
