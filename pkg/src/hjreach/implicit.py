"""
Implicit surfaces used as initial value functions.

Every constructor returns an array over the grid nodes that is negative
inside the represented set, zero on its boundary and positive outside.
"""

from __future__ import annotations

import numpy as np

from hjreach.grid import Grid


def sphere(grid: Grid, center, radius: float) -> np.ndarray:
    """Signed distance to a sphere (a circle in 2-D, an interval in 1-D)."""
    center = _vector(center, grid.dim, "center")
    if radius <= 0:
        raise ValueError(f"radius must be positive, got {radius}")

    sq = sum((grid.xs[d] - center[d]) ** 2 for d in range(grid.dim))
    return np.sqrt(sq) - radius


def cylinder(grid: Grid, ignored_dims, center, radius: float) -> np.ndarray:
    """Signed distance to a cylinder whose axis runs along *ignored_dims*."""
    ignored = set(int(d) for d in ignored_dims)
    if not ignored:
        raise ValueError("cylinder needs at least one ignored dimension")
    if not ignored < set(range(grid.dim)):
        raise ValueError(
            f"ignored dimensions {sorted(ignored)} must be a proper subset "
            f"of range({grid.dim})"
        )
    center = _vector(center, grid.dim, "center")
    if radius <= 0:
        raise ValueError(f"radius must be positive, got {radius}")

    sq = sum(
        (grid.xs[d] - center[d]) ** 2 for d in range(grid.dim) if d not in ignored
    )
    return np.sqrt(sq) - radius


def rectangle(grid: Grid, lower, upper) -> np.ndarray:
    """Axis-aligned box as ``max_d max(lower_d - x_d, x_d - upper_d)``.

    The zero set is exactly the box boundary. Outside the box this is the
    Chebyshev-style excess, not the Euclidean distance.
    """
    lower = _vector(lower, grid.dim, "lower")
    upper = _vector(upper, grid.dim, "upper")
    if np.any(upper <= lower):
        raise ValueError(f"degenerate box: lower={lower}, upper={upper}")

    excess = [
        np.maximum(lower[d] - grid.xs[d], grid.xs[d] - upper[d])
        for d in range(grid.dim)
    ]
    return np.maximum.reduce(excess)


def ellipsoid(grid: Grid, radius: float) -> np.ndarray:
    """Quadratic level function ``x0**2 + 4 x1**2 (+ 9 x2**2) - radius``.

    Not a distance function; only its zero set and sign are meaningful.
    """
    if grid.dim not in (2, 3):
        raise ValueError(f"ellipsoid supports 2-D and 3-D grids, got {grid.dim}-D")
    if radius <= 0:
        raise ValueError(f"radius must be positive, got {radius}")

    data = grid.xs[0] ** 2
    data = data + 4.0 * grid.xs[1] ** 2
    if grid.dim == 3:
        data = data + 9.0 * grid.xs[2] ** 2
    return data - radius


# {{{ boolean operations

def union(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    _check_aligned(a, b)
    return np.minimum(a, b)


def intersection(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    _check_aligned(a, b)
    return np.maximum(a, b)


def complement(a: np.ndarray) -> np.ndarray:
    return -a

# }}}


def _vector(x, dim, name):
    x = np.broadcast_to(np.asarray(x, dtype=np.float64), (dim,)) if np.ndim(x) == 0 \
        else np.asarray(x, dtype=np.float64)
    if x.shape != (dim,):
        raise ValueError(f"{name} must have {dim} entries, got shape {x.shape}")
    return x


def _check_aligned(a, b):
    if a.shape != b.shape:
        raise ValueError(f"implicit surfaces live on different grids: {a.shape} vs {b.shape}")
