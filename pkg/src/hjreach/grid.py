"""
Uniform Cartesian grids and ghost-cell padding.

A :class:`Grid` carries the per-axis node vectors (``vs``) and the full
n-D coordinate fields (``xs``) that Hamiltonians and initial conditions are
evaluated on. Value functions living on a grid are plain :class:`numpy.ndarray`
objects of shape ``grid.shape``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np


class Boundary(str, Enum):
    PERIODIC = "periodic"
    EXTRAPOLATE_LINEAR = "extrapolate_linear"


@dataclass(frozen=True, eq=False)
class Grid:
    """Uniform Cartesian grid.

    Nodes along dimension ``d`` are ``mins[d] + i * dx[d]`` for
    ``i = 0, ..., N[d] - 1``, so both corners are grid nodes. Periodic
    dimensions wrap cyclically over all ``N[d]`` nodes; a truly periodic
    function therefore wants ``maxs[d] = mins[d] + period - dx[d]``.
    """

    mins: np.ndarray
    maxs: np.ndarray
    N: np.ndarray
    boundary: tuple[Boundary, ...]
    dx: np.ndarray = field(init=False)
    vs: tuple[np.ndarray, ...] = field(init=False)
    xs: tuple[np.ndarray, ...] = field(init=False)

    def __post_init__(self):
        dx = (self.maxs - self.mins) / (self.N - 1)
        vs = tuple(
            self.mins[d] + dx[d] * np.arange(self.N[d]) for d in range(self.dim)
        )
        # the last node is pinned to maxs so the corners are exact
        for d, v in enumerate(vs):
            v[-1] = self.maxs[d]
        xs = tuple(np.asfortranarray(x) for x in np.meshgrid(*vs, indexing="ij"))

        for arr in (dx, *vs, *xs):
            arr.flags.writeable = False

        object.__setattr__(self, "dx", dx)
        object.__setattr__(self, "vs", vs)
        object.__setattr__(self, "xs", xs)

    @property
    def dim(self) -> int:
        return len(self.N)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(int(n) for n in self.N)

    def is_periodic(self, dim: int) -> bool:
        return self.boundary[dim] is Boundary.PERIODIC

    def same_as(self, other: "Grid") -> bool:
        return (
            self.dim == other.dim
            and np.array_equal(self.N, other.N)
            and np.array_equal(self.mins, other.mins)
            and np.array_equal(self.maxs, other.maxs)
            and self.boundary == other.boundary
        )

    def __repr__(self):
        return (
            f"Grid(dim={self.dim}, N={self.shape}, mins={self.mins.tolist()}, "
            f"maxs={self.maxs.tolist()})"
        )


def create_grid(mins, maxs, N, periodic_dims=()) -> Grid:
    """Create a uniform grid.

    :arg mins: lower corner, one entry per dimension.
    :arg maxs: upper corner.
    :arg N: node count per dimension (at least 3). A scalar is broadcast.
    :arg periodic_dims: indices of dimensions with periodic boundaries; every
        other dimension extrapolates linearly.
    """
    mins = np.atleast_1d(np.asarray(mins, dtype=np.float64)).copy()
    maxs = np.atleast_1d(np.asarray(maxs, dtype=np.float64)).copy()
    N = np.atleast_1d(np.asarray(N))
    if N.size == 1 and mins.size > 1:
        N = np.full(mins.size, N.item())
    if not np.all(N == np.round(N)):
        raise ValueError(f"node counts must be integers: {N}")
    N = N.astype(np.int64)

    if not (mins.ndim == maxs.ndim == N.ndim == 1) or not (
        mins.size == maxs.size == N.size
    ):
        raise ValueError(
            f"dimension mismatch: len(mins)={mins.size}, "
            f"len(maxs)={maxs.size}, len(N)={N.size}"
        )
    if mins.size < 1:
        raise ValueError("grid needs at least one dimension")
    if np.any(maxs <= mins):
        raise ValueError(f"expected mins < maxs, got {mins} and {maxs}")
    if np.any(N < 3):
        raise ValueError(f"expected at least 3 nodes per dimension, got {N}")

    periodic = set(int(d) for d in periodic_dims)
    if not periodic <= set(range(mins.size)):
        raise ValueError(f"periodic dimensions {sorted(periodic)} out of range")

    boundary = tuple(
        Boundary.PERIODIC if d in periodic else Boundary.EXTRAPOLATE_LINEAR
        for d in range(mins.size)
    )
    return Grid(mins=mins, maxs=maxs, N=N, boundary=boundary)


# {{{ ghost cells

def pad_ghost(grid: Grid, v: np.ndarray, dim: int, width: int) -> np.ndarray:
    """Pad *v* with *width* ghost cells on both sides of dimension *dim*.

    Periodic dimensions wrap cyclically. Other dimensions continue the
    boundary slope, ``ghost_k = edge + k * (edge - next_inner)``.
    """
    n = v.shape[dim]
    if width < 1:
        raise ValueError(f"ghost width must be positive, got {width}")
    if width >= n:
        raise ValueError(
            f"ghost width {width} does not fit in {n} nodes along dimension {dim}"
        )

    if grid.is_periodic(dim):
        return np.concatenate(
            [_take(v, dim, slice(n - width, n)), v, _take(v, dim, slice(0, width))],
            axis=dim,
        )

    k = _broadcast_along(np.arange(1, width + 1, dtype=v.dtype), v.ndim, dim)
    lo_edge, lo_inner = _take(v, dim, slice(0, 1)), _take(v, dim, slice(1, 2))
    hi_edge, hi_inner = _take(v, dim, slice(n - 1, n)), _take(v, dim, slice(n - 2, n - 1))

    # ordered outward-in on the low side
    lo = lo_edge + k[_reverse(v.ndim, dim)] * (lo_edge - lo_inner)
    hi = hi_edge + k * (hi_edge - hi_inner)
    return np.concatenate([lo, v, hi], axis=dim)


def shift_along_dim(padded: np.ndarray, dim: int, offset: int, width: int) -> np.ndarray:
    """View of the interior of *padded* so that entry ``i`` reads ``i + offset``."""
    if abs(offset) > width:
        raise ValueError(f"offset {offset} exceeds ghost width {width}")
    n = padded.shape[dim] - 2 * width
    return _take(padded, dim, slice(width + offset, width + offset + n))


def _take(a, dim, s):
    index = [slice(None)] * a.ndim
    index[dim] = s
    return a[tuple(index)]


def _broadcast_along(x, ndim, dim):
    shape = [1] * ndim
    shape[dim] = -1
    return x.reshape(shape)


def _reverse(ndim, dim):
    index = [slice(None)] * ndim
    index[dim] = slice(None, None, -1)
    return tuple(index)

# }}}
