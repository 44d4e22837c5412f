import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra import numpy as hnp

from hjreach.grid import Boundary, create_grid, pad_ghost, shift_along_dim


def test_periodic_heading_grid():
    g = create_grid((-5, -5, -np.pi), (5, 5, np.pi), 41 * np.ones(3), periodic_dims=[2])
    assert g.dim == 3
    assert g.shape == (41, 41, 41)
    np.testing.assert_allclose(g.dx, (0.25, 0.25, 2 * np.pi / 40), rtol=0, atol=1e-12)
    assert g.boundary == (Boundary.EXTRAPOLATE_LINEAR, Boundary.EXTRAPOLATE_LINEAR,
                          Boundary.PERIODIC)
    assert all(x.shape == g.shape for x in g.xs)


def test_two_interval_grid():
    g = create_grid([0], [1], [3])
    np.testing.assert_array_equal(g.vs[0], [0.0, 0.5, 1.0])
    assert g.dx[0] == 0.5


@pytest.mark.parametrize("mins, maxs, N", [
    ((0,), (1,), (2,)),
    ((0, 0), (1,), (5, 5)),
    ((0,), (1,), (5, 5)),
    ((1,), (1,), (5,)),
    ((0, 2), (1, 1), (5, 5)),
])
def test_create_grid_rejects(mins, maxs, N):
    with pytest.raises(ValueError):
        create_grid(mins, maxs, N)


def test_axes_and_coords():
    g = create_grid((-1, 0, 2), (1, 3, 5), (5, 7, 4))
    for d in range(g.dim):
        v = g.vs[d]
        assert v.size == g.N[d]
        assert v[0] == g.mins[d] and v[-1] == g.maxs[d]
        np.testing.assert_allclose(np.diff(v), g.dx[d], rtol=1e-13)

        # coords[d] varies only along d, and any line along d is vs[d]
        line = [0] * g.dim
        line[d] = slice(None)
        np.testing.assert_array_equal(g.xs[d][tuple(line)], v)
        assert np.all(np.ptp(g.xs[d], axis=tuple(k for k in range(g.dim) if k != d)) == 0)


def test_pad_periodic():
    g = create_grid([0], [3], [4], periodic_dims=[0])
    np.testing.assert_array_equal(pad_ghost(g, np.array([1., 2, 3, 4]), 0, 1),
                                  [4, 1, 2, 3, 4, 1])


def test_pad_extrapolate():
    g = create_grid([0], [3], [4])
    np.testing.assert_array_equal(pad_ghost(g, np.array([0., 1, 2, 3]), 0, 2),
                                  [-2, -1, 0, 1, 2, 3, 4, 5])
    g = create_grid([0], [2], [3])
    np.testing.assert_array_equal(pad_ghost(g, np.array([7., 7, 7]), 0, 1),
                                  [7, 7, 7, 7, 7])


def test_pad_too_wide():
    g = create_grid([0], [2], [3])
    with pytest.raises(ValueError):
        pad_ghost(g, np.zeros(3), 0, 3)
    with pytest.raises(ValueError):
        pad_ghost(g, np.zeros(3), 0, 0)


def test_shift_examples():
    g = create_grid([0], [3], [4], periodic_dims=[0])
    padded = pad_ghost(g, np.array([1., 2, 3, 4]), 0, 1)
    np.testing.assert_array_equal(shift_along_dim(padded, 0, -1, 1), [4, 1, 2, 3])
    np.testing.assert_array_equal(shift_along_dim(padded, 0, 0, 1), [1, 2, 3, 4])
    np.testing.assert_array_equal(shift_along_dim(padded, 0, 1, 1), [2, 3, 4, 1])
    with pytest.raises(ValueError):
        shift_along_dim(padded, 0, 2, 1)


fields = st.integers(4, 9).flatmap(
    lambda n: hnp.arrays(np.float64, (n, 5), elements=st.floats(-1e6, 1e6)))


@settings(max_examples=50, deadline=None)
@given(v=fields, width=st.integers(1, 3), periodic=st.booleans(), dim=st.integers(0, 1))
def test_pad_properties(v, width, periodic, dim):
    g = create_grid((0, 0), (1, 1), v.shape, periodic_dims=[dim] if periodic else [])
    n = v.shape[dim]
    padded = pad_ghost(g, v, dim, width)
    assert padded.shape[dim] == n + 2 * width

    # interior untouched, bit for bit
    np.testing.assert_array_equal(shift_along_dim(padded, dim, 0, width), v)

    if periodic:
        idx = (np.arange(n + 2 * width) - width) % n
        np.testing.assert_array_equal(padded, np.take(v, idx, axis=dim))

    for offset in range(-width, width + 1):
        shifted = shift_along_dim(padded, dim, offset, width)
        if periodic:
            np.testing.assert_array_equal(np.roll(shifted, offset, axis=dim), v)
