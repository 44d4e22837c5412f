import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hjreach.derivatives import (
    GHOST_WIDTH, SCHEMES, get_scheme, upwind_first_eno2, upwind_first_eno3,
    upwind_first_first, upwind_first_weno5)
from hjreach.grid import create_grid

ALL = sorted(SCHEMES)


def periodic_unit(n):
    return create_grid([0.0], [1.0 - 1.0 / n], [n], periodic_dims=[0])


def max_error(scheme, grid, v, exact, trim=0):
    left, right, _ = scheme(grid, v, 0)
    sl = slice(trim, grid.shape[0] - trim)
    return max(np.max(np.abs(left[sl] - exact[sl])), np.max(np.abs(right[sl] - exact[sl])))


def test_first_examples():
    g = create_grid([-1], [2], [7])
    x = g.xs[0]
    left, right, dim = upwind_first_first(g, 3 * x, 0)
    assert dim == 0
    np.testing.assert_allclose(left, 3, atol=1e-12)
    np.testing.assert_allclose(right, 3, atol=1e-12)

    left, right, _ = upwind_first_first(g, x**2, 0)
    i = int(np.flatnonzero(x == 1.0)[0])
    # (1 - 0.25) / 0.5 and (2.25 - 1) / 0.5
    assert left[i] == pytest.approx(1.5, abs=1e-14)
    assert right[i] == pytest.approx(2.5, abs=1e-14)

    left, right, _ = upwind_first_first(g, np.full(7, 4.0), 0)
    assert np.all(left == 0) and np.all(right == 0)


@pytest.mark.parametrize("name", ALL)
def test_linear_exact(name):
    scheme = get_scheme(name)
    g = create_grid((-1, 0), (2, 1), (11, 9))
    v = -2.5 * g.xs[0] + 0.75 * g.xs[1] + 4.0
    for d, slope in enumerate((-2.5, 0.75)):
        left, right, _ = scheme(g, v, d)
        np.testing.assert_allclose(left, slope, rtol=0, atol=1e-12)
        np.testing.assert_allclose(right, slope, rtol=0, atol=1e-12)


def test_eno2_quadratic_and_cubic():
    # quadratics are reproduced exactly away from the extrapolated ghosts
    g = create_grid([-1], [1], [41])
    x = g.xs[0]
    assert max_error(upwind_first_eno2, g, x**2, 2 * x, trim=2) < 1e-12

    errors = []
    for n in (41, 81, 161):
        g = create_grid([-1], [1], [n])
        x = g.xs[0]
        errors.append(max_error(upwind_first_eno2, g, x**3, 3 * x**2, trim=2))
    ratios = np.array(errors[:-1]) / np.array(errors[1:])
    np.testing.assert_allclose(ratios, 4.0, rtol=0.1)


def test_eno2_step_candidates():
    # v = sign(x) with the jump between nodes j - 1 and j
    g = create_grid([-1], [1], [20])
    dx = g.dx[0]
    v = np.sign(g.xs[0])
    j = int(np.flatnonzero(v > 0)[0])
    left, right, _ = upwind_first_eno2(g, v, 0)

    # hand enumeration: D1 = 2/dx across the jump, D2_{j-1} = 1/dx**2 and
    # D2_j = -1/dx**2 tie in magnitude and the left-leaning one wins
    assert left[j] == pytest.approx(2 / dx + dx / dx**2)
    assert right[j - 1] == pytest.approx(2 / dx - dx / dx**2)
    # wherever the base interval avoids the jump the smooth side is chosen
    assert np.flatnonzero(left).tolist() == [j]
    assert np.flatnonzero(right).tolist() == [j - 1]


def test_eno3_cubic_exact():
    g = create_grid([-1], [1], [41])
    x = g.xs[0]
    assert max_error(upwind_first_eno3, g, x**3, 3 * x**2, trim=3) < 1e-10


def test_weno5_quartic():
    errors = []
    # n = 21 is pre-asymptotic around the critical point at x = 0
    for n in (41, 81, 161, 321):
        g = create_grid([-1], [1], [n])
        x = g.xs[0]
        errors.append(max_error(upwind_first_weno5, g, x**4, 4 * x**3, trim=3))
    orders = np.log2(np.array(errors[:-1]) / np.array(errors[1:]))
    assert np.all(orders >= 4.0)


@pytest.mark.parametrize("name, ratio", [
    ("first", 2.0), ("eno2", 4.0), ("eno3", 8.0), ("weno5", 32.0),
])
def test_sine_refinement_ratio(name, ratio):
    scheme = get_scheme(name)
    errors = []
    for n in (64, 128, 256):
        g = periodic_unit(n)
        x = g.xs[0]
        errors.append(max_error(scheme, g, np.sin(2 * np.pi * x), 2 * np.pi * np.cos(2 * np.pi * x)))
    ratios = np.array(errors[:-1]) / np.array(errors[1:])
    np.testing.assert_allclose(ratios, ratio, rtol=0.1)


@pytest.mark.parametrize("name", ALL)
@pytest.mark.parametrize("seed", range(5))
def test_translation_equivariance(name, seed):
    scheme = get_scheme(name)
    rng = np.random.default_rng(seed)
    g = periodic_unit(16)
    v = rng.normal(size=16)
    shift = int(rng.integers(1, 16))
    left, right, _ = scheme(g, v, 0)
    sleft, sright, _ = scheme(g, np.roll(v, shift), 0)
    np.testing.assert_array_equal(sleft, np.roll(left, shift))
    np.testing.assert_array_equal(sright, np.roll(right, shift))


@pytest.mark.parametrize("name", ALL)
@pytest.mark.parametrize("periodic", [True, False])
@pytest.mark.parametrize("seed", range(5))
def test_reflection_swaps_sides(name, periodic, seed):
    scheme = get_scheme(name)
    rng = np.random.default_rng(seed)
    g = create_grid([-1], [1], [15], periodic_dims=[0] if periodic else [])
    v = rng.normal(size=15)
    left, right, _ = scheme(g, v, 0)
    rleft, rright, _ = scheme(g, v[::-1], 0)
    np.testing.assert_allclose(rleft, -right[::-1], rtol=1e-12, atol=1e-12)
    np.testing.assert_allclose(rright, -left[::-1], rtol=1e-12, atol=1e-12)


@pytest.mark.parametrize("name", ALL)
def test_multidimensional_matches_1d(name):
    scheme = get_scheme(name)
    rng = np.random.default_rng(7)
    g = create_grid((0, 0, 0), (1, 2, 3), (8, 9, 10), periodic_dims=[1])
    v = rng.normal(size=g.shape)
    g1 = create_grid([0], [2], [9], periodic_dims=[0])
    left, right, _ = scheme(g, v, 1)
    l1, r1, _ = scheme(g1, v[3, :, 4], 0)
    np.testing.assert_array_equal(left[3, :, 4], l1)
    np.testing.assert_array_equal(right[3, :, 4], r1)


@settings(max_examples=60, deadline=None)
@given(
    name=st.sampled_from(ALL),
    jumps=st.lists(st.tuples(st.integers(3, 36), st.floats(-5, 5)), min_size=1, max_size=4),
    periodic=st.booleans(),
)
def test_bounded_near_discontinuities(name, jumps, periodic):
    g = create_grid([0], [1], [40], periodic_dims=[0] if periodic else [])
    v = np.zeros(40)
    for where, height in jumps:
        v[where:] += height
    left, right, _ = get_scheme(name)(g, v, 0)
    assert np.all(np.isfinite(left)) and np.all(np.isfinite(right))

    d1 = np.diff(v) / g.dx[0]
    if periodic:
        d1 = np.append(d1, (v[0] - v[-1]) / g.dx[0])
    bound = 2 * np.max(np.abs(d1)) + 1e-9
    assert np.max(np.abs(left)) <= bound
    assert np.max(np.abs(right)) <= bound


def test_ghost_widths_fit_minimum_grids():
    for name, width in GHOST_WIDTH.items():
        n = 2 * width + 1
        g = create_grid([0], [1], [n])
        left, right, _ = get_scheme(name)(g, g.xs[0], 0)
        np.testing.assert_allclose(left, 1.0, atol=1e-12)


def test_unknown_scheme():
    with pytest.raises(ValueError, match="eno2"):
        get_scheme("eno7")
