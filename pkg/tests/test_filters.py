import math

import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

from filtra.filters import (
    _round_half_down,
    check_filter_grid,
    reflected_rotation_stack,
    resample_reflect,
    resample_rotate,
    rotation_cos_sin,
    rotation_stack,
    transform_filter,
)
from filtra.groups import TAU, cyclic_group, dihedral_group

GRID3 = np.arange(1.0, 10.0).reshape(3, 3)


def test_grid_validation():
    with pytest.raises(ValueError):
        check_filter_grid(np.zeros((2, 2)))
    with pytest.raises(ValueError):
        check_filter_grid(np.zeros((3, 5)))
    with pytest.raises(ValueError):
        check_filter_grid(np.array([[np.nan]]))
    with pytest.raises(ValueError):
        resample_rotate(GRID3, 0.1, mode="bicubic")


def test_rotation_cos_sin_snaps_quarter_turns():
    assert rotation_cos_sin(0.0) == (1.0, 0.0)
    assert rotation_cos_sin(math.pi / 2) == (0.0, 1.0)
    assert rotation_cos_sin(math.pi) == (-1.0, 0.0)
    assert rotation_cos_sin(3 * math.pi / 2) == (0.0, -1.0)
    assert rotation_cos_sin(-math.pi / 2) == (0.0, -1.0)


def test_rotate_zero_is_identity():
    for mode in ("bilinear", "nearest"):
        assert_array_equal(resample_rotate(GRID3, 0.0, mode), GRID3)


def test_rotate_quarter_turn_both_modes():
    expected = np.array([[3, 6, 9], [2, 5, 8], [1, 4, 7]], dtype=float)
    for mode in ("bilinear", "nearest"):
        assert_array_equal(resample_rotate(GRID3, math.pi / 2, mode), expected)


def test_rotate_eighth_turn_nearest_is_ring_shift():
    got = resample_rotate(GRID3, math.pi / 4, "nearest")
    expected = np.array([[2, 3, 6], [1, 5, 9], [4, 7, 8]], dtype=float)
    assert_array_equal(got, expected)
    # the eight rotations form a cyclic permutation group
    g = GRID3.copy()
    for _ in range(8):
        g = resample_rotate(g, math.pi / 4, "nearest")
    assert_array_equal(g, GRID3)


@pytest.mark.parametrize("n", (4, 8, 12))
def test_periodicity_bit_exact(n):
    rng = np.random.default_rng(5)
    f = rng.uniform(-1.0, 1.0, (5, 5))
    for i in range(n):
        theta = TAU * i / n
        for mode in ("bilinear", "nearest"):
            a = resample_rotate(f, theta, mode)
            b = resample_rotate(f, theta - TAU, mode)
            assert_array_equal(a, b)


def test_quarter_turns_are_permutations():
    rng = np.random.default_rng(6)
    f = rng.uniform(-1.0, 1.0, (9, 9))
    for theta in (0.0, math.pi / 2, math.pi, 3 * math.pi / 2):
        g = resample_rotate(f, theta, "bilinear")
        # fsum is exactly rounded, so it is blind to the summation order
        assert math.fsum(g.ravel()) == math.fsum(f.ravel())
        assert g.min() == f.min()
        assert g.max() == f.max()
        assert sorted(g.ravel()) == sorted(f.ravel())


def test_bilinear_linearity():
    rng = np.random.default_rng(7)
    f = rng.uniform(-1.0, 1.0, (7, 7))
    h = rng.uniform(-1.0, 1.0, (7, 7))
    a, b = 1.7, -0.3
    theta = 0.37
    combined = resample_rotate(a * f + b * h, theta, "bilinear")
    separate = a * resample_rotate(f, theta, "bilinear") + b * resample_rotate(h, theta, "bilinear")
    assert_allclose(combined, separate, atol=1e-12)


def test_out_of_grid_reads_zero():
    # rotating an all-ones patch by 45 deg attenuates the corner to 2 - sqrt(2)
    ones = np.ones((3, 3))
    got = resample_rotate(ones, math.pi / 4, "bilinear")
    assert got[1, 1] == 1.0
    assert_allclose(got[0, 0], 2.0 - math.sqrt(2.0), atol=1e-12)


def test_nearest_ties_round_toward_smaller_index():
    assert_array_equal(_round_half_down(np.array([1.5, 2.5, -0.5, 0.4, 0.6])), [1, 2, -1, 0, 1])


def test_reflect_examples():
    assert_array_equal(resample_reflect(GRID3), [[7, 8, 9], [4, 5, 6], [1, 2, 3]])
    sym = np.array([[1, 2, 3], [4, 5, 6], [1, 2, 3]], dtype=float)
    assert_array_equal(resample_reflect(sym), sym)
    rng = np.random.default_rng(8)
    f = rng.uniform(-1.0, 1.0, (9, 9))
    assert_array_equal(resample_reflect(resample_reflect(f)), f)


def test_rotation_stack():
    base = GRID3
    stack = rotation_stack(base, 1)
    assert stack.entries.shape == (1, 3, 3)
    assert_array_equal(stack.entries[0], base)

    stack4 = rotation_stack(base, 4)
    for n in range(4):
        assert_array_equal(stack4.entries[n], resample_rotate(base, TAU * n / 4))
    assert_array_equal(stack4.entries[0], base)

    stack8 = rotation_stack(base, 8, "nearest")
    g = base.copy()
    for n in range(8):
        assert_array_equal(stack8.entries[n], g)
        g = resample_rotate(g, math.pi / 4, "nearest")


def test_reflected_rotation_stack():
    sym = np.array([[1, 2, 3], [4, 5, 6], [1, 2, 3]], dtype=float)
    assert_array_equal(reflected_rotation_stack(sym, 1).entries[0], sym)

    base = GRID3
    rstack = reflected_rotation_stack(base, 4)
    assert_array_equal(rstack.entries[0], resample_reflect(base))
    # N=2 entry 1: reflect then rotate half a turn = column reversal
    rstack2 = reflected_rotation_stack(base, 2)
    assert_array_equal(rstack2.entries[1], base[:, ::-1])
    assert rstack.reflected and not rotation_stack(base, 4).reflected


def test_transform_filter_examples():
    c4 = cyclic_group(4)
    assert_array_equal(transform_filter(GRID3, c4.identity()), GRID3)
    d4 = dihedral_group(4)
    assert_array_equal(transform_filter(GRID3, d4.element(1, 0)), resample_reflect(GRID3))
    stack = rotation_stack(GRID3, 4)
    assert_array_equal(transform_filter(stack.entries[0], c4.element(0, 1)), stack.entries[3])


def test_transform_filter_action_property():
    # evaluating at transformed coordinates composes contravariantly:
    # transform(transform(f, h), g) equals transform(f, h * g)
    rng = np.random.default_rng(9)
    f = rng.uniform(-1.0, 1.0, (5, 5))
    d4 = dihedral_group(4)
    for g in d4.elements():
        for h in d4.elements():
            lhs = transform_filter(transform_filter(f, h), g)
            rhs = transform_filter(f, h.compose(g))
            assert_array_equal(lhs, rhs)
