import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

from filtra.filters import resample_reflect, resample_rotate
from filtra.groups import TAU, cyclic_group, dihedral_group
from filtra.harness import check_kernel_equivariance
from filtra.kernels import (
    capacity_report,
    circulant_kernel,
    irrep_to_regular_cyclic,
    irrep_to_regular_dihedral,
    regular_to_regular_cyclic,
    regular_to_regular_dihedral,
    reverse_kernel,
    trivial_to_regular_cyclic,
    trivial_to_regular_dihedral,
)

BASE = np.arange(1.0, 10.0).reshape(3, 3)


def test_trivial_to_regular_cyclic():
    k = trivial_to_regular_cyclic(np.array([[2.5]]), 4)
    assert k.grids.shape == (4, 1, 1, 1)
    assert_array_equal(k.grids[:, 0, 0, 0], [2.5] * 4)

    k = trivial_to_regular_cyclic(BASE, 4)
    for n in range(4):
        assert_array_equal(k.grids[n, 0], resample_rotate(BASE, TAU * n / 4))
    assert k.rep_in.kind == "trivial" and k.rep_out.kind == "regular"

    abs_res, rel_res = check_kernel_equivariance(k, cyclic_group(4).element(0, 1))
    assert abs_res == 0.0 and rel_res == 0.0


def test_trivial_to_regular_dihedral():
    base = np.array([[1.0]])
    k = trivial_to_regular_dihedral(base, 1)
    assert k.grids.shape == (2, 1, 1, 1)
    assert_array_equal(k.grids[0, 0], base)
    assert_array_equal(k.grids[1, 0], resample_reflect(base))

    sym = np.array([[1, 2, 3], [4, 5, 6], [1, 2, 3]], dtype=float)
    k = trivial_to_regular_dihedral(sym, 4)
    assert_array_equal(k.grids[0, 0], k.grids[4, 0])

    k = trivial_to_regular_dihedral(BASE, 4)
    abs_res, _ = check_kernel_equivariance(k, dihedral_group(4).element(1, 1))
    assert abs_res == 0.0


def test_irrep_to_regular_cyclic():
    k0 = irrep_to_regular_cyclic(BASE, 4, 0)
    triv = trivial_to_regular_cyclic(BASE, 4)
    assert_array_equal(k0.grids, triv.grids)

    w = 0.75
    k1 = irrep_to_regular_cyclic(np.array([[w]]), 4, 1)
    assert k1.grids.shape == (4, 2, 1, 1)
    angles = TAU * np.arange(4) / 4
    assert_allclose(k1.grids[:, 0, 0, 0], w * np.cos(angles), atol=1e-15)
    assert_allclose(k1.grids[:, 1, 0, 0], w * np.sin(angles), atol=1e-15)

    abs_res, _ = check_kernel_equivariance(k1, cyclic_group(4).element(0, 1))
    assert abs_res <= 1e-12
    with pytest.raises(ValueError):
        irrep_to_regular_cyclic(BASE, 4, 3)


def test_irrep_to_regular_dihedral():
    k = irrep_to_regular_dihedral(BASE, 4, 0, 0)
    assert_array_equal(k.grids, trivial_to_regular_dihedral(BASE, 4).grids)

    base = np.array([[1.5]])
    k = irrep_to_regular_dihedral(base, 1, 1, 0)
    assert_array_equal(k.grids[0, 0], base)
    assert_array_equal(k.grids[1, 0], -resample_reflect(base))

    k = irrep_to_regular_dihedral(BASE, 4, 1, 1)
    abs_res, _ = check_kernel_equivariance(k, dihedral_group(4).element(1, 0))
    assert abs_res <= 1e-12
    with pytest.raises(ValueError):
        irrep_to_regular_dihedral(BASE, 4, 2, 1)


def test_regular_to_regular_cyclic():
    k = regular_to_regular_cyclic([BASE], 1)
    assert_array_equal(k.grids[0, 0], BASE)

    a, b = 2.0, 5.0
    k = regular_to_regular_cyclic([np.array([[a]]), np.array([[b]])], 2)
    got = k.grids[:, :, 0, 0]
    expected = 0.5 * np.array([[a + b, a - b], [a - b, a + b]])
    assert_allclose(got, expected, atol=1e-14)

    rng = np.random.default_rng(2)
    bases = [rng.uniform(-1, 1, (3, 3)) for _ in range(3)]
    k = regular_to_regular_cyclic(bases, 4)
    for g in cyclic_group(4).elements():
        abs_res, _ = check_kernel_equivariance(k, g)
        assert abs_res <= 1e-12
    with pytest.raises(ValueError):
        regular_to_regular_cyclic(bases[:2], 4)


def test_regular_to_regular_cyclic_is_linear_in_each_base():
    rng = np.random.default_rng(3)
    bases_a = [rng.uniform(-1, 1, (3, 3)) for _ in range(3)]
    bases_b = [rng.uniform(-1, 1, (3, 3)) for _ in range(3)]
    alpha, beta = 0.6, -1.1
    mixed = regular_to_regular_cyclic(
        [alpha * a + beta * b for a, b in zip(bases_a, bases_b)], 4
    )
    ka = regular_to_regular_cyclic(bases_a, 4)
    kb = regular_to_regular_cyclic(bases_b, 4)
    assert_allclose(mixed.grids, alpha * ka.grids + beta * kb.grids, atol=1e-12)


def test_regular_to_regular_dihedral():
    b0, b1 = 2.0, 3.0
    k = regular_to_regular_dihedral([np.array([[b0]]), np.array([[b1]])], 1)
    got = k.grids[:, :, 0, 0]
    expected = 0.5 * np.array([[b0 + b1, b0 - b1], [b0 - b1, b0 + b1]])
    assert_allclose(got, expected, atol=1e-14)

    rng = np.random.default_rng(4)
    k = regular_to_regular_dihedral([rng.uniform(-1, 1, (3, 3)) for _ in range(4)], 2)
    assert k.grids.shape == (4, 4, 3, 3)

    k = regular_to_regular_dihedral([rng.uniform(-1, 1, (3, 3)) for _ in range(6)], 4)
    for g in dihedral_group(4).elements():
        abs_res, _ = check_kernel_equivariance(k, g)
        assert abs_res <= 1e-12
    with pytest.raises(ValueError):
        regular_to_regular_dihedral([BASE], 4)


def test_reverse_kernel():
    k = trivial_to_regular_cyclic(BASE, 4)
    rev = reverse_kernel(k)
    assert rev.grids.shape == (1, 4, 3, 3)
    assert rev.rep_in.kind == "regular" and rev.rep_out.kind == "trivial"
    assert_array_equal(reverse_kernel(rev).grids, k.grids)

    g = cyclic_group(4).element(0, 1)
    k_irrep = irrep_to_regular_cyclic(BASE, 4, 1)
    forward, _ = check_kernel_equivariance(k_irrep, g)
    reversed_, _ = check_kernel_equivariance(reverse_kernel(k_irrep), g)
    assert forward <= 1e-12 and reversed_ <= 1e-12

    # duality: the reversed residual matrix is the transpose of the forward
    # one, so the max-abs values coincide even at interpolated angles
    k_big = irrep_to_regular_cyclic(np.arange(1.0, 82.0).reshape(9, 9), 8, 1)
    for g in cyclic_group(8).elements():
        forward, _ = check_kernel_equivariance(k_big, g)
        reversed_, _ = check_kernel_equivariance(reverse_kernel(k_big), g)
        assert forward == reversed_


def test_circulant_kernel():
    k = circulant_kernel(BASE, 1)
    assert_array_equal(k.grids[0, 0], BASE)

    n = 4
    k = circulant_kernel(BASE, n)
    stack = [resample_rotate(BASE, TAU * m / n) for m in range(n)]
    for i in range(n):
        for j in range(n):
            assert_array_equal(k.grids[i, j], stack[(2 * i - j) % n])
    for g in cyclic_group(n).elements():
        abs_res, _ = check_kernel_equivariance(k, g)
        assert abs_res == 0.0


def test_capacity_report():
    for kind in ("reg2reg", "orn"):
        rep = capacity_report(1, 3, kind)
        assert rep.independent_weights == 9
        assert rep.stored_filter_scalars == 9
    filtra_rep = capacity_report(8, 5, "reg2reg")
    assert filtra_rep.independent_weights == (8 // 2 + 1) * 25 == 125
    assert filtra_rep.stored_filter_scalars == 8 * 8 * 25
    assert filtra_rep.column_block_count == 8 * 4
    orn_rep = capacity_report(8, 5, "orn")
    assert orn_rep.independent_weights == 25
    assert orn_rep.stored_filter_scalars == 1600
    assert orn_rep.column_block_count == 8
    with pytest.raises(ValueError):
        capacity_report(8, 5, "other")
