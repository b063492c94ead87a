"""Decomposing regular representations with discrete cosine transform bases.

The cyclic basis V stacks sampled cosine/sine columns per rotation frequency;
the dihedral basis W doubles it as [[V, V], [V, -V]].  Conjugating by the
basis turns the big permutation matrices into small independent irrep blocks,
which is also what lets one base filter per frequency span a
regular-to-regular kernel.
"""

import numpy as np

from filtra import (
    cyclic_group,
    dct_basis_cyclic,
    dct_basis_dihedral,
    decompose_regular,
    dihedral_group,
    regular_rep_fractional,
    regular_rep_matrix,
    rotation_permutation,
)

np.set_printoptions(precision=3, suppress=True, linewidth=140)

n = 6
v = dct_basis_cyclic(n)
print(f"cyclic basis for N={n} (column blocks {[(j, k) for j, k, _ in v.blocks]}):")
print(v.matrix)

# Columns are orthogonal but unnormalized: the Gram matrix is diagonal with
# entries N or N/2, so the inverse is a scaled transpose.
print("\nGram diagonal:", np.diag(v.matrix.T @ v.matrix))

g = cyclic_group(n).element(0, 1)
basis, d = decompose_regular(g)
print(f"\nblock-diagonal form of the rotation {g}:")
print(d)
residual = np.abs(basis.matrix @ d @ basis.inverse() - regular_rep_matrix(g)).max()
print(f"reconstruction residual: {residual:.2e}")

# The dihedral basis does the same for D_N, including reflected elements.
h = dihedral_group(n).element(1, 2)
basis_w, d_w = decompose_regular(h)
residual = np.abs(basis_w.matrix @ d_w @ basis_w.inverse() - regular_rep_matrix(h)).max()
print(f"\ndihedral reconstruction residual at {h}: {residual:.2e}")
print("W column blocks:", [(j, k) for j, k, _ in dct_basis_dihedral(n).blocks])

# Because the irrep blocks are trigonometric in the rotation index, the
# regular representation extends to fractional indices: a smooth (nonlinear)
# interpolation between neighboring permutation matrices.
print("\nregular representation of C_4 at fractional rotation index t=0.5:")
print(regular_rep_fractional(4, 0.5))
print("at t=1 it lands exactly on the cyclic shift:")
print(np.abs(regular_rep_fractional(4, 1.0) - rotation_permutation(4, 1)).max())
