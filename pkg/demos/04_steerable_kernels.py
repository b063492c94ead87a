"""Building steerable kernels by filter transform and checking steerability.

A kernel is steerable when evaluating it at transformed coordinates equals
conjugating it by the input/output representations.  Each constructor here
realizes one (rep_in -> rep_out) pair from plain rotated copies of base
filters; the check prints the worst deviation over all group elements.
"""

import numpy as np

from filtra import (
    capacity_report,
    check_kernel_equivariance,
    circulant_kernel,
    cyclic_group,
    dihedral_group,
    irrep_to_regular_cyclic,
    irrep_to_regular_dihedral,
    regular_to_regular_cyclic,
    reverse_kernel,
    trivial_to_regular_cyclic,
)

np.set_printoptions(precision=3, suppress=True)
rng = np.random.default_rng(0)


def worst_residual(kernel):
    spec = kernel.group
    return max(check_kernel_equivariance(kernel, g)[0] for g in spec.elements())


base = rng.uniform(-1.0, 1.0, (3, 3))

# Trivial -> regular: the kernel rows are simply the rotated copies; a rotated
# input makes the output channels cycle.
k1 = trivial_to_regular_cyclic(base, 4)
print(f"trivial->regular on c4: {k1.grids.shape[0]}x{k1.grids.shape[1]} grids, "
      f"worst residual {worst_residual(k1):.2e}")

# Irrep -> regular: each rotated copy is scaled by the cosine/sine values of
# the input frequency.
k2 = irrep_to_regular_cyclic(base, 4, 1)
print(f"irrep(k=1)->regular on c4: worst residual {worst_residual(k2):.2e}")

k3 = irrep_to_regular_dihedral(base, 4, 1, 1)
print(f"irrep(j=1,k=1)->regular on d4: worst residual {worst_residual(k3):.2e}")

# Regular -> regular: one independent base filter per frequency block, mixed
# by the inverse DCT basis.
bases = [rng.uniform(-1.0, 1.0, (3, 3)) for _ in range(3)]
k4 = regular_to_regular_cyclic(bases, 4)
print(f"regular->regular on c4: worst residual {worst_residual(k4):.2e}")

# Transposing a steerable kernel reverses its direction (all representations
# here are orthogonal).
k5 = reverse_kernel(k4)
print(f"reversed regular->regular: worst residual {worst_residual(k5):.2e}")

# The single-filter circulant baseline stores the same N*N grids but only one
# base filter's worth of free weights.
k6 = circulant_kernel(base, 4)
print(f"circulant baseline on c4: worst residual {worst_residual(k6):.2e}")

print("\nweight capacity at N=8, S=5 (free weights vs stored scalars):")
for kind in ("reg2reg", "orn"):
    rep = capacity_report(8, 5, kind)
    print(f"  {rep.kernel_kind:8s} {rep.independent_weights:5d} / {rep.stored_filter_scalars}")

# Interpolation honesty: at angles that do not map the grid to itself the
# constraint holds only approximately, and the residual is simply reported.
k7 = trivial_to_regular_cyclic(rng.uniform(-1.0, 1.0, (9, 9)), 8)
c8 = cyclic_group(8)
print("\nper-element residuals for a 9x9 trivial->regular kernel on c8 (bilinear):")
for g in c8.elements():
    abs_res, _ = check_kernel_equivariance(k7, g)
    tag = "exact" if abs_res < 1e-12 else "interpolated"
    print(f"  rotation index {g.i1}: {abs_res:.3e}  ({tag})")

# Nearest-neighbor 3x3 kernels are exact for every element of c8/d8.
k8 = trivial_to_regular_cyclic(base, 8, "nearest")
print(f"\n3x3 nearest trivial->regular on c8: worst residual {worst_residual(k8):.2e}")
d8 = dihedral_group(8)
k9 = irrep_to_regular_dihedral(base, 8, 1, 1, "nearest")
print(f"3x3 nearest irrep->regular on d8: worst residual {worst_residual(k9):.2e}")
