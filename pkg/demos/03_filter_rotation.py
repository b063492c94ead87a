"""Rotating and reflecting discrete filters.

Filter grids are small odd-sized patches resampled under planar rotations.
Quarter turns permute pixels exactly; on a 3x3 grid under nearest-neighbor
interpolation, eighth turns are exact too (the outer ring shifts one slot).
Everything else is honest interpolation.
"""

import numpy as np

from filtra import (
    dihedral_group,
    reflected_rotation_stack,
    resample_reflect,
    resample_rotate,
    rotation_stack,
    transform_filter,
)

np.set_printoptions(precision=3, suppress=True)

patch = np.arange(1.0, 10.0).reshape(3, 3)
print("base patch:")
print(patch)

print("\nquarter turn (exact pixel permutation, either mode):")
print(resample_rotate(patch, np.pi / 2))

print("\neighth turn, nearest neighbor: the ring shifts by one, center fixed:")
print(resample_rotate(patch, np.pi / 4, "nearest"))

eight = patch.copy()
for _ in range(8):
    eight = resample_rotate(eight, np.pi / 4, "nearest")
print("eight eighth-turns return the original bit-for-bit:", np.array_equal(eight, patch))

print("\neighth turn, bilinear: interpolated, mass leaks off the corners:")
print(resample_rotate(patch, np.pi / 4, "bilinear"))

print("\nreflection about the x-axis is a row flip:")
print(resample_reflect(patch))

# A rotation stack holds the N rotated copies of one base filter; the
# reflected stack starts from the mirrored patch.  These two stacks are the
# raw material for every steerable kernel in this package.
stack = rotation_stack(patch, 4)
print("\nrotation stack entries for N=4 (each a quarter turn of the last):")
for i, entry in enumerate(stack.entries):
    print(f"entry {i}:\n{entry}")

rstack = reflected_rotation_stack(patch, 4)
print("reflected stack entry 0 equals the row-flipped base:",
      np.array_equal(rstack.entries[0], resample_reflect(patch)))

# transform_filter evaluates a filter at coordinates moved by a group
# element: reflections first, then rotation.
d4 = dihedral_group(4)
g = d4.element(1, 1)
print(f"\npatch evaluated at coordinates moved by {g}:")
print(transform_filter(patch, g))
