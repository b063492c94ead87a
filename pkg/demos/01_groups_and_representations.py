"""Group elements and their representation matrices.

Walks through the element encoding (i0, i1), composition, the planar angle
action, and the three representation kinds: trivial, irreducible, regular.
"""

import numpy as np

from filtra import cyclic_group, dihedral_group, irrep_matrix, regular_rep_matrix

np.set_printoptions(precision=3, suppress=True, linewidth=120)

# A dihedral group D_4: four rotations, four reflected elements.
d4 = dihedral_group(4)
print(f"{d4.name}: order {d4.order}")
print("elements:", d4.elements())

# Composition follows the angle action: (i0, i1) sends an angle phi to
# (-1)**i0 * phi + 2*pi*i1/N.  Rotation then reflection is again a reflection.
r = d4.element(0, 1)   # quarter turn
m = d4.element(1, 0)   # reflection about the x-axis
print("\nrotation * reflection =", r.compose(m))
print("reflection * rotation =", m.compose(r))
print("a reflection squares to the identity:", m.compose(m))

phi = 0.3
print(f"\nangle action of {r} on {phi}: {r.angle_action(phi):.4f}")
print(f"angle action of {m} on {phi}: {m.angle_action(phi):.4f}")

# The regular representation permutes coordinates indexed by the elements
# themselves (i0-major, i1 ascending).
print("\nregular representation of the quarter turn:")
print(regular_rep_matrix(r))
print("regular representation of the reflection:")
print(regular_rep_matrix(m))

# Irreps are tagged by a reflection frequency j and a rotation frequency k.
# Frequency k spins a 2-vector k times per full input turn.
print("\nirrep (j=0, k=1) at the quarter turn (a 90-degree 2D rotation):")
print(irrep_matrix(r, 0, 1))
print("irrep (j=1, k=1) at the reflection:")
print(irrep_matrix(m, 1, 1))

# Representations are group homomorphisms: matrices multiply like elements.
c8 = cyclic_group(8)
g, h = c8.element(0, 3), c8.element(0, 7)
lhs = irrep_matrix(g.compose(h), 0, 2)
rhs = irrep_matrix(g, 0, 2) @ irrep_matrix(h, 0, 2)
print(f"\nhomomorphism check on {c8.name}: max deviation {np.abs(lhs - rhs).max():.2e}")
