"""Trivial, regular and irreducible representation matrices, and the DCT bases
that decompose regular representations into irreps.

All representations used here are real and orthogonal.  The regular
representation of a rotation is the cyclic permutation P(i1) = roll(I, i1, 0);
a reflected dihedral element uses the anti-diagonal block built from
B(i1) = flipud(P(-i1 - 1)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import block_diag

from .groups import TAU, GroupElement, GroupSpec


def rotation_permutation(n: int, shift: int) -> np.ndarray:
    """Cyclic permutation matrix: rows of the identity rolled down by `shift`.

    Satisfies rotation_permutation(n, a) @ rotation_permutation(n, b) ==
    rotation_permutation(n, a + b).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return np.roll(np.eye(n), shift % n, axis=0)


def reflection_permutation(n: int, shift: int) -> np.ndarray:
    """Permutation matrix with entry (r, c) = 1 iff r + c == shift (mod n).

    Equals flipud(rotation_permutation(n, -shift - 1)); symmetric and involutive.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return np.flipud(rotation_permutation(n, -shift - 1))


def trivial_rep_matrix(g: GroupElement) -> np.ndarray:
    return np.ones((1, 1))


def regular_rep_matrix(g: GroupElement) -> np.ndarray:
    """Permutation matrix of g acting on coordinates indexed by group elements."""
    n = g.spec.rotation_order
    p = rotation_permutation(n, g.i1)
    if g.spec.reflection_order == 1:
        return p
    if g.i0 == 0:
        return block_diag(p, p)
    b = reflection_permutation(n, g.i1)
    out = np.zeros((2 * n, 2 * n))
    out[:n, n:] = b
    out[n:, :n] = b
    return out


def irrep_dim(spec: GroupSpec, k: int) -> int:
    n = spec.rotation_order
    if k == 0 or (n % 2 == 0 and k == n // 2):
        return 1
    return 2


def _check_frequencies(spec: GroupSpec, j: int, k: int) -> None:
    if j not in (0, 1):
        raise ValueError(f"reflection frequency j must be 0 or 1, got {j}")
    if spec.reflection_order == 1 and j != 0:
        raise ValueError(f"{spec.name} has no reflections: j must be 0")
    if not 0 <= k <= spec.rotation_order // 2:
        raise ValueError(f"rotation frequency k={k} out of range 0..{spec.rotation_order // 2}")


def irrep_matrix(g: GroupElement, j: int, k: int) -> np.ndarray:
    """Irrep with reflection frequency j and rotation frequency k, evaluated at g.

    The two-dimensional case is the rotation by k*2*pi*i1/N followed by
    diag(1, -1) when g reflects, scaled by (-1)**(j*i0).  The one-dimensional
    cases are k = 0 and, for even N, k = N/2 where the rotation part is
    (-1)**i1.
    """
    spec = g.spec
    _check_frequencies(spec, j, k)
    n = spec.rotation_order
    sign = (-1.0) ** (j * g.i0)
    if irrep_dim(spec, k) == 1:
        rot = (-1.0) ** g.i1 if k != 0 else 1.0
        return np.array([[rot * sign]])
    a = k * g.angle
    rot = np.array([[math.cos(a), -math.sin(a)], [math.sin(a), math.cos(a)]])
    if g.i0:
        rot = rot @ np.diag([1.0, -1.0])
    return rot * sign


@dataclass(frozen=True)
class RepSpec:
    """Tag for a trivial, irreducible or regular representation of a group."""

    kind: str  # "trivial" | "irrep" | "regular"
    spec: GroupSpec
    j: int = 0
    k: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("trivial", "irrep", "regular"):
            raise ValueError(f"unknown representation kind {self.kind!r}")
        if self.kind == "irrep":
            _check_frequencies(self.spec, self.j, self.k)

    @property
    def dim(self) -> int:
        if self.kind == "trivial":
            return 1
        if self.kind == "irrep":
            return irrep_dim(self.spec, self.k)
        return self.spec.order

    def matrix(self, g: GroupElement) -> np.ndarray:
        if g.spec != self.spec:
            raise ValueError(f"element of {g.spec.name} fed to a {self.spec.name} representation")
        if self.kind == "trivial":
            return trivial_rep_matrix(g)
        if self.kind == "irrep":
            return irrep_matrix(g, self.j, self.k)
        return regular_rep_matrix(g)

    def label(self) -> str:
        if self.kind == "irrep":
            return f"irrep:{self.j}:{self.k}"
        return self.kind


def trivial_rep(spec: GroupSpec) -> RepSpec:
    return RepSpec("trivial", spec)


def irrep(spec: GroupSpec, j: int, k: int) -> RepSpec:
    return RepSpec("irrep", spec, j, k)


def regular_rep(spec: GroupSpec) -> RepSpec:
    return RepSpec("regular", spec)


def frequency_columns(n: int, k: int) -> np.ndarray:
    """Sampled cosine/sine columns at rotation frequency k.

    k = 0 gives the all-ones column; k = N/2 (N even) the alternating-sign
    column; otherwise an N x 2 matrix with rows [cos(k*theta_i), sin(k*theta_i)].
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0 <= k <= n // 2:
        raise ValueError(f"rotation frequency k={k} out of range 0..{n // 2}")
    angles = TAU * k * np.arange(n) / n
    if k == 0:
        return np.ones((n, 1))
    if n % 2 == 0 and k == n // 2:
        return np.cos(angles).reshape(n, 1)
    return np.stack([np.cos(angles), np.sin(angles)], axis=1)


@dataclass(frozen=True)
class DctBasis:
    """Column-block basis relating a regular representation to irreps.

    `blocks` lists (j, k, column slice) per irrep block.  Columns are
    orthogonal but unnormalized: the Gram matrix is diagonal, so the inverse
    is the transpose scaled by the inverse column norms.
    """

    matrix: np.ndarray
    blocks: tuple[tuple[int, int, slice], ...]

    def inverse(self) -> np.ndarray:
        norms = np.sum(self.matrix * self.matrix, axis=0)
        return self.matrix.T / norms[:, None]


def dct_basis_cyclic(n: int) -> DctBasis:
    """N x N basis of cosine/sine columns, frequencies k = 0..floor(N/2)."""
    cols = []
    blocks = []
    start = 0
    for k in range(n // 2 + 1):
        b = frequency_columns(n, k)
        cols.append(b)
        blocks.append((0, k, slice(start, start + b.shape[1])))
        start += b.shape[1]
    return DctBasis(np.hstack(cols), tuple(blocks))


def dct_basis_dihedral(n: int) -> DctBasis:
    """2N x 2N block basis [[V, V], [V, -V]] over the cyclic basis V.

    Column block (j, k) is [b_k; (-1)**j * b_k] for b_k = frequency_columns(n, k).
    """
    v = dct_basis_cyclic(n)
    m = v.matrix
    top = np.hstack([m, m])
    bottom = np.hstack([m, -m])
    w = np.vstack([top, bottom])
    blocks = []
    for j in (0, 1):
        offset = j * n
        for (_, k, sl) in v.blocks:
            blocks.append((j, k, slice(sl.start + offset, sl.stop + offset)))
    return DctBasis(w, tuple(blocks))


def group_dct_basis(spec: GroupSpec) -> DctBasis:
    if spec.reflection_order == 1:
        return dct_basis_cyclic(spec.rotation_order)
    return dct_basis_dihedral(spec.rotation_order)


def decompose_regular(g: GroupElement) -> tuple[DctBasis, np.ndarray]:
    """Basis and block-diagonal irrep direct sum D with
    regular_rep_matrix(g) == basis @ D @ basis.inverse()."""
    basis = group_dct_basis(g.spec)
    d = block_diag(*[irrep_matrix(g, j, k) for (j, k, _) in basis.blocks])
    return basis, d


def intertwiner_residual(n: int, k: int, g: GroupElement) -> float:
    """Largest deviation of the frequency columns from intertwining the
    regular action with the frequency-k irrep action.

    For rotations this checks irrep(g) @ b.T == b.T @ P(i1); for reflected
    elements both sign variants against B(i1).
    """
    b = frequency_columns(n, k).T  # dim(k) x N
    if g.i0 == 0:
        p = rotation_permutation(n, g.i1)
        psi = irrep_matrix(GroupElement(0, g.i1, GroupSpec(1, n)), 0, k)
        return float(np.abs(psi @ b - b @ p).max())
    refl = reflection_permutation(n, g.i1)
    h = GroupElement(1, g.i1, GroupSpec(2, n))
    r0 = np.abs(irrep_matrix(h, 0, k) @ b - b @ refl).max()
    r1 = np.abs(irrep_matrix(h, 1, k) @ b + b @ refl).max()
    return float(max(r0, r1))


def regular_rep_fractional(n: int, t: float) -> np.ndarray:
    """Regular representation of C_N continued to a fractional rotation index.

    Interpolates through the decomposition with irreps evaluated at the
    continuous angle 2*pi*t/N; at integer t this equals the permutation
    matrix of (0, t mod N).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    basis = dct_basis_cyclic(n)
    blocks = []
    for (_, k, _) in basis.blocks:
        a = TAU * k * t / n
        if k == 0:
            blocks.append(np.array([[1.0]]))
        elif n % 2 == 0 and k == n // 2:
            blocks.append(np.array([[math.cos(a)]]))
        else:
            blocks.append(np.array([[math.cos(a), -math.sin(a)], [math.sin(a), math.cos(a)]]))
    d = block_diag(*blocks)
    return basis.matrix @ d @ basis.inverse()
