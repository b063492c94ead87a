"""Elements of the reflection, cyclic and dihedral groups and their planar action.

An element is a pair (i0, i1): i0 indexes the reflection component, i1 the
rotation component.  The rotation index i1 corresponds to the angle
2*pi*i1/N, and a group element acts on a planar angle phi as
(-1)**i0 * phi + 2*pi*i1/N.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

TAU = 2.0 * math.pi

_GROUP_NAME = re.compile(r"^([cd])(\d+)$")


@dataclass(frozen=True)
class GroupSpec:
    """A cyclic group C_N (reflection_order 1) or dihedral group D_N (2)."""

    reflection_order: int
    rotation_order: int

    def __post_init__(self) -> None:
        if self.reflection_order not in (1, 2):
            raise ValueError(f"reflection_order must be 1 or 2, got {self.reflection_order}")
        if self.rotation_order < 1:
            raise ValueError(f"rotation_order must be >= 1, got {self.rotation_order}")

    @property
    def order(self) -> int:
        return self.reflection_order * self.rotation_order

    @property
    def name(self) -> str:
        prefix = "c" if self.reflection_order == 1 else "d"
        return f"{prefix}{self.rotation_order}"

    def element(self, i0: int, i1: int) -> GroupElement:
        return GroupElement(i0, i1, self)

    def identity(self) -> GroupElement:
        return GroupElement(0, 0, self)

    def elements(self) -> list[GroupElement]:
        """All elements, i0-major then i1 ascending (regular-rep axis order)."""
        return [
            GroupElement(i0, i1, self)
            for i0 in range(self.reflection_order)
            for i1 in range(self.rotation_order)
        ]


def cyclic_group(n: int) -> GroupSpec:
    return GroupSpec(1, n)


def dihedral_group(n: int) -> GroupSpec:
    return GroupSpec(2, n)


def parse_group(name: str) -> GroupSpec:
    """Parse a group name like 'c8' or 'd4'."""
    m = _GROUP_NAME.match(name.strip().lower())
    if m is None:
        raise ValueError(f"bad group name {name!r}: expected c<N> or d<N>")
    kind, n = m.group(1), int(m.group(2))
    if n < 1:
        raise ValueError(f"bad group name {name!r}: N must be >= 1")
    return cyclic_group(n) if kind == "c" else dihedral_group(n)


@dataclass(frozen=True)
class GroupElement:
    """Element (i0, i1) of the group described by `spec`."""

    i0: int
    i1: int
    spec: GroupSpec

    def __post_init__(self) -> None:
        if not 0 <= self.i0 < self.spec.reflection_order:
            raise ValueError(f"reflection index {self.i0} out of range for {self.spec.name}")
        if not 0 <= self.i1 < self.spec.rotation_order:
            raise ValueError(f"rotation index {self.i1} out of range for {self.spec.name}")

    @property
    def angle(self) -> float:
        """Rotation angle 2*pi*i1/N in radians."""
        return TAU * self.i1 / self.spec.rotation_order

    def compose(self, other: GroupElement) -> GroupElement:
        """Group product self * other (apply `other` first under the angle action)."""
        if other.spec != self.spec:
            raise ValueError(f"cannot compose elements of {self.spec.name} and {other.spec.name}")
        n = self.spec.rotation_order
        i0 = (self.i0 + other.i0) % 2
        sign = -1 if self.i0 else 1
        i1 = (self.i1 + sign * other.i1) % n
        return GroupElement(i0, i1, self.spec)

    def __mul__(self, other: GroupElement) -> GroupElement:
        return self.compose(other)

    def inverse(self) -> GroupElement:
        n = self.spec.rotation_order
        if self.i0:
            return self  # reflections are involutions
        return GroupElement(0, (n - self.i1) % n, self.spec)

    def angle_action(self, phi: float) -> float:
        """Image of the planar angle phi: (-1)**i0 * phi + 2*pi*i1/N.

        Not reduced mod 2*pi; samplers apply periodicity themselves.
        """
        sign = -1.0 if self.i0 else 1.0
        return sign * phi + self.angle

    def __repr__(self) -> str:
        return f"({self.i0},{self.i1})@{self.spec.name}"
