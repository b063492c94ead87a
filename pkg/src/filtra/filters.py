"""Spatial filter grids and the geometric resampling that realizes filter
rotation, reflection and general group actions on them.

Grids are square with odd side length so a center pixel exists; the center
pixel sits at the origin, x grows rightward (columns), y grows upward (rows
decrease).  Samples outside the grid read as zero.

Rotation angles are canonicalized to rational multiples of a full turn
(denominators up to 720) before evaluating cos/sin, and near-integer
cos/sin values are snapped.  This makes rotations by the same angle modulo
2*pi bit-identical and makes 90-degree multiples exact pixel permutations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .groups import TAU, GroupElement, GroupSpec

MODES = ("bilinear", "nearest")

_MAX_TURN_DENOMINATOR = 720
_SNAP_EPS = 1e-12


def check_mode(mode: str) -> str:
    if mode not in MODES:
        raise ValueError(f"unknown interpolation mode {mode!r}: expected one of {MODES}")
    return mode


def check_filter_grid(values: np.ndarray) -> np.ndarray:
    values = np.asarray(values, dtype=float)
    if values.ndim != 2 or values.shape[0] != values.shape[1]:
        raise ValueError(f"filter grid must be square, got shape {values.shape}")
    if values.shape[0] % 2 == 0:
        raise ValueError(f"filter side length must be odd, got {values.shape[0]}")
    if not np.all(np.isfinite(values)):
        raise ValueError("filter grid contains non-finite values")
    return values


def rotation_cos_sin(theta: float) -> tuple[float, float]:
    """Cosine and sine of theta, canonicalized for grid rotations.

    Angles within 1e-12 of a rational number of turns (denominator <= 720)
    are replaced by that rational, so congruent angles mod 2*pi produce
    bit-identical values; cos/sin within 1e-12 of an integer snap to it.
    """
    turns = theta / TAU
    frac = Fraction(turns).limit_denominator(_MAX_TURN_DENOMINATOR)
    if abs(turns - float(frac)) < _SNAP_EPS:
        frac -= math.floor(frac)
        a = TAU * frac.numerator / frac.denominator
    else:
        a = theta
    c, s = math.cos(a), math.sin(a)
    if abs(c - round(c)) < _SNAP_EPS:
        c = float(round(c))
    if abs(s - round(s)) < _SNAP_EPS:
        s = float(round(s))
    return c, s


def _round_half_down(x: np.ndarray) -> np.ndarray:
    """Round to the nearest integer, ties toward the smaller integer."""
    return np.ceil(x - 0.5).astype(int)


def sample_plane(values: np.ndarray, matrix: np.ndarray, mode: str) -> np.ndarray:
    """Resample a grid through a linear coordinate map.

    out[..., r, c] = values interpolated at matrix @ (x, y) for the centered
    coordinates (x, y) of pixel (r, c); points outside the grid read 0.
    Leading dimensions of `values` are batched over the same coordinate map.
    """
    check_mode(mode)
    values = np.asarray(values, dtype=float)
    h, w = values.shape[-2:]
    cr, cc = (h - 1) / 2.0, (w - 1) / 2.0
    rows, cols = np.indices((h, w))
    x = cols - cc
    y = cr - rows
    sx = matrix[0, 0] * x + matrix[0, 1] * y
    sy = matrix[1, 0] * x + matrix[1, 1] * y
    fr = cr - sy
    fc = sx + cc

    if mode == "nearest":
        ri = _round_half_down(fr)
        ci = _round_half_down(fc)
        inside = (ri >= 0) & (ri < h) & (ci >= 0) & (ci < w)
        gathered = values[..., np.clip(ri, 0, h - 1), np.clip(ci, 0, w - 1)]
        return np.where(inside, gathered, 0.0)

    r0 = np.floor(fr).astype(int)
    c0 = np.floor(fc).astype(int)
    dr = fr - r0
    dc = fc - c0
    out = np.zeros_like(values)
    for rr, wr in ((r0, 1.0 - dr), (r0 + 1, dr)):
        for cc_, wc in ((c0, 1.0 - dc), (c0 + 1, dc)):
            inside = (rr >= 0) & (rr < h) & (cc_ >= 0) & (cc_ < w)
            gathered = np.where(
                inside, values[..., np.clip(rr, 0, h - 1), np.clip(cc_, 0, w - 1)], 0.0
            )
            out += wr * wc * gathered
    return out


def resample_rotate(values: np.ndarray, theta: float, mode: str = "bilinear") -> np.ndarray:
    """Rotate the filter content counter-clockwise by theta.

    out(x) = f(R(-theta) x): a feature at angle phi moves to angle phi + theta.
    """
    values = check_filter_grid(values)
    c, s = rotation_cos_sin(theta)
    # R(-theta)
    matrix = np.array([[c, s], [-s, c]])
    return sample_plane(values, matrix, mode)


def resample_reflect(values: np.ndarray) -> np.ndarray:
    """Reflect about the x-axis: out(x, y) = f(x, -y), an exact row flip."""
    values = check_filter_grid(values)
    return values[::-1].copy()


def coordinate_matrix(g: GroupElement) -> np.ndarray:
    """Matrix of g acting on centered coordinates: reflect (y -> -y) first
    when i0 = 1, then rotate by the element's angle."""
    c, s = rotation_cos_sin(g.angle)
    rot = np.array([[c, -s], [s, c]])
    if g.i0:
        rot = rot @ np.diag([1.0, -1.0])
    return rot


def transform_filter(values: np.ndarray, g: GroupElement, mode: str = "bilinear") -> np.ndarray:
    """Evaluate the filter at transformed coordinates: out(x) = f(g x).

    A single resampling pass over the composed coordinate map, so grid-exact
    elements act as pure pixel permutations.
    """
    values = check_filter_grid(values)
    return sample_plane(values, coordinate_matrix(g), mode)


@dataclass(frozen=True)
class FilterStack:
    """The N rotated copies of a base filter, optionally of its reflection."""

    group: GroupSpec
    entries: np.ndarray  # (N, S, S)
    reflected: bool
    mode: str

    def __post_init__(self) -> None:
        self.entries.setflags(write=False)

    @property
    def size(self) -> int:
        return self.entries.shape[-1]


def rotation_stack(base: np.ndarray, n: int, mode: str = "bilinear") -> FilterStack:
    """Stack entry m is the base filter rotated counter-clockwise by 2*pi*m/N;
    entry 0 is the base itself."""
    base = check_filter_grid(base)
    check_mode(mode)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    entries = np.stack([base] + [resample_rotate(base, TAU * m / n, mode) for m in range(1, n)])
    return FilterStack(GroupSpec(1, n), entries, False, mode)


def reflected_rotation_stack(base: np.ndarray, n: int, mode: str = "bilinear") -> FilterStack:
    """Rotation stack of the x-axis reflection of the base filter.

    Entry m equals the base evaluated at angle 2*pi*m/N - phi.
    """
    stack = rotation_stack(resample_reflect(base), n, mode)
    return FilterStack(stack.group, stack.entries, True, mode)
