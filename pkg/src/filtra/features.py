"""Vector-field feature maps, the group action on them, plain 2D convolution
against steerable kernels, and steerability-preserving nonlinearity/pooling.

A feature map is a C x H x W tensor whose channels carry `multiplicity`
copies of a representation, multiplicity-major: channel block b spans
[b * dim, (b + 1) * dim).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.signal import correlate2d

from .filters import check_mode, coordinate_matrix, sample_plane
from .groups import GroupElement, GroupSpec
from .kernels import SteerableKernel
from .representations import RepSpec, trivial_rep


@dataclass(frozen=True)
class FeatureMap:
    group: GroupSpec
    rep: RepSpec
    data: np.ndarray  # (C, H, W), C = multiplicity * rep.dim

    def __post_init__(self) -> None:
        if self.rep.spec != self.group:
            raise ValueError("feature representation must live on the feature's group")
        if self.data.ndim != 3:
            raise ValueError(f"feature data must be C x H x W, got shape {self.data.shape}")
        if self.data.shape[0] % self.rep.dim != 0 or self.data.shape[0] == 0:
            raise ValueError(
                f"channel count {self.data.shape[0]} is not a positive multiple of dim {self.rep.dim}"
            )
        if not np.all(np.isfinite(self.data)):
            raise ValueError("feature map contains non-finite values")
        self.data.setflags(write=False)

    @property
    def multiplicity(self) -> int:
        return self.data.shape[0] // self.rep.dim

    @property
    def height(self) -> int:
        return self.data.shape[1]

    @property
    def width(self) -> int:
        return self.data.shape[2]

    def blocks(self) -> np.ndarray:
        """View as (multiplicity, rep.dim, H, W)."""
        m, d = self.multiplicity, self.rep.dim
        return self.data.reshape(m, d, self.height, self.width)


def feature_map(group: GroupSpec, rep: RepSpec, data: np.ndarray) -> FeatureMap:
    return FeatureMap(group, rep, np.array(data, dtype=float))


def conv2d(kernel: SteerableKernel, f: FeatureMap) -> FeatureMap:
    """Cross-correlate the feature map with the kernel: zero padding, stride 1,
    same spatial size; output carries the kernel's output representation."""
    if f.group != kernel.group:
        raise ValueError(f"feature group {f.group.name} != kernel group {kernel.group.name}")
    if f.rep != kernel.rep_in:
        raise ValueError(f"feature rep {f.rep.label()} != kernel input rep {kernel.rep_in.label()}")
    s = kernel.size
    if f.height < s or f.width < s:
        raise ValueError(f"spatial size {f.height}x{f.width} smaller than the kernel size {s}")
    blocks = f.blocks()
    m = f.multiplicity
    do, di = kernel.rep_out.dim, kernel.rep_in.dim
    out = np.zeros((m, do, f.height, f.width))
    for b in range(m):
        for o in range(do):
            for i in range(di):
                out[b, o] += correlate2d(blocks[b, i], kernel.grids[o, i], mode="same", fillvalue=0.0)
    return FeatureMap(f.group, kernel.rep_out, out.reshape(m * do, f.height, f.width))


def act_on_feature(g: GroupElement, f: FeatureMap, mode: str = "bilinear") -> FeatureMap:
    """Group action on a feature map: resample each channel at the coordinates
    moved by g's inverse, then mix channel blocks by the representation of g."""
    check_mode(mode)
    if g.spec != f.group:
        raise ValueError(f"element of {g.spec.name} acting on a {f.group.name} feature")
    inv_matrix = coordinate_matrix(g.inverse())
    moved = sample_plane(f.data, inv_matrix, mode)
    rho = f.rep.matrix(g)
    m, d = f.multiplicity, f.rep.dim
    mixed = np.einsum("ab,mbhw->mahw", rho, moved.reshape(m, d, f.height, f.width))
    return FeatureMap(f.group, f.rep, mixed.reshape(f.data.shape))


def relu_channelwise(f: FeatureMap) -> FeatureMap:
    """Elementwise max(0, v).  Rejects irrep features: a channel-wise
    nonlinearity does not commute with irrep channel mixing."""
    if f.rep.kind == "irrep":
        raise ValueError("channel-wise relu breaks steerability of irrep features")
    return FeatureMap(f.group, f.rep, np.maximum(f.data, 0.0))


def group_pool(f: FeatureMap) -> FeatureMap:
    """Per multiplicity block and pixel, max over the regular-representation
    channels; the result carries the trivial representation."""
    if f.rep.kind != "regular":
        raise ValueError(f"group pooling needs a regular-representation feature, got {f.rep.label()}")
    pooled = f.blocks().max(axis=1)
    return FeatureMap(f.group, trivial_rep(f.group), pooled)


def pool_spatial(f: FeatureMap, k: int, stride: int) -> FeatureMap:
    """Channel-wise spatial max pooling with zero padding to cover the edges."""
    if k < 1 or stride < 1:
        raise ValueError(f"window {k} and stride {stride} must be >= 1")
    h, w = f.height, f.width
    oh = max(0, -(-(h - k) // stride)) + 1
    ow = max(0, -(-(w - k) // stride)) + 1
    ph = max(0, (oh - 1) * stride + k - h)
    pw = max(0, (ow - 1) * stride + k - w)
    padded = np.pad(f.data, ((0, 0), (0, ph), (0, pw)))
    out = np.zeros((f.data.shape[0], oh, ow))
    for r in range(oh):
        for c in range(ow):
            window = padded[:, r * stride : r * stride + k, c * stride : c * stride + k]
            out[:, r, c] = window.max(axis=(1, 2))
    return FeatureMap(f.group, f.rep, out)
