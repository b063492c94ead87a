"""File formats: filter grids and feature maps as CSV, filter dumps as PGM.

Filter CSV: first line ``S=<odd int>``, then S lines of S comma-separated
values.  Feature CSV: one header line
``C=<c>,H=<h>,W=<w>,group=<c|d><N>,rep=<trivial|irrep:J:K|regular>,mult=<m>``
followed by C*H lines of W values, channel-major.  Values are written with 17
significant digits so round trips are exact.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .features import FeatureMap
from .filters import check_filter_grid
from .groups import GroupSpec, parse_group
from .representations import RepSpec, irrep, regular_rep, trivial_rep


def _fmt(value: float) -> str:
    return f"{value:.17g}"


def write_filter_csv(path: str | Path, values: np.ndarray) -> None:
    values = check_filter_grid(values)
    s = values.shape[0]
    lines = [f"S={s}"]
    lines += [",".join(_fmt(v) for v in row) for row in values]
    Path(path).write_text("\n".join(lines) + "\n")


def read_filter_csv(path: str | Path) -> np.ndarray:
    text = Path(path).read_text().strip().splitlines()
    if not text or not text[0].startswith("S="):
        raise ValueError(f"{path}: expected a first line of the form S=<odd int>")
    s = int(text[0][2:])
    if len(text) != s + 1:
        raise ValueError(f"{path}: expected {s} rows after the header, got {len(text) - 1}")
    rows = [[float(v) for v in line.split(",")] for line in text[1:]]
    values = np.array(rows)
    if values.shape != (s, s):
        raise ValueError(f"{path}: expected {s}x{s} values, got {values.shape}")
    return check_filter_grid(values)


def _rep_token(rep: RepSpec) -> str:
    if rep.kind == "irrep":
        return f"irrep:{rep.j}:{rep.k}"
    return rep.kind


def _parse_rep(token: str, spec: GroupSpec) -> RepSpec:
    if token == "trivial":
        return trivial_rep(spec)
    if token == "regular":
        return regular_rep(spec)
    if token.startswith("irrep:"):
        parts = token.split(":")
        if len(parts) != 3:
            raise ValueError(f"bad representation token {token!r}")
        return irrep(spec, int(parts[1]), int(parts[2]))
    raise ValueError(f"bad representation token {token!r}")


def write_feature_csv(path: str | Path, f: FeatureMap) -> None:
    c, h, w = f.data.shape
    header = f"C={c},H={h},W={w},group={f.group.name},rep={_rep_token(f.rep)},mult={f.multiplicity}"
    lines = [header]
    for channel in f.data:
        lines += [",".join(_fmt(v) for v in row) for row in channel]
    Path(path).write_text("\n".join(lines) + "\n")


def read_feature_csv(path: str | Path) -> FeatureMap:
    text = Path(path).read_text().strip().splitlines()
    if not text:
        raise ValueError(f"{path}: empty feature file")
    fields = dict(item.split("=", 1) for item in text[0].split(","))
    c, h, w = int(fields["C"]), int(fields["H"]), int(fields["W"])
    spec = parse_group(fields["group"])
    rep = _parse_rep(fields["rep"], spec)
    mult = int(fields["mult"])
    if c != mult * rep.dim:
        raise ValueError(f"{path}: C={c} does not equal mult*dim = {mult}*{rep.dim}")
    if len(text) != 1 + c * h:
        raise ValueError(f"{path}: expected {c * h} value rows, got {len(text) - 1}")
    rows = [[float(v) for v in line.split(",")] for line in text[1:]]
    data = np.array(rows).reshape(c, h, w)
    return FeatureMap(spec, rep, data)


def write_pgm(path: str | Path, values: np.ndarray) -> None:
    """8-bit P2 PGM with per-filter affine min-max normalization (lossy,
    visualization only)."""
    values = np.asarray(values, dtype=float)
    lo, hi = values.min(), values.max()
    if hi > lo:
        scaled = np.rint((values - lo) / (hi - lo) * 255).astype(int)
    else:
        scaled = np.zeros(values.shape, dtype=int)
    h, w = values.shape
    lines = ["P2", f"{w} {h}", "255"]
    lines += [" ".join(str(v) for v in row) for row in scaled]
    Path(path).write_text("\n".join(lines) + "\n")
