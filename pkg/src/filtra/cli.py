"""Command-line front end: equivariance verification suites, kernel
generation and dumps, regular-representation decompositions, capacity
reports, and a filter-visualization demo.

Exit codes: 0 on success, 1 when a verification assertion fails, 2 on usage
errors (bad flags, unreadable files, invalid parameter combinations).
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

import numpy as np

from .fileio import read_filter_csv, write_filter_csv, write_pgm
from .groups import GroupSpec, parse_group
from .harness import SuiteConfig, reports_to_csv, run_suite, suite_passes
from .kernels import (
    CAPACITY_KINDS,
    SteerableKernel,
    capacity_report,
    circulant_kernel,
    irrep_to_regular_cyclic,
    irrep_to_regular_dihedral,
    regular_to_regular_cyclic,
    regular_to_regular_dihedral,
    trivial_to_regular_cyclic,
    trivial_to_regular_dihedral,
)
from .filters import reflected_rotation_stack, rotation_stack
from .representations import decompose_regular, regular_rep_matrix

GEN_KINDS = ("triv2reg", "irrep2reg", "reg2reg", "orn")


def _comma_list(text: str) -> list[str]:
    return [item for item in (part.strip() for part in text.split(",")) if item]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="filtra",
        description="Steerable kernels for cyclic/dihedral groups by filter transform.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run the equivariance verification suite")
    p_verify.add_argument("--group", required=True, help="comma-separated groups, e.g. c8,d4")
    p_verify.add_argument("--size", default="3", help="comma-separated odd filter sizes")
    p_verify.add_argument("--mode", default="bilinear", help="comma-separated interpolation modes")
    p_verify.add_argument("--seed", type=int, default=42)
    p_verify.add_argument("--report", help="write per-element residuals to this CSV file")
    p_verify.add_argument(
        "--threads",
        type=int,
        default=os.cpu_count() or 1,
        help="parallelism hint; results are identical for any value",
    )
    p_verify.set_defaults(func=cmd_verify)

    p_gen = sub.add_parser("gen", help="build a steerable kernel and write its grids")
    p_gen.add_argument("--group", required=True)
    p_gen.add_argument("--kind", required=True, choices=GEN_KINDS)
    p_gen.add_argument("--j", type=int, default=None, help="reflection frequency (irrep2reg)")
    p_gen.add_argument("--k", type=int, default=None, help="rotation frequency (irrep2reg)")
    p_gen.add_argument("--base", required=True, help="comma-separated base filter CSV files")
    p_gen.add_argument("--mode", default="bilinear", choices=("bilinear", "nearest"))
    p_gen.add_argument("--out", required=True, help="output directory")
    p_gen.add_argument("--format", default="csv", choices=("csv", "pgm"))
    p_gen.set_defaults(func=cmd_gen)

    p_dec = sub.add_parser("decompose", help="print a regular representation and its irrep decomposition")
    p_dec.add_argument("--group", required=True)
    p_dec.add_argument("--element", required=True, help="element as i0,i1")
    p_dec.add_argument("--format", default="text", choices=("text", "csv"))
    p_dec.set_defaults(func=cmd_decompose)

    p_cap = sub.add_parser("capacity", help="print weight-capacity accounting as CSV")
    p_cap.add_argument("--group", required=True, help="cyclic group, e.g. c8")
    p_cap.add_argument("--size", type=int, required=True, help="filter side length S")
    p_cap.set_defaults(func=cmd_capacity)

    p_demo = sub.add_parser("demo", help="dump filter-transform kernels of one image patch as PGM")
    p_demo.add_argument("--image", required=True, help="base filter CSV file")
    p_demo.add_argument("--group", required=True, help="sets N, e.g. c8 or d8")
    p_demo.add_argument("--j", type=int, default=1)
    p_demo.add_argument("--k", type=int, default=1)
    p_demo.add_argument("--mode", default="bilinear", choices=("bilinear", "nearest"))
    p_demo.add_argument("--out", required=True)
    p_demo.set_defaults(func=cmd_demo)

    return parser


def cmd_verify(args: argparse.Namespace) -> int:
    groups = tuple(parse_group(name) for name in _comma_list(args.group))
    sizes = tuple(int(s) for s in _comma_list(args.size))
    modes = tuple(_comma_list(args.mode))
    config = SuiteConfig(groups=groups, sizes=sizes, modes=modes, seed=args.seed)
    reports = run_suite(config)
    if args.report:
        Path(args.report).write_text(reports_to_csv(reports))
    for r in reports:
        status = "pass" if r.passed() else "FAIL"
        print(
            f"{status} {r.kernel_kind} {r.group.name} S={r.size} {r.mode} "
            f"exact={r.exact_subgroup_max:.3e} full={r.full_group_max:.3e} "
            f"feature={r.feature_exact_max:.3e}"
        )
    ok = suite_passes(reports)
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def _build_kernel(args: argparse.Namespace, spec: GroupSpec, bases: list[np.ndarray]) -> SteerableKernel:
    n = spec.rotation_order
    cyclic = spec.reflection_order == 1
    if args.kind == "triv2reg":
        if len(bases) != 1:
            raise ValueError("triv2reg takes exactly one base filter")
        build = trivial_to_regular_cyclic if cyclic else trivial_to_regular_dihedral
        return build(bases[0], n, args.mode)
    if args.kind == "irrep2reg":
        if args.k is None:
            raise ValueError("irrep2reg requires --k")
        if len(bases) != 1:
            raise ValueError("irrep2reg takes exactly one base filter")
        if cyclic:
            if args.j not in (None, 0):
                raise ValueError(f"{spec.name} irreps have j=0")
            return irrep_to_regular_cyclic(bases[0], n, args.k, args.mode)
        return irrep_to_regular_dihedral(bases[0], n, 0 if args.j is None else args.j, args.k, args.mode)
    if args.kind == "reg2reg":
        build = regular_to_regular_cyclic if cyclic else regular_to_regular_dihedral
        return build(bases, n, args.mode)
    if not cyclic:
        raise ValueError("orn kernels are defined on cyclic groups only")
    if len(bases) != 1:
        raise ValueError("orn takes exactly one base filter")
    return circulant_kernel(bases[0], n, args.mode)


def cmd_gen(args: argparse.Namespace) -> int:
    spec = parse_group(args.group)
    bases = [read_filter_csv(path) for path in _comma_list(args.base)]
    kernel = _build_kernel(args, spec, bases)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    ext = args.format
    writer = write_filter_csv if ext == "csv" else write_pgm
    rows, cols = kernel.grids.shape[:2]
    for r in range(rows):
        for c in range(cols):
            writer(out / f"r{r}_c{c}.{ext}", kernel.grids[r, c])
    print(f"wrote {rows * cols} grids to {out}")
    return 0


def _matrix_lines(m: np.ndarray) -> list[str]:
    return [",".join(f"{v:.17g}" for v in row) for row in np.atleast_2d(m)]


def cmd_decompose(args: argparse.Namespace) -> int:
    spec = parse_group(args.group)
    parts = _comma_list(args.element)
    if len(parts) != 2:
        raise ValueError(f"--element expects i0,i1, got {args.element!r}")
    g = spec.element(int(parts[0]), int(parts[1]))
    rho = regular_rep_matrix(g)
    basis, d = decompose_regular(g)
    residual = float(np.abs(basis.matrix @ d @ basis.inverse() - rho).max())
    if args.format == "csv":
        lines = ["matrix,regular"]
        lines += _matrix_lines(rho)
        lines.append("matrix,basis")
        lines += _matrix_lines(basis.matrix)
        lines.append("matrix,block_diag")
        lines += _matrix_lines(d)
        lines.append(f"residual,{residual:.17g}")
        print("\n".join(lines))
    else:
        with np.printoptions(precision=6, suppress=True, linewidth=200):
            print(f"group {spec.name} element ({g.i0},{g.i1})")
            print("regular representation:")
            print(rho)
            print("basis columns (j,k,slice):", [(j, k, (s.start, s.stop)) for j, k, s in basis.blocks])
            print(basis.matrix)
            print("irrep block diagonal:")
            print(d)
            print(f"reconstruction residual: {residual:.3e}")
    return 0


def cmd_capacity(args: argparse.Namespace) -> int:
    spec = parse_group(args.group)
    if spec.reflection_order != 1:
        raise ValueError("capacity accounting is defined for cyclic groups, e.g. c8")
    for kind in CAPACITY_KINDS:
        rep = capacity_report(spec.rotation_order, args.size, kind)
        print(f"{rep.kernel_kind},{rep.independent_weights},{rep.stored_filter_scalars}")
    return 0


def cmd_demo(args: argparse.Namespace) -> int:
    image_path = Path(args.image)
    if not image_path.is_file():
        raise ValueError(f"unreadable base filter file: {image_path}")
    base = read_filter_csv(image_path)
    spec = parse_group(args.group)
    n = spec.rotation_order
    out = Path(args.out)
    families: list[tuple[str, np.ndarray]] = []
    families.append(("stack", rotation_stack(base, n, args.mode).entries[:, None]))
    families.append(("stack_reflected", reflected_rotation_stack(base, n, args.mode).entries[:, None]))
    families.append(("triv2reg_cyclic", trivial_to_regular_cyclic(base, n, args.mode).grids))
    families.append(("triv2reg_dihedral", trivial_to_regular_dihedral(base, n, args.mode).grids))
    families.append(("irrep2reg_cyclic", irrep_to_regular_cyclic(base, n, args.k, args.mode).grids))
    families.append(
        ("irrep2reg_dihedral", irrep_to_regular_dihedral(base, n, args.j, args.k, args.mode).grids)
    )
    count = 0
    for name, grids in families:
        family_dir = out / name
        family_dir.mkdir(parents=True, exist_ok=True)
        for r in range(grids.shape[0]):
            for c in range(grids.shape[1]):
                write_pgm(family_dir / f"r{r}_c{c}.pgm", grids[r, c])
                count += 1
    print(f"wrote {count} PGM dumps under {out}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"filtra: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
