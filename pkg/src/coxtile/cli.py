"""Command line front end: catalog, patch, verify and project subcommands."""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .cubic_descent import CubeVertex, project_cube_vertex
from .cut_and_project import (
    generate_rhombic_patch,
    generate_triangular_patch,
    tiling_defects,
)
from .prototiles import catalog, rhombic_prototiles, triangular_prototiles
from .render import RenderStyle, patch_to_json, render_svg
from .verify import SUITES, format_report, run_suite

DEFAULT_RADIUS = {4: 8.0, 7: 6.0, 11: 5.0}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="coxtile", description="Tilings from A_n lattices projected on the Coxeter plane.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("catalog", help="list rhombic or triangular prototiles")
    c.add_argument("what", choices=["rhombi", "triangles"])
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--json", action="store_true", help="machine-readable output")

    t = sub.add_parser("patch", help="generate a cut-and-project patch")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--kind", choices=["rhombic", "triangular"], default="rhombic")
    t.add_argument("--lattice", choices=["root", "weight"], default=None,
                   help="weight for rhombic, root for triangular (the default)")
    t.add_argument("--radius", type=float, default=None)
    t.add_argument("--shift", type=str, default=None, help="comma separated E_perp shift")
    t.add_argument("--layer-shift", type=float, default=0.0)
    t.add_argument("--out", type=str, default="-")
    t.add_argument("--format", choices=["svg", "json"], default="svg")
    t.add_argument("--scale", type=float, default=40.0)
    t.add_argument("--check", action="store_true", help="fail if tiles overlap")

    v = sub.add_parser("verify", help="run self-checks")
    v.add_argument("--suite", choices=SUITES, default="all")
    v.add_argument("--json", action="store_true")

    pr = sub.add_parser("project", help="project a cube vertex onto A_n")
    pr.add_argument("what", choices=["cube-vertex"])
    pr.add_argument("--n", type=int, required=True)
    pr.add_argument("--signs", type=str, required=True, help="e.g. +----")
    return p


def _catalog(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be positive")
    if args.what == "rhombi" and args.n < 3:
        raise UsageError("rhombic prototiles need n >= 3")
    if args.what == "triangles" and args.n < 2:
        raise UsageError("triangular prototiles need n >= 2")
    if args.json:
        data = catalog(args.n)
        key = "rhombi" if args.what == "rhombi" else "triangles"
        print(json.dumps({"h": data["h"], key: data[key]}, indent=2))
        return 0
    if args.what == "rhombi":
        for c in rhombic_prototiles(args.n):
            a, b = c.angles_deg
            print(f"m={c.m}  angles {a:.6g} deg, {b:.6g} deg" + ("  (square)" if c.is_square else ""))
    else:
        for c in triangular_prototiles(args.n):
            angs = ", ".join(f"{a:.6g}" for a in c.angles_deg)
            print(f"{c.parts}  angles {angs} deg")
    return 0


def _patch(args) -> int:
    n = args.n
    lattice = args.lattice or ("weight" if args.kind == "rhombic" else "root")
    if args.kind == "rhombic" and (lattice != "weight" or n < 3):
        raise UsageError("rhombic patches need --lattice weight and n >= 3")
    if args.kind == "triangular" and (lattice != "root" or n < 2):
        raise UsageError("triangular patches need --lattice root and n >= 2")
    radius = args.radius if args.radius is not None else DEFAULT_RADIUS.get(n, 6.0)
    if radius <= 0:
        raise UsageError("--radius must be positive")
    shift = None
    if args.shift:
        try:
            shift = np.array([float(x) for x in args.shift.split(",")])
        except ValueError as exc:
            raise UsageError(f"bad --shift: {args.shift}") from exc
        if len(shift) != max(n - 2, 0):
            raise UsageError(f"--shift needs {n - 2} components for n = {n}")
    if args.kind == "rhombic":
        patch = generate_rhombic_patch(n, radius, shift, layer_shift=args.layer_shift)
    else:
        patch = generate_triangular_patch(n, radius, shift)
    if patch.singular:
        print(f"warning: {patch.singular} lattice points lie on the window boundary "
              "and were left out", file=sys.stderr)
    if patch.diagnostic:
        print(f"warning: {patch.diagnostic}", file=sys.stderr)
    text = patch_to_json(patch) if args.format == "json" else render_svg(patch, RenderStyle(scale=args.scale))
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    if args.check:
        problems = tiling_defects(patch)
        for p in problems[:10]:
            print(p, file=sys.stderr)
        return 1 if problems else 0
    return 0


def _verify(args) -> int:
    checks = run_suite(args.suite)
    if args.json:
        print(json.dumps(checks, indent=2, default=str))
    else:
        print(format_report(checks))
    return 0 if all(c["pass"] for c in checks.values()) else 1


def _project(args) -> int:
    try:
        v = CubeVertex.parse(args.signs)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if len(v.signs) != args.n + 1:
        raise UsageError(f"--signs needs {args.n + 1} characters for n = {args.n}")
    w = project_cube_vertex(v, args.n)
    minus = v.minus
    label = "0" if not minus or len(minus) == args.n + 1 else "-(" + "+".join(f"k{i}" for i in minus) + ")"
    print(json.dumps({"signs": args.signs, "image": label, "k": [str(x) for x in w.coords]}))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        handler = {"catalog": _catalog, "patch": _patch, "verify": _verify, "project": _project}
        return handler[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
