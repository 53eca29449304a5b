"""Command-line front end.

Exit codes: 0 on success, 1 on usage errors, 2 on knitting or verification
failures (with a machine-readable JSON error on stderr).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .cartan import (NotCartan, NotFiniteType, UnrecognizedLabelling,
                     classify, exchange_matrix, glide_data, parse_cartan)
from .enumeration import enumerate_patterns, tropical_y_friezes
from .frieze import (KnitFailure, WindowTooNarrow, check_glide, default_cols,
                     ensemble_image, knit, verify)
from .gca2 import (GcaParams, gca_period, gca_variables, phi_check,
                   region_grid, superunitary_contains)
from .mutation import (belt, check_relations, matrix_mutation_class,
                       initial_seed, mutate_matrix, mutate_seed,
                       unitary_pattern)
from .render import (grid_text, region_csv, window_csv, window_from_json,
                     window_to_json)
from .semiring import get_semiring
from .symbolic import render_rational


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_range(text):
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    v = int(text)
    return (0, v) if v >= 0 else (v, 0)


def _parse_matrix(text):
    return tuple(tuple(int(x) for x in row.split(",") if x.strip() != "")
                 for row in text.split(";") if row.strip() != "")


def _get_cartan(args):
    if getattr(args, "cartan", None):
        return parse_cartan(args.cartan)
    if getattr(args, "type", None):
        return parse_cartan(args.type)
    raise UsageError("provide --type NAME or --cartan MATRIX")


def _get_semiring(args, rank):
    return get_semiring(args.semiring, nvars=rank)


def _emit_window(window, args, out):
    fmt = args.format
    if fmt == "json":
        out.write(window_to_json(window) + "\n")
    elif fmt == "csv":
        out.write(window_csv(window))
    else:
        out.write(grid_text(window, border=getattr(args, "border", False)) + "\n")


def _knit_from_args(args, kind=None):
    A = _get_cartan(args)
    S = _get_semiring(args, A.rank)
    kind = kind or args.kind
    cols = _parse_range(args.cols) if args.cols else default_cols(A)
    if not args.initial:
        raise UsageError("provide --initial v1,...,vr")
    initial = [S.parse(v) for v in args.initial.split(",")]
    return knit(A, S, kind, initial, cols)


def cmd_knit(args, out):
    window = _knit_from_args(args)
    _emit_window(window, args, out)
    return 0


def cmd_verify(args, out):
    if args.json == "-":
        text = sys.stdin.read()
    else:
        with open(args.json, encoding="utf-8") as fh:
            text = fh.read()
    window = window_from_json(text)
    if verify(window):
        out.write("ok\n")
        return 0
    sys.stderr.write(json.dumps({"error": "VerificationFailure"}) + "\n")
    return 2


def cmd_map(args, out):
    window = _knit_from_args(args, kind="frieze")
    image = ensemble_image(window)
    _emit_window(image, args, out)
    return 0


def cmd_mutate(args, out):
    if args.matrix:
        B = _parse_matrix(args.matrix)
    else:
        B = exchange_matrix(_get_cartan(args))
    directions = [int(k) for k in args.directions.split(",")] if args.directions else []
    if args.orbit:
        orbit = matrix_mutation_class(B, max_size=args.max_orbit)
        out.write(json.dumps({"size": len(orbit),
                              "matrices": sorted([list(map(list, M)) for M in orbit])})
                  + "\n")
        return 0
    if args.flavor:
        seed = initial_seed(B, args.flavor)
        for k in directions:
            seed = mutate_seed(seed, k)
        names = [f"{'x' if args.flavor == 'a' else 'y'}{i+1}" for i in range(len(B))]
        out.write(json.dumps({
            "matrix": [list(row) for row in seed.matrix],
            "vars": [render_rational(v, names) for v in seed.vars]}) + "\n")
        return 0
    M = B
    for k in directions:
        M = mutate_matrix(M, k)
    out.write(";".join(",".join(str(x) for x in row) for row in M) + "\n")
    return 0


def cmd_belt(args, out):
    A = _get_cartan(args)
    mrange = _parse_range(args.mrange) if args.mrange else default_cols(A)
    table = belt(A, args.flavor, mrange)
    names = [f"{'x' if args.flavor == 'a' else 'y'}{i+1}" for i in range(A.rank)]
    entries = {f"{'x' if args.flavor == 'a' else 'y'}({i},{m})":
               render_rational(table.var(i, m), names)
               for (i, m) in table.points()}
    if args.check:
        ok = check_relations(A, args.flavor, mrange, table)
        entries["relations"] = "ok" if ok else "FAILED"
    out.write(json.dumps(entries, indent=2) + "\n")
    return 0


def cmd_unitary(args, out):
    A = _get_cartan(args)
    mrange = _parse_range(args.mrange) if args.mrange else None
    window = unitary_pattern(A, args.flavor, mrange)
    _emit_window(window, args, out)
    return 0


def cmd_gca(args, out):
    params = GcaParams(args.b, args.c)
    if args.region:
        samples = region_grid(params, extent=args.extent,
                              resolution=args.resolution, maxk=args.maxk)
        csv_text = region_csv(samples)
        if args.csv:
            with open(args.csv, "w", encoding="utf-8") as fh:
                fh.write(csv_text)
        else:
            out.write(csv_text)
        if args.png:
            _plot_region(csv_text, args, params)
        return 0
    if args.point:
        u, v = (Fraction(t) for t in args.point.split(","))
        res = superunitary_contains(params, (u, v), maxk=args.maxk)
        out.write(json.dumps({"point": [str(u), str(v)], "inside": res.inside,
                              "truncated": res.truncated,
                              "variables_checked": res.checked}) + "\n")
        return 0
    if args.period:
        d = gca_period(params, args.maxk)
        out.write(json.dumps({"b": args.b, "c": args.c, "period": d}) + "\n")
        return 0
    if args.phi:
        lo, hi = _parse_range(args.phi)
        ok = phi_check(params.cartan(), (lo, hi))
        out.write(json.dumps({"phi_identification": ok}) + "\n")
        return 0
    lo, hi = _parse_range(args.krange) if args.krange else (1, 8)
    table = gca_variables(params, (min(lo, 1), max(hi, 2)))
    names = ["x1", "x2"]
    out.write(json.dumps({f"x{k}": render_rational(table.var(k), names)
                          for k in range(lo, hi + 1)}, indent=2) + "\n")
    return 0


def _plot_region(csv_text, args, params):
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    res = args.resolution
    values = [line.split(",") for line in csv_text.strip().splitlines()[1:]]
    grid = [[0] * res for _ in range(res)]
    for idx, (_, _, inside) in enumerate(values):
        grid[idx // res][idx % res] = int(inside)
    fig, ax = plt.subplots(figsize=(5, 5))
    ax.imshow(grid, origin="lower", extent=(0, args.extent, 0, args.extent),
              cmap="Blues", vmin=0, vmax=1, interpolation="nearest")
    ax.set_xlabel("x1")
    ax.set_ylabel("x2")
    ax.set_title(f"superunitary region, b={params.b}, c={params.c}")
    fig.tight_layout()
    fig.savefig(args.png, dpi=150)
    plt.close(fig)


def cmd_enumerate(args, out):
    A = _get_cartan(args)
    report = enumerate_patterns(A, args.kind, args.cap)
    payload = {
        "cartan": {"entries": [list(r) for r in A.entries], "label": A.label},
        "kind": report.kind,
        "cap": report.cap,
        "bound": list(report.bound) if report.bound else None,
        "count": report.count,
        "patterns": [list(p) for p in report.patterns],
        "complete": report.complete,
    }
    if args.format == "csv":
        lines = [",".join(str(v) for v in p) for p in report.patterns]
        out.write("\n".join(lines) + "\n")
    else:
        out.write(json.dumps(payload, indent=2) + "\n")
    return 0


def cmd_tropical(args, out):
    A = _get_cartan(args)
    sols = tropical_y_friezes(A)
    info = classify(A)
    out.write(json.dumps({
        "label": A.label,
        "coxeter_number": info.coxeter_number,
        "solutions": [list(s) for s in sols],
        "certificate": "I + C + ... + C^(h-1) = 0",
    }) + "\n")
    return 0


def cmd_glide(args, out):
    A = _get_cartan(args)
    g = glide_data(A)
    payload = {"label": A.label, "involution": list(g.involution),
               "shifts": list(g.shifts), "coxeter_number": g.coxeter_number,
               "period": g.period}
    if args.initial:
        window = _knit_from_args(args)
        payload["glide_invariant"] = check_glide(window)
        payload["kind"] = window.kind
    out.write(json.dumps(payload) + "\n")
    return 0


def build_parser():
    parser = _Parser(prog="friezes",
                     description="Frieze and Y-frieze patterns over semirings, "
                                 "with cluster-mutation machinery.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_cartan_opts(p):
        p.add_argument("--type", help="type name such as A3, C2, G2, A1~")
        p.add_argument("--cartan", help="matrix literal such as '2,-1;-1,2'")

    def add_pattern_opts(p, with_kind=True):
        add_cartan_opts(p)
        if with_kind:
            p.add_argument("--kind", default="yfrieze",
                           help="frieze|yfrieze (aliases f|y)")
        p.add_argument("--semiring", default="zpos",
                       choices=["zpos", "qpos", "tropn", "trop", "universal"])
        p.add_argument("--initial", help="comma-separated column-0 values")
        p.add_argument("--cols", help="inclusive column range LO..HI (default: one period)")
        p.add_argument("--format", default="grid", choices=["grid", "json", "csv"])
        p.add_argument("--border", action="store_true",
                       help="add type-A border rows to grid output")

    p = sub.add_parser("knit", help="knit a pattern from its column-0 values")
    add_pattern_opts(p)
    p.set_defaults(func=cmd_knit)

    p = sub.add_parser("verify", help="re-verify a window from its JSON form")
    p.add_argument("--json", required=True, help="path to window JSON, or - for stdin")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("map", help="knit a frieze and emit its Y-frieze image")
    add_pattern_opts(p, with_kind=False)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("mutate", help="mutate a matrix or seed")
    add_cartan_opts(p)
    p.add_argument("--matrix", help="mutation matrix literal, e.g. '0,-1;1,0'")
    p.add_argument("--directions", help="comma-separated directions, 1-based")
    p.add_argument("--flavor", choices=["a", "y"], help="mutate a symbolic seed")
    p.add_argument("--orbit", action="store_true",
                   help="compute the whole single-mutation matrix class")
    p.add_argument("--max-orbit", type=int, default=10000)
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("belt", help="belt variables as exact rational functions")
    add_cartan_opts(p)
    p.add_argument("--flavor", default="y", choices=["a", "y"])
    p.add_argument("--mrange", help="inclusive column range LO..HI")
    p.add_argument("--check", action="store_true", help="verify the belt relations")
    p.set_defaults(func=cmd_belt)

    p = sub.add_parser("unitary", help="all-ones evaluation of the belt")
    add_cartan_opts(p)
    p.add_argument("--flavor", default="y", choices=["a", "y"])
    p.add_argument("--mrange")
    p.add_argument("--format", default="grid", choices=["grid", "json", "csv"])
    p.add_argument("--border", action="store_true")
    p.set_defaults(func=cmd_unitary)

    p = sub.add_parser("gca", help="rank-2 generalized cluster algebra")
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--krange", help="variable index range LO..HI")
    p.add_argument("--period", action="store_true")
    p.add_argument("--maxk", type=int, default=64)
    p.add_argument("--phi", help="check y(i,m) = x_(2m+i) over column range LO..HI")
    p.add_argument("--point", help="test a point u,v for the superunitary region")
    p.add_argument("--region", action="store_true", help="rasterize the region")
    p.add_argument("--extent", type=int, default=8)
    p.add_argument("--resolution", type=int, default=40)
    p.add_argument("--csv", help="write region CSV here instead of stdout")
    p.add_argument("--png", help="also render the region to this PNG file")
    p.set_defaults(func=cmd_gca)

    p = sub.add_parser("enumerate", help="exhaustive pattern enumeration")
    add_cartan_opts(p)
    p.add_argument("--kind", default="yfrieze", help="frieze|yfrieze (aliases f|y)")
    p.add_argument("--cap", type=int, required=True)
    p.add_argument("--format", default="json", choices=["json", "csv"])
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("tropical", help="tropical Y-frieze triviality check")
    add_cartan_opts(p)
    p.set_defaults(func=cmd_tropical)

    p = sub.add_parser("glide", help="glide-symmetry data, optionally checked "
                                     "on a knitted window")
    add_pattern_opts(p)
    p.set_defaults(func=cmd_glide)

    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 1
    except KnitFailure as exc:
        sys.stderr.write(json.dumps({"error": "KnitFailure",
                                     "at": list(exc.point),
                                     "direction": exc.direction}) + "\n")
        return 2
    except (NotCartan, NotFiniteType, UnrecognizedLabelling, WindowTooNarrow,
            ValueError) as exc:
        sys.stderr.write(json.dumps({"error": type(exc).__name__,
                                     "message": str(exc)}) + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
