"""Command-line front end.

Subcommands: gen (constructions -> graph JSON), cross (counts and
certificates), enum (exact crossing-free counts), nt (totient sum tables),
experiment (parameter sweeps). Every invocation with fixed flags and seeds
produces byte-identical output. Exit codes: 0 ok, 2 validation error,
3 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .bounds import (
    default_p_max,
    lower_bound_essential_pgrid,
    lower_bound_greedy_removal,
    lower_bound_midpoint_bucket,
    lower_bound_midpoint_formula,
)
from .constructions import layered_complete_bipartite, random_proper_graph, tile_bipartite
from .counting import count_crossings_naive, count_crossings_pruned
from .enumeration import (
    TREE_VOLUME_CAP,
    bose_formula,
    build_conflict_graph,
    count_crossing_free_matchings,
    count_crossing_free_spanning_trees,
    count_crossing_free_subgraphs,
    max_crossing_free_edges,
    ncs_upper_formula,
)
from .errors import CapExceeded, ValidationError
from .experiments import ExperimentConfig, emit_report, run_experiment
from .graph import compute_volume, parse_graph, reduce_edges, serialize_graph
from .totients import totient_sieve, verify_totient_inequalities


def _parse_sides(text):
    try:
        sides = tuple(int(part) for part in text.lower().split("x"))
    except ValueError:
        raise ValidationError(f"cannot parse grid shape {text!r}; expected e.g. 4x4x2") from None
    if not sides or any(s < 1 for s in sides):
        raise ValidationError(f"grid sides must be positive, got {text!r}")
    return sides


def _parse_int_list(text):
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValidationError(f"cannot parse integer list {text!r}") from None


def _read_graph(path):
    if path == "-":
        return parse_graph(sys.stdin.read())
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_graph(fh.read())
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from None


def _write(out, text):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_gen(args):
    if args.kind == "bipartite":
        g = layered_complete_bipartite(args.k, args.dim)
    elif args.kind == "tiled":
        g = tile_bipartite(args.k, args.side, args.dim)
    else:
        if args.seed is None:
            raise ValidationError("gen --kind random requires --seed")
        sides = _parse_sides(args.sides) if args.sides else (args.side,) * args.dim
        g = random_proper_graph(sides, args.edges, args.seed)
    if args.reduce:
        g = reduce_edges(g)
    _write(args.out, serialize_graph(g) + "\n")
    return 0


def _cmd_cross(args):
    g = _read_graph(args.graph)
    if args.reduce:
        g = reduce_edges(g)
    doc = {
        "dim": g.dim,
        "vertices": len(g.vertices),
        "edges": len(g.edges),
        "volume": compute_volume(g) if g.vertices else 0,
    }
    if args.method in ("naive", "pruned"):
        rep = (count_crossings_naive(g) if args.method == "naive"
               else count_crossings_pruned(g, backend=args.backend))
        doc["method"] = rep.method
        doc["total"] = rep.total
        doc["per_edge_max"] = max(rep.per_edge, default=0)
        doc["per_edge"] = list(rep.per_edge)
    else:
        rep = count_crossings_pruned(g, backend=args.backend)
        volume = doc["volume"]
        m = len(g.edges)
        p_max = args.p_max or default_p_max(m, max(volume, 1))
        bucket = lower_bound_midpoint_bucket(g, check_proper=False).value
        try:
            pgrid = lower_bound_essential_pgrid(g, p_max, check_proper=False).value
        except ValidationError:
            pgrid = None  # non-primitive edges: no level certificate for this graph
        greedy = lower_bound_greedy_removal(max(volume, 1), m, g.dim)
        formula = lower_bound_midpoint_formula(max(volume, 1), m, g.dim)
        doc["method"] = "all-certificates"
        doc["total"] = rep.total
        doc["per_edge_max"] = max(rep.per_edge, default=0)
        doc["p_max"] = p_max
        doc["certificates"] = {
            "midpoint-bucket": str(bucket),
            "essential-pgrid": None if pgrid is None else str(pgrid),
            "greedy-removal": str(greedy),
            "midpoint-formula": str(formula),
        }
        doc["sound"] = all(v <= rep.total for v in (bucket, greedy, formula)
                           if v is not None) and (pgrid is None or pgrid <= rep.total)
    _write(args.out, json.dumps(doc, indent=1) + "\n")
    return 0


def _cmd_enum(args):
    sides = _parse_sides(args.sides)
    volume = 1
    for s in sides:
        volume *= s
    cg = build_conflict_graph(sides, cap=args.cap)
    doc = {
        "grid": "x".join(map(str, sides)),
        "volume": str(volume),
        "candidates": str(cg.size),
        "conflicts": str(cg.conflict_count),
        "max_edges": str(max_crossing_free_edges(sides, cap=args.cap)),
        "bose": str(bose_formula(sides)),
        "subgraphs": str(count_crossing_free_subgraphs(cg)),
        "matchings": str(count_crossing_free_matchings(cg)),
    }
    if args.trees or volume <= TREE_VOLUME_CAP:
        doc["spanning_trees"] = str(count_crossing_free_spanning_trees(sides, cap=args.cap))
    if volume >= 2:
        doc["ncs_upper"] = str(ncs_upper_formula(volume, len(sides)))
    _write(args.out, json.dumps(doc, indent=1) + "\n")
    return 0


def _cmd_nt(args):
    lines = []
    if args.check:
        rep = verify_totient_inequalities(args.n_max, log_c=args.log_c)
        lines.append("n_max,square_sum_below_cube,eleventh_holds_from,"
                     "log_window_start,log_ratio_min,log_c_required,log_bound_ok")
        lines.append(",".join([
            str(rep.n_max),
            "true" if rep.square_sum_strictly_below_cube else "false",
            str(rep.eleventh_holds_from),
            str(rep.log_window_start),
            repr(rep.log_ratio_min),
            repr(rep.log_c_required),
            "true" if rep.log_bound_ok else "false",
        ]))
    else:
        table = totient_sieve(args.n_max)
        lines.append("n,phi,s1,s2,s3,s3_float")
        s1 = s2 = 0
        s3 = Fraction(0)
        for n in range(1, args.n_max + 1):
            f = table[n]
            s1 += f
            s2 += f * f
            s3 += Fraction(f * f, n ** 3)
            lines.append(f"{n},{f},{s1},{s2},{s3},{float(s3)!r}")
    _write(args.out, "\n".join(lines) + "\n")
    return 0


def _cmd_experiment(args):
    config = ExperimentConfig(
        kind=args.kind,
        k_values=_parse_int_list(args.k_values) if args.k_values else (),
        dim=args.dim,
        sides=tuple(_parse_sides(s) for s in args.sides.split(",")) if args.sides else (),
        edges=args.edges,
        seeds=_parse_int_list(args.seeds) if args.seeds else (),
        p_max=args.p_max,
        n_max=args.n_max,
    )
    records = run_experiment(config)
    _write(args.out, emit_report(records, fmt=args.format, include_timing=args.timings))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="gridcross",
        description="Exact crossing counts, lower-bound certificates, and "
                    "crossing-free enumeration for graphs drawn on integer grids.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a drawing and print its JSON")
    p.add_argument("--kind", choices=("bipartite", "tiled", "random"), default="bipartite")
    p.add_argument("--k", type=int, default=2, help="layer side length / block size")
    p.add_argument("--side", type=int, default=4)
    p.add_argument("--dim", type=int, default=3)
    p.add_argument("--sides", help="explicit grid shape for --kind random, e.g. 4x4")
    p.add_argument("--edges", type=int, default=12)
    p.add_argument("--seed", type=int)
    p.add_argument("--reduce", action="store_true",
                   help="shrink non-primitive edges to their first lattice step")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("cross", help="count crossings / evaluate certificates")
    p.add_argument("graph", help="graph JSON path, or - for stdin")
    p.add_argument("--method", choices=("naive", "pruned", "all-certificates"),
                   default="pruned")
    p.add_argument("--p-max", type=int, dest="p_max")
    p.add_argument("--backend", choices=("numba", "numpy", "object"))
    p.add_argument("--reduce", action="store_true",
                   help="shrink non-primitive edges to their first lattice step before counting")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_cross)

    p = sub.add_parser("enum", help="exact crossing-free counts on a small grid")
    p.add_argument("--sides", required=True, help="grid shape, e.g. 2x2 or 2x2x2")
    p.add_argument("--cap", type=int, default=64)
    p.add_argument("--trees", action="store_true",
                   help="require the spanning-tree count (errors above the volume cap)")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_enum)

    p = sub.add_parser("nt", help="totient sum tables as CSV")
    p.add_argument("--n-max", type=int, default=100, dest="n_max")
    p.add_argument("--check", action="store_true",
                   help="emit the inequality report instead of the table")
    p.add_argument("--log-c", type=float, default=0.05, dest="log_c")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_nt)

    p = sub.add_parser("experiment", help="run a reproducible sweep")
    p.add_argument("--kind", required=True,
                   choices=("growth3d", "growth_hd", "certificates", "totients", "enumeration"))
    p.add_argument("--k-values", dest="k_values", help="comma-separated, e.g. 2,3,4")
    p.add_argument("--dim", type=int, default=3)
    p.add_argument("--sides", help="comma-separated grid shapes, e.g. 4x4,2x2x2")
    p.add_argument("--edges", type=int, default=12)
    p.add_argument("--seeds", help="comma-separated integer seeds")
    p.add_argument("--p-max", type=int, dest="p_max")
    p.add_argument("--n-max", type=int, default=100, dest="n_max")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--timings", action="store_true",
                   help="include wall-clock columns (breaks byte-reproducibility)")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_experiment)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
