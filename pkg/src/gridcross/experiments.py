"""Reproducible parameter sweeps producing table-ready records.

Every sweep is deterministic given its config: randomness flows only through
explicit seeds, and records keep exact quantities exact (ints and Fractions;
floats appear only in clearly derived ratio columns). Wall-clock timings are
measured but kept out of emitted documents unless explicitly requested, so
that identical configs emit byte-identical output.
"""

from __future__ import annotations

import csv
import io
import json
import math
import time
from dataclasses import dataclass
from fractions import Fraction

from .bounds import (
    default_p_max,
    lower_bound_essential_pgrid,
    lower_bound_greedy_removal,
    lower_bound_midpoint_bucket,
    lower_bound_midpoint_formula,
)
from .constructions import analytic_skip_bound, layered_complete_bipartite, random_proper_graph
from .counting import count_crossings_naive, count_crossings_pruned
from .enumeration import (
    TREE_VOLUME_CAP,
    bose_formula,
    build_conflict_graph,
    count_crossing_free_matchings,
    count_crossing_free_spanning_trees,
    count_crossing_free_subgraphs,
    max_crossing_free_edges,
    ncs_lower_formula,
    ncs_upper_formula,
)
from .errors import ValidationError
from .graph import compute_volume
from .totients import totient_sieve

KINDS = ("growth3d", "growth_hd", "certificates", "totients", "enumeration")


@dataclass(frozen=True)
class ExperimentConfig:
    kind: str
    k_values: tuple = ()
    dim: int = 3
    sides: tuple = ()  # grid shapes, e.g. ((4, 4), (2, 2, 2))
    edges: int = 12
    seeds: tuple = ()
    p_max: int | None = None
    n_max: int = 100
    c: Fraction | None = None

    def validate(self):
        if self.kind not in KINDS:
            raise ValidationError(f"unknown experiment kind {self.kind!r}; choose from {KINDS}")
        if self.kind == "growth3d":
            if not self.k_values or min(self.k_values) < 2:
                raise ValidationError("growth3d needs k values >= 2")
        if self.kind == "growth_hd":
            if not self.k_values or min(self.k_values) < 1:
                raise ValidationError("growth_hd needs k values >= 1")
            if self.dim < 4:
                raise ValidationError(f"growth_hd needs dim >= 4, got {self.dim}")
        if self.kind == "certificates":
            if not self.seeds:
                raise ValidationError("certificates needs explicit seeds")
            if not self.sides:
                raise ValidationError("certificates needs at least one grid shape")
            if self.edges < 1:
                raise ValidationError("certificates needs edges >= 1")
        if self.kind == "totients" and self.n_max < 1:
            raise ValidationError("totients needs n_max >= 1")
        if self.kind == "enumeration" and not self.sides:
            raise ValidationError("enumeration needs at least one grid shape")


def run_experiment(config: ExperimentConfig):
    config.validate()
    runner = {
        "growth3d": _run_growth3d,
        "growth_hd": _run_growth_hd,
        "certificates": _run_certificates,
        "totients": _run_totients,
        "enumeration": _run_enumeration,
    }[config.kind]
    return runner(config)


def _run_growth3d(config):
    records = []
    for k in config.k_values:
        start = time.perf_counter()
        g = layered_complete_bipartite(k, 3)
        rep = count_crossings_pruned(g, check_proper=False)
        bound = analytic_skip_bound(k, 3)
        records.append({
            "k": k,
            "vertices": len(g.vertices),
            "edges": len(g.edges),
            "volume": compute_volume(g),
            "layer_volume": k * k,
            "crossings": rep.total,
            "per_edge_max": max(rep.per_edge),
            "skip_bound": bound,
            "skip_bound_float": float(bound),
            "crossings_per_k6lnk": rep.total / (k ** 6 * math.log(k)),
            "elapsed_s": time.perf_counter() - start,
        })
    return records


def _run_growth_hd(config):
    records = []
    d = config.dim
    for k in config.k_values:
        start = time.perf_counter()
        g = layered_complete_bipartite(k, d)
        rep = count_crossings_pruned(g, check_proper=False)
        bound = analytic_skip_bound(k, d)
        layer = k ** (d - 1)
        n_points = 2 * layer
        c_admissible = (bound + 1) / n_points
        records.append({
            "k": k,
            "dim": d,
            "layer_size": layer,
            "vertices": len(g.vertices),
            "edges": len(g.edges),
            "volume": compute_volume(g),
            "crossings": rep.total,
            "per_edge_max": max(rep.per_edge),
            "skip_bound": bound,
            "crossings_per_l3": rep.total / layer ** 3,
            "c_admissible": c_admissible,
            "ncs_lower": ncs_lower_formula(n_points, c_admissible),
            "elapsed_s": time.perf_counter() - start,
        })
    return records


def _run_certificates(config):
    records = []
    for sides in config.sides:
        for seed in config.seeds:
            start = time.perf_counter()
            g = random_proper_graph(sides, config.edges, seed)
            exact = count_crossings_naive(g, check_proper=False)
            pruned = count_crossings_pruned(g, check_proper=False)
            volume = compute_volume(g)
            p_max = config.p_max or default_p_max(len(g.edges), volume)
            bucket = lower_bound_midpoint_bucket(g, check_proper=False).value
            pgrid = lower_bound_essential_pgrid(g, p_max, check_proper=False).value
            greedy = lower_bound_greedy_removal(volume, len(g.edges), g.dim)
            formula = lower_bound_midpoint_formula(volume, len(g.edges), g.dim)
            records.append({
                "grid": "x".join(map(str, sides)),
                "seed": seed,
                "vertices": len(g.vertices),
                "edges": len(g.edges),
                "volume": volume,
                "crossings": exact.total,
                "pruned_equal": pruned.total == exact.total,
                "midpoint_bucket": bucket,
                "essential_pgrid": pgrid,
                "p_max": p_max,
                "greedy_removal": greedy,
                "midpoint_formula": formula,
                "sound": max(bucket, pgrid, greedy, formula) <= exact.total,
                "elapsed_s": time.perf_counter() - start,
            })
    return records


def _run_totients(config):
    start = time.perf_counter()
    table = totient_sieve(config.n_max)
    s1 = s2 = 0
    s3 = Fraction(0)
    records = []
    for n in range(1, config.n_max + 1):
        f = table[n]
        s1 += f
        s2 += f * f
        s3 += Fraction(f * f, n ** 3)
        records.append({
            "n": n,
            "phi": f,
            "s1": s1,
            "s2": s2,
            "s3": s3,
            "s3_float": float(s3),
            "elapsed_s": time.perf_counter() - start,
        })
    return records


def _run_enumeration(config):
    records = []
    for sides in config.sides:
        start = time.perf_counter()
        volume = 1
        for s in sides:
            volume *= int(s)
        cg = build_conflict_graph(sides)
        subgraphs = count_crossing_free_subgraphs(cg)
        matchings = count_crossing_free_matchings(cg)
        mis = max_crossing_free_edges(sides)
        bose = bose_formula(sides)
        upper = ncs_upper_formula(volume, len(sides)) if volume >= 2 else None
        trees = count_crossing_free_spanning_trees(sides) if volume <= TREE_VOLUME_CAP else None
        records.append({
            "grid": "x".join(map(str, sides)),
            "volume": volume,
            "candidates": cg.size,
            "conflicts": cg.conflict_count,
            "max_edges": mis,
            "bose": bose,
            "subgraphs": subgraphs,
            "matchings": matchings,
            "spanning_trees": trees,
            "ncs_upper": upper,
            "consistent": mis == bose and matchings <= subgraphs <= (upper or subgraphs),
            "elapsed_s": time.perf_counter() - start,
        })
    return records


def _cell(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return str(value)  # "p/q", or plain digits when integral
    if isinstance(value, float):
        return repr(value)
    return str(value)


def emit_report(records, fmt: str = "csv", include_timing: bool = False) -> str:
    """Render records as CSV (stable column order) or a JSON array.

    Exact counts are emitted as decimal strings so nothing is rounded;
    timing columns are dropped unless include_timing is set.
    """
    if not records:
        raise ValidationError("no records to emit")
    if fmt not in ("csv", "json"):
        raise ValidationError(f"unknown format {fmt!r}")
    columns = [k for k in records[0] if include_timing or k != "elapsed_s"]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for rec in records:
            writer.writerow([_cell(rec.get(col)) for col in columns])
        return buf.getvalue()
    rows = []
    for rec in records:
        row = {}
        for col in columns:
            value = rec.get(col)
            if isinstance(value, float) or isinstance(value, bool) or value is None:
                row[col] = value
            else:
                row[col] = _cell(value)
        rows.append(row)
    return json.dumps(rows, indent=1) + "\n"
