"""Lower-bound certificates for crossing counts.

Three certificate kinds bound crs(G) from below on a concrete graph:

* midpoint-bucket: edges sharing a midpoint pairwise cross there, so summing
  C(R, 2) over midpoint classes never overcounts.
* essential-pgrid: for primitive edges, the subdivision points at reduced
  parameter i/p sit at refinement level exactly p, levels partition the
  candidate crossing points, and every crossing point of two primitive edges
  is such a point on both. Summing C(R, 2) over (level, point) buckets up to
  p_max therefore undercounts crs(G). Primitive edges span a single lattice
  step, so two of them can never overlap collinearly and no bucket is
  counted twice.
* greedy-removal / midpoint-formula: closed forms in volume and edge count
  alone (the formula kind bounds the minimum over all graphs of a given
  size, not a specific graph).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from .counting import count_crossings_naive, _require_proper
from .errors import ValidationError
from .graph import GridGraph, compute_volume
from .totients import edge_pgrid_points


@dataclass(frozen=True)
class BoundCertificate:
    kind: str
    value: Fraction
    p_max: int | None = None
    incidence: tuple | None = None  # ((p, total |Q^p| over edges), ...) for essential-pgrid


def lower_bound_midpoint_bucket(g: GridGraph, check_proper: bool = True) -> BoundCertificate:
    """Sum C(R, 2) over groups of edges with a common midpoint."""
    if check_proper:
        _require_proper(g)
    buckets = Counter()
    for i, j in g.edges:
        u, w = g.vertices[i], g.vertices[j]
        buckets[tuple(a + b for a, b in zip(u, w))] += 1  # doubled midpoint stays integral
    value = sum(comb(r, 2) for r in buckets.values())
    return BoundCertificate("midpoint-bucket", Fraction(value))


def lower_bound_midpoint_formula(N: int, m: int, d: int) -> Fraction:
    """max(0, (m^2 / ((2^d - 1) N) - m) / 2): a floor for any graph with
    volume <= N and m edges."""
    if N < 1 or d < 1 or m < 0:
        raise ValidationError(f"need N >= 1, d >= 1, m >= 0; got N={N}, d={d}, m={m}")
    value = (Fraction(m * m, (2 ** d - 1) * N) - m) / 2
    return value if value > 0 else Fraction(0)


def default_p_max(m: int, N: int) -> int:
    """Largest p with p^3 * N <= m, clamped to [1, 16]."""
    p = 1
    while p < 16 and (p + 1) ** 3 * N <= m:
        p += 1
    return p


def lower_bound_essential_pgrid(g: GridGraph, p_max: int | None = None,
                                check_proper: bool = True) -> BoundCertificate:
    """Bucket subdivision points of all edges by level and position.

    Refuses graphs with a non-primitive edge: the level argument needs
    coprime coordinate differences (and primitivity is also what rules out
    collinear-overlap pairs, which would break the bound).
    """
    if check_proper:
        _require_proper(g)
    segs = g.segments()
    bad = []
    for seg in segs:
        diffs = [b - a for a, b in zip(*seg)]
        gg = 0
        for x in diffs:
            gg = gcd(gg, abs(x))
        if gg != 1:
            bad.append(seg)
    if bad:
        raise ValidationError(
            f"{len(bad)} non-primitive edge(s), first {bad[0][0]}->{bad[0][1]}; "
            "reduce edges first if a certificate for the reduced graph is acceptable")
    if p_max is None:
        p_max = default_p_max(len(segs), compute_volume(g)) if g.vertices else 1
    if p_max < 1:
        raise ValidationError(f"p_max must be >= 1, got {p_max}")
    value = 0
    incidence = []
    for p in range(1, p_max + 1):
        buckets = Counter()
        mass = 0
        for seg in segs:
            _, q = edge_pgrid_points(seg, p)
            mass += len(q)
            for pt in q:
                buckets[pt] += 1
        value += sum(comb(r, 2) for r in buckets.values())
        incidence.append((p, mass))
    return BoundCertificate("essential-pgrid", Fraction(value), p_max, tuple(incidence))


def lower_bound_greedy_removal(N: int, m: int, d: int) -> int:
    """max(0, m - (2^d - 1) N): every edge beyond the crossing-free maximum
    forces at least one crossing."""
    if N < 1 or d < 1 or m < 0:
        raise ValidationError(f"need N >= 1, d >= 1, m >= 0; got N={N}, d={d}, m={m}")
    return max(0, m - (2 ** d - 1) * N)


def per_edge_max(g: GridGraph, report=None) -> int:
    """Largest number of crossings carried by a single edge.

    Computed from the reference counter unless a precomputed report for g is
    supplied (the pruned counter produces the identical histogram).
    """
    if report is None:
        report = count_crossings_naive(g)
    return max(report.per_edge, default=0)
