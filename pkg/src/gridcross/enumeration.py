"""Desk-scale exact enumeration of crossing-free structures on small grids.

Candidate edges of a grid are the point pairs whose open segment avoids every
grid point (on a full grid: coprime coordinate differences). Two candidates
conflict when their open segments share a point, so crossing-free edge
subsets are exactly the independent sets of the conflict graph. Counts are
edge-subset counts: a graph is identified with its edge set over the full
grid, so isolated vertices never multiply anything.

Everything here is deliberately capped: 64 candidates for counting, volume 9
for spanning trees. Caps raise CapExceeded instead of truncating.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb, floor

from .errors import CapExceeded, ValidationError
from .geom import gcd_reduce, segments_cross

CANDIDATE_CAP = 64
TREE_VOLUME_CAP = 9


@dataclass(frozen=True, eq=False)
class ConflictGraph:
    candidates: tuple  # segments, each a pair of point tuples
    adjacency: tuple  # adjacency[i] = frozenset of conflicting candidate indices

    @property
    def size(self) -> int:
        return len(self.candidates)

    @property
    def conflict_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2


def grid_points(sides):
    sides = tuple(int(s) for s in sides)
    if not sides or any(s < 1 for s in sides):
        raise ValidationError(f"grid sides must be positive integers, got {sides}")
    return [pt for pt in product(*(range(1, s + 1) for s in sides))]


def build_conflict_graph(sides, cap: int = CANDIDATE_CAP) -> ConflictGraph:
    """Candidate edges of the full grid and their pairwise crossing relation."""
    pts = grid_points(sides)
    n = len(pts)
    cands = []
    for i in range(n):
        for j in range(i + 1, n):
            _, g = gcd_reduce((pts[i], pts[j]))
            if g == 1:  # open segment avoids all grid points
                cands.append((pts[i], pts[j]))
                if len(cands) > cap:
                    raise CapExceeded(
                        f"grid {tuple(sides)} has more than {cap} candidate edges")
    adjacency = [set() for _ in cands]
    for i in range(len(cands)):
        for j in range(i + 1, len(cands)):
            if segments_cross(cands[i], cands[j]).is_crossing:
                adjacency[i].add(j)
                adjacency[j].add(i)
    return ConflictGraph(tuple(cands), tuple(frozenset(a) for a in adjacency))


def conflict_graph_from_segments(segments) -> ConflictGraph:
    """Conflict graph over an explicit candidate list (deduplicated)."""
    seen = set()
    cands = []
    for a, b in segments:
        key = (tuple(a), tuple(b)) if tuple(a) <= tuple(b) else (tuple(b), tuple(a))
        if key in seen:
            continue
        seen.add(key)
        cands.append(key)
    if len(cands) > CANDIDATE_CAP:
        raise CapExceeded(f"{len(cands)} candidates exceed the cap {CANDIDATE_CAP}")
    adjacency = [set() for _ in cands]
    for i in range(len(cands)):
        for j in range(i + 1, len(cands)):
            if segments_cross(cands[i], cands[j]).is_crossing:
                adjacency[i].add(j)
                adjacency[j].add(i)
    return ConflictGraph(tuple(cands), tuple(frozenset(a) for a in adjacency))


def _neighbor_masks(adjacency):
    return [sum(1 << j for j in nbrs) for nbrs in adjacency]


def _components(mask, nbr):
    comps = []
    rest = mask
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            v = frontier & -frontier
            frontier &= frontier - 1
            grow = nbr[v.bit_length() - 1] & rest & ~comp
            comp |= grow
            frontier |= grow
        comps.append(comp)
        rest &= ~comp
    return comps


def _count_independent(mask, nbr, memo):
    """Number of independent sets inside `mask`, by branching on a max-degree
    node with connected-component decomposition; memo keyed by the vertex set."""
    if mask == 0:
        return 1
    cached = memo.get(mask)
    if cached is not None:
        return cached
    total = 1
    for comp in _components(mask, nbr):
        got = memo.get(comp)
        if got is None:
            best_v = -1
            best_deg = -1
            m = comp
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                deg = (nbr[v] & comp).bit_count()
                if deg > best_deg:
                    best_deg = deg
                    best_v = v
            if best_deg == 0:
                got = 1 << comp.bit_count()
            else:
                bit = 1 << best_v
                got = (_count_independent(comp & ~bit, nbr, memo)
                       + _count_independent(comp & ~bit & ~nbr[best_v], nbr, memo))
            memo[comp] = got
        total *= got
    memo[mask] = total
    return total


def count_independent_sets(adjacency) -> int:
    nbr = _neighbor_masks(adjacency)
    full = (1 << len(nbr)) - 1
    return _count_independent(full, nbr, {})


def count_crossing_free_subgraphs(cg: ConflictGraph) -> int:
    """Independent sets of the conflict graph, the empty set included."""
    return count_independent_sets(cg.adjacency)


def count_crossing_free_matchings(cg: ConflictGraph) -> int:
    """Crossing-free edge subsets that are also vertex-disjoint."""
    adjacency = [set(a) for a in cg.adjacency]
    for i in range(cg.size):
        pi = set(cg.candidates[i])
        for j in range(i + 1, cg.size):
            if pi & set(cg.candidates[j]):
                adjacency[i].add(j)
                adjacency[j].add(i)
    return count_independent_sets([frozenset(a) for a in adjacency])


def max_crossing_free_edges(sides, cap: int = CANDIDATE_CAP) -> int:
    """Maximum number of pairwise non-crossing candidate edges (exact MIS)."""
    cg = build_conflict_graph(sides, cap)
    return _max_independent(cg.adjacency)


def _max_independent(adjacency) -> int:
    nbr = _neighbor_masks(adjacency)
    full = (1 << len(nbr)) - 1
    best = 0

    def rec(mask, size):
        nonlocal best
        if size + mask.bit_count() <= best:
            return
        if mask == 0:
            best = max(best, size)
            return
        best_v = -1
        best_deg = -1
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            deg = (nbr[v] & mask).bit_count()
            if deg > best_deg:
                best_deg = deg
                best_v = v
        if best_deg == 0:
            best = max(best, size + mask.bit_count())
            return
        bit = 1 << best_v
        rec(mask & ~bit & ~nbr[best_v], size + 1)  # take the contested node first
        rec(mask & ~bit, size)

    rec(full, 0)
    return best


def bose_formula(sides) -> int:
    """prod(2*X_i - 1) - prod(X_i): the exact crossing-free edge maximum."""
    sides = tuple(int(s) for s in sides)
    if any(s < 1 for s in sides):
        raise ValidationError(f"grid sides must be positive, got {sides}")
    a = b = 1
    for s in sides:
        a *= 2 * s - 1
        b *= s
    return a - b


def count_crossing_free_spanning_trees(sides, cap: int = CANDIDATE_CAP) -> int:
    """Spanning trees of the candidate graph with pairwise non-crossing edges.

    Include/exclude search over candidate edges: including an edge merges
    components and bans its conflicts; branches that can no longer connect
    the remaining components are pruned.
    """
    pts = grid_points(sides)
    volume = len(pts)
    if volume > TREE_VOLUME_CAP:
        raise CapExceeded(f"grid volume {volume} exceeds the spanning-tree cap {TREE_VOLUME_CAP}")
    cg = build_conflict_graph(sides, cap)
    index = {p: i for i, p in enumerate(pts)}
    edges = [(index[a], index[b]) for a, b in cg.candidates]
    conflict_mask = _neighbor_masks(cg.adjacency)
    t = len(edges)

    def find(parent, x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def can_connect(parent, comps, idx, banned):
        p = list(parent)
        c = comps
        for e in range(idx, t):
            if banned >> e & 1:
                continue
            ra, rb = find(p, edges[e][0]), find(p, edges[e][1])
            if ra != rb:
                p[ra] = rb
                c -= 1
                if c == 1:
                    return True
        return c == 1

    def rec(idx, parent, comps, banned):
        if comps == 1:
            return 1
        if idx == t or not can_connect(parent, comps, idx, banned):
            return 0
        total = rec(idx + 1, parent, comps, banned)  # exclude edges[idx]
        if not (banned >> idx & 1):
            a, b = edges[idx]
            ra, rb = find(parent, a), find(parent, b)
            if ra != rb:
                child = list(parent)
                child[ra] = rb
                total += rec(idx + 1, child, comps - 1, banned | conflict_mask[idx])
        return total

    return rec(0, list(range(volume)), volume, 0)


def ncs_upper_formula(N: int, d: int) -> int:
    """2^B' * C(M, B') with M = C(N, 2) and B' = min((2^d - 1) N, M):
    an upper bound on the number of crossing-free edge subsets."""
    if N < 2:
        raise ValidationError(f"N must be >= 2, got {N}")
    if d < 1:
        raise ValidationError(f"d must be >= 1, got {d}")
    m_all = comb(N, 2)
    budget = min((2 ** d - 1) * N, m_all)
    return 2 ** budget * comb(m_all, budget)


def ncs_lower_formula(N: int, c) -> int:
    """floor(c N) ** floor(N / (2 c)): the closed-form growth floor obtained
    from repeatedly picking an edge that excludes at most c N - 1 others."""
    c = Fraction(c)
    if c <= 0 or c * N < 1:
        raise ValidationError(f"need c > 0 and c*N >= 1, got c={c}, N={N}")
    base = floor(c * N)
    expo = floor(Fraction(N) / (2 * c))
    return base ** expo
