"""Generators for extremal drawings on flat grids and the crossing-free
assembly procedures built on top of them.

The central fixture is the two-layer drawing of a complete bipartite graph:
all points of the k x ... x k x 2 box, with every bottom-layer point joined
to every top-layer point. Edges differ by exactly 1 in the last coordinate,
so they are primitive and the drawing is proper by construction.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from .counting import count_crossings_naive
from .errors import ValidationError
from .geom import gcd_reduce
from .graph import GridGraph, make_grid_graph


def layer_grid_vertices(k: int, d: int):
    """Points of the k x ... x k x 2 box: bottom layer first, lexicographic."""
    return [xs + (z,) for z in (1, 2) for xs in product(range(1, k + 1), repeat=d - 1)]


def layered_complete_bipartite(k: int, d: int) -> GridGraph:
    """Complete bipartite drawing between the two layers of the k^(d-1) x 2 box.

    2*k^(d-1) vertices and k^(2(d-1)) edges.
    """
    if k < 1 or d < 2:
        raise ValidationError(f"need k >= 1 and d >= 2, got k={k}, d={d}")
    verts = layer_grid_vertices(k, d)
    half = len(verts) // 2
    edges = [(i, half + j) for i in range(half) for j in range(half)]
    return make_grid_graph(d, verts, edges)


def tile_bipartite(k: int, side: int, d: int) -> GridGraph:
    """Disjoint copies of the k-block bipartite drawing tiling a side^(d-1) x 2 box.

    The box is split into (side/k)^(d-1) blocks of shape k x ... x k x 2;
    each carries its own complete bipartite drawing and no edges leave a
    block, so crossings are the per-block count times the number of blocks.
    """
    if d < 3:
        raise ValidationError(f"tiling needs d >= 3, got {d}")
    if side % k != 0:
        raise ValidationError(f"block side {k} does not divide {side}")
    verts = [xs + (z,) for z in (1, 2) for xs in product(range(1, side + 1), repeat=d - 1)]
    index = {v: i for i, v in enumerate(verts)}
    edges = []
    blocks = product(range(side // k), repeat=d - 1)
    locals_ = list(product(range(1, k + 1), repeat=d - 1))
    for off in blocks:
        shifted = [tuple(o * k + x for o, x in zip(off, xs)) for xs in locals_]
        for u in shifted:
            for w in shifted:
                edges.append((index[u + (1,)], index[w + (2,)]))
    return make_grid_graph(d, verts, edges)


def analytic_skip_bound(k: int, d: int) -> Fraction:
    """Closed-form per-edge crossing budget for the layered bipartite drawing.

    Planes through a fixed edge are grouped by how far their defining lattice
    direction steps within a layer (r = 1..k, Chebyshev); a plane at step r
    holds at most (k/r)^2 crossing edges, and there are at most 4r such
    planes in dimension 3 and (d-1)(2r+1)^(d-2) in dimension d >= 4. The
    exact finite sum of those products is returned.
    """
    if k < 1 or d < 3:
        raise ValidationError(f"need k >= 1 and d >= 3, got k={k}, d={d}")
    total = Fraction(0)
    for r in range(1, k + 1):
        if d == 3:
            planes = 4 * r
        else:
            planes = (d - 1) * (2 * r + 1) ** (d - 2)
        total += planes * Fraction(k, r) ** 2
    return total


def random_proper_graph(sides, m: int, seed: int, primitive_only: bool = True) -> GridGraph:
    """Uniform m-edge graph on the full grid given by `sides`, proper by filtering.

    Vertices are all grid points; candidate edges are the pairs whose open
    segment avoids every grid point. On a full grid that is the same as the
    coordinate differences being coprime, so candidates are always primitive
    regardless of the flag. Deterministic for a fixed seed.
    """
    sides = tuple(int(s) for s in sides)
    if any(s < 1 for s in sides):
        raise ValidationError(f"grid sides must be positive, got {sides}")
    verts = [pt for pt in product(*(range(1, s + 1) for s in sides))]
    n = len(verts)
    candidates = []
    for i in range(n):
        for j in range(i + 1, n):
            _, g = gcd_reduce((verts[i], verts[j]))
            if g == 1:
                candidates.append((i, j))
    if primitive_only:
        pass  # implied: candidates on a full grid are exactly the primitive pairs
    if m > len(candidates):
        raise ValidationError(
            f"requested {m} edges but only {len(candidates)} proper candidates exist")
    rng = random.Random(seed)
    chosen = rng.sample(candidates, m)
    return make_grid_graph(len(sides), verts, chosen)


def _unit_intra_layer_edges(verts, index, d):
    edges = []
    for v in verts:
        for ax in range(d - 1):
            w = v[:ax] + (v[ax] + 1,) + v[ax + 1:]
            if w in index:
                edges.append((index[v], index[w]))
    return edges


def augment_matching_to_spanning_tree(matching: GridGraph, k: int, d: int) -> GridGraph:
    """Grow a crossing-free inter-layer matching into a crossing-free spanning tree.

    Adds every unit-length axis-parallel edge inside each layer (these cannot
    cross anything already present), then breaks cycles one at a time by
    removing the lowest-index non-matching edge on the first cycle a DFS
    finds. If the matching is empty, one unit edge between the layers is
    added so the two layers can be connected at all. The result spans the
    k x ... x k x 2 box, contains the matching, and is crossing-free.
    """
    expected = layer_grid_vertices(k, d)
    if set(matching.vertices) != set(expected) or matching.dim != d:
        raise ValidationError("matching must live on the full two-layer box")
    deg = {}
    for i, j in matching.edges:
        u, w = matching.vertices[i], matching.vertices[j]
        if u[-1] == w[-1]:
            raise ValidationError(f"matching edge {u}->{w} does not join the two layers")
        for x in (u, w):
            deg[x] = deg.get(x, 0) + 1
            if deg[x] > 1:
                raise ValidationError(f"not a matching: vertex {x} is covered twice")
    if count_crossings_naive(matching).total != 0:
        raise ValidationError("matching has crossings")

    verts = expected
    index = {v: i for i, v in enumerate(verts)}
    match_edges = []
    for i, j in matching.edges:
        a = index[matching.vertices[i]]
        b = index[matching.vertices[j]]
        match_edges.append((a, b) if a < b else (b, a))
    match_edges.sort()
    edges = list(match_edges)
    if not edges:
        bottom = verts[0]
        edges.append((index[bottom], index[bottom[:-1] + (2,)]))
    keep = len(edges)  # edges below this index are never removed
    edges.extend(sorted(set(_unit_intra_layer_edges(verts, index, d))))

    alive = [True] * len(edges)
    while True:
        cycle = _find_cycle(len(verts), edges, alive)
        if cycle is None:
            break
        # a cycle cannot consist of matching edges alone, so a victim exists
        victim = min(e for e in cycle if e >= keep)
        alive[victim] = False
    tree = [edges[e] for e in range(len(edges)) if alive[e]]
    return make_grid_graph(d, verts, tree)


def _find_cycle(n, edges, alive):
    """Indices of the edges on the first cycle found by DFS, or None."""
    adj = [[] for _ in range(n)]
    for ei, (i, j) in enumerate(edges):
        if alive[ei]:
            adj[i].append((j, ei))
            adj[j].append((i, ei))
    for nbrs in adj:
        nbrs.sort()
    seen = [False] * n
    for root in range(n):
        if seen[root]:
            continue
        parent_edge = {root: -1}
        stack = [(root, -1)]
        seen[root] = True
        while stack:
            v, via = stack.pop()
            for w, ei in reversed(adj[v]):
                if ei == via:
                    continue
                if not seen[w]:
                    seen[w] = True
                    parent_edge[w] = ei
                    stack.append((w, ei))
                else:
                    # back edge: walk both endpoints up to the root to close the cycle
                    return _close_cycle(v, w, ei, parent_edge, edges)
    return None


def _close_cycle(v, w, ei, parent_edge, edges):
    def path_to_root(x):
        out = []
        while parent_edge[x] != -1:
            e = parent_edge[x]
            out.append(e)
            i, j = edges[e]
            x = j if x == i else i
        return out

    pv = path_to_root(v)
    pw = path_to_root(w)
    common = set(pv) & set(pw)
    cycle = [ei] + [e for e in pv if e not in common] + [e for e in pw if e not in common]
    return cycle


def stack_layer_graphs(per_pair, k: int, d: int) -> GridGraph:
    """Union of two-layer graphs placed between consecutive layers of the k-cube.

    per_pair maps a layer index i (1..k-1) to a graph on the k x ... x k x 2
    box whose edges all join its layer 1 to its layer 2; the graph is shifted
    so those layers land on layers i and i+1 of the full k x ... x k grid.
    Layer pair 1 keeps its coordinates unchanged. Consecutive pairs meet only
    in a shared hyperplane of vertices, which open segments avoid, so the
    union of crossing-free inputs is crossing-free.
    """
    if k < 1 or d < 2:
        raise ValidationError(f"need k >= 1 and d >= 2, got k={k}, d={d}")
    verts = [pt for pt in product(*([range(1, k + 1)] * d))]
    index = {v: i for i, v in enumerate(verts)}
    edges = []
    for layer in sorted(per_pair):
        g = per_pair[layer]
        if not (1 <= layer <= k - 1):
            raise ValidationError(f"layer pair {layer} outside 1..{k - 1}")
        if g.dim != d:
            raise ValidationError(f"graph for pair {layer} has dimension {g.dim}, expected {d}")
        for i, j in g.edges:
            u, w = g.vertices[i], g.vertices[j]
            if {u[-1], w[-1]} != {1, 2}:
                raise ValidationError(f"edge {u}->{w} of pair {layer} is not inter-layer")
            if u[-1] == 2:
                u, w = w, u
            su = u[:-1] + (layer,)
            sw = w[:-1] + (layer + 1,)
            if su not in index or sw not in index:
                raise ValidationError(f"edge {u}->{w} of pair {layer} leaves the grid")
            a, b = index[su], index[sw]
            edges.append((a, b) if a < b else (b, a))
    return make_grid_graph(d, verts, edges)
