import random
from collections import Counter

import pytest

from gridcross import _kernels
from gridcross.constructions import layered_complete_bipartite, random_proper_graph
from gridcross.counting import count_crossings_naive, count_crossings_pruned
from gridcross.errors import ImproperGraphError, ValidationError
from gridcross.graph import make_grid_graph

BACKENDS = _kernels.available_backends() + ("object",)


def _bipartite_crossings_by_direction_match(g):
    # independent hand-count for two-layer drawings: edges cross iff their
    # endpoint sums coincide (all crossings happen at equal heights), so the
    # crossing pairs are exactly the pairs inside each endpoint-sum class
    sums = Counter()
    for i, j in g.edges:
        u, w = g.vertices[i], g.vertices[j]
        sums[tuple(a + b for a, b in zip(u, w))] += 1
    return sum(r * (r - 1) // 2 for r in sums.values())


def test_naive_layered_k2_d3():
    g = layered_complete_bipartite(2, 3)
    rep = count_crossings_naive(g)
    assert rep.total == 10
    assert rep.total == _bipartite_crossings_by_direction_match(g)
    assert sum(rep.per_edge) == 2 * rep.total
    assert max(rep.per_edge) == 3


def test_naive_unit_square_diagonals():
    g = make_grid_graph(2, [(1, 1), (2, 2), (1, 2), (2, 1)], [(0, 1), (2, 3)])
    rep = count_crossings_naive(g)
    assert rep.total == 1
    assert rep.per_edge == (1, 1)


def test_naive_tree_fixture_is_crossing_free():
    g = make_grid_graph(2, [(1, 1), (2, 1), (2, 2), (3, 1)], [(0, 1), (1, 2), (1, 3)])
    assert count_crossings_naive(g).total == 0


def test_counters_refuse_improper_graphs():
    g = make_grid_graph(2, [(1, 1), (2, 2), (3, 3)], [(0, 2)])
    with pytest.raises(ImproperGraphError) as exc:
        count_crossings_naive(g)
    assert exc.value.violations == [((0, 2), 1)]
    with pytest.raises(ImproperGraphError):
        count_crossings_pruned(g)


@pytest.mark.parametrize("backend", BACKENDS)
def test_pruned_matches_naive_on_fixtures(backend):
    for k, d in [(2, 3), (3, 3), (2, 4)]:
        g = layered_complete_bipartite(k, d)
        ref = count_crossings_naive(g)
        got = count_crossings_pruned(g, backend=backend)
        assert got.total == ref.total
        assert got.per_edge == ref.per_edge
        assert got.method == "pruned"


@pytest.mark.parametrize("backend", BACKENDS)
def test_pruned_matches_naive_on_random_graphs(backend):
    rng = random.Random(41)
    grids = [(6, 6), (4, 4), (3, 3, 3), (4, 2, 4), (2, 2, 2, 2), (3, 2, 2, 2)]
    for trial in range(40):
        sides = grids[trial % len(grids)]
        g = random_proper_graph(sides, m=rng.randint(2, 25), seed=1000 + trial)
        ref = count_crossings_naive(g, check_proper=False)
        got = count_crossings_pruned(g, backend=backend, check_proper=False)
        assert got.total == ref.total
        assert got.per_edge == ref.per_edge


def test_pruned_matches_naive_bulk_500():
    rng = random.Random(67)
    grids = [(8, 8), (5, 5), (4, 4, 4), (2, 4, 8), (2, 2, 2, 8), (3, 3, 2, 2)]
    for trial in range(500):
        sides = grids[trial % len(grids)]
        g = random_proper_graph(sides, m=rng.randint(5, 60), seed=5000 + trial)
        ref = count_crossings_naive(g, check_proper=False)
        got = count_crossings_pruned(g, check_proper=False)
        assert got.total == ref.total
        assert got.per_edge == ref.per_edge


def test_pruned_empty_and_single_edge():
    g = make_grid_graph(2, [(1, 1), (2, 2)], [])
    assert count_crossings_pruned(g).total == 0
    g = make_grid_graph(2, [(1, 1), (2, 2)], [(0, 1)])
    rep = count_crossings_pruned(g)
    assert rep.total == 0 and rep.per_edge == (0,)


def test_pruned_huge_coordinates_fall_back_to_exact_path():
    scale = 10 ** 9  # beyond the int64-safe kernel range
    g = make_grid_graph(2, [(0, 0), (2 * scale, 2 * scale), (0, 2 * scale), (2 * scale, 0)],
                        [(0, 1), (2, 3)])
    rep = count_crossings_pruned(g)  # auto-selects the big-integer path
    assert rep.total == 1
    with pytest.raises(ValidationError, match="int64"):
        count_crossings_pruned(g, backend=_kernels.available_backends()[0])


def test_report_invariant_sum_per_edge():
    rng = random.Random(43)
    for trial in range(20):
        g = random_proper_graph((5, 5), m=rng.randint(2, 20), seed=trial)
        for rep in (count_crossings_naive(g), count_crossings_pruned(g)):
            assert sum(rep.per_edge) == 2 * rep.total
