import random

import pytest

from gridcross.errors import ValidationError
from gridcross.geom import interior_lattice_points
from gridcross.graph import (
    compute_volume,
    make_grid_graph,
    parse_graph,
    reduce_edges,
    serialize_graph,
    validate_proper,
)


def test_validate_proper_flags_vertex_on_edge():
    g = make_grid_graph(2, [(1, 1), (2, 2), (3, 3)], [(0, 2)])
    assert validate_proper(g) == [((0, 2), 1)]


def test_validate_proper_empty_edge_set():
    g = make_grid_graph(2, [(1, 1), (2, 2), (3, 3)], [])
    assert validate_proper(g) == []


def test_compute_volume_examples():
    g = make_grid_graph(3, [(1, 1, 1), (3, 2, 1)], [])
    assert compute_volume(g) == 6
    assert compute_volume(make_grid_graph(2, [(5, 7)], [])) == 1


def test_compute_volume_translation_invariant():
    rng = random.Random(3)
    for _ in range(50):
        dim = rng.choice([2, 3, 4])
        pts = {tuple(rng.randint(0, 6) for _ in range(dim)) for _ in range(rng.randint(1, 8))}
        g = make_grid_graph(dim, sorted(pts), [])
        shift = tuple(rng.randint(-20, 20) for _ in range(dim))
        moved = [tuple(x + s for x, s in zip(v, shift)) for v in sorted(pts)]
        assert compute_volume(g) == compute_volume(make_grid_graph(dim, moved, []))


def test_compute_volume_empty_errors():
    with pytest.raises(ValidationError):
        compute_volume(make_grid_graph(2, [], []))


def test_make_grid_graph_rejects_bad_input():
    with pytest.raises(ValidationError, match="duplicate vertex"):
        make_grid_graph(2, [(1, 1), (1, 1)], [])
    with pytest.raises(ValidationError, match="self-loop"):
        make_grid_graph(2, [(1, 1), (2, 2)], [(0, 0)])
    with pytest.raises(ValidationError, match="duplicate edge"):
        make_grid_graph(2, [(1, 1), (2, 2)], [(0, 1), (1, 0)])
    with pytest.raises(ValidationError, match="outside"):
        make_grid_graph(2, [(1, 1), (2, 2)], [(0, 5)])
    with pytest.raises(ValidationError, match="coordinates"):
        make_grid_graph(3, [(1, 1)], [])


def test_edges_canonicalized():
    g = make_grid_graph(2, [(1, 1), (2, 2), (3, 1)], [(2, 0), (1, 0)])
    assert g.edges == ((0, 1), (0, 2))


def test_parse_examples():
    g = parse_graph('{"dim":2,"vertices":[[1,1],[2,2]],"edges":[[0,1]]}')
    assert g.dim == 2
    assert g.vertices == ((1, 1), (2, 2))
    assert g.edges == ((0, 1),)


def test_parse_error_reports_location():
    with pytest.raises(ValidationError, match="duplicate vertex"):
        parse_graph('{"dim":2,"vertices":[[1,1],[1,1]],"edges":[]}')
    with pytest.raises(ValidationError, match="malformed JSON"):
        parse_graph("{nope")
    with pytest.raises(ValidationError, match="missing required key"):
        parse_graph('{"dim":2,"vertices":[]}')


def test_serialize_parse_round_trip_random():
    rng = random.Random(5)
    for _ in range(60):
        dim = rng.choice([1, 2, 3, 4])
        pts = sorted({tuple(rng.randint(-5, 5) for _ in range(dim)) for _ in range(rng.randint(1, 10))})
        pairs = [(i, j) for i in range(len(pts)) for j in range(i + 1, len(pts))]
        rng.shuffle(pairs)
        g = make_grid_graph(dim, pts, pairs[: rng.randint(0, len(pairs))])
        assert parse_graph(serialize_graph(g)) == g


def test_serialize_is_canonical():
    text = '{"dim":2,"vertices":[[1,1],[2,2],[3,1]],"edges":[[2,0],[1,0]]}'
    assert serialize_graph(parse_graph(text)) == '{"dim":2,"vertices":[[1,1],[2,2],[3,1]],"edges":[[0,1],[0,2]]}'


def test_reduce_edges_produces_primitive_edges():
    g = make_grid_graph(2, [(0, 0), (4, 6)], [(0, 1)])
    r = reduce_edges(g)
    assert (2, 3) in r.vertices
    assert all(not interior_lattice_points(r.segment(e)) for e in r.edges)
    # reduced edges never pass through any vertex
    assert validate_proper(r) == []


def test_reduce_edges_merges_collapsing_edges():
    # two edges with the same anchor and collinear directions collapse together
    g = make_grid_graph(1, [(0,), (2,), (4,)], [(0, 1), (0, 2)])
    r = reduce_edges(g)
    assert len(r.edges) == 1
