import pytest

from ramsey_trails.graph import Graph, all_labeled_graphs, complement
from ramsey_trails.trails import (
    Trail,
    eulerian_trail,
    find_long_trail,
    has_long_trail,
    is_trail_in,
    longest_trail,
    pair_trail_count,
    trail_violation,
)

from oracles import naive_longest_trail


def test_trail_helpers():
    t = Trail.from_vertices([2, 0, 1, 2])
    assert t.edges == ((0, 2), (0, 1), (1, 2))
    assert t.vertex_count == 4 and t.edge_count == 3
    assert t.closed
    assert t.prefix(2) == Trail((2, 0), ((0, 2),))
    assert t.reversed().vertices == (2, 1, 0, 2)


def test_trail_violation_reports_first_problem():
    g = Graph.complete(3)
    assert trail_violation(g, Trail.from_vertices([0, 1, 2, 0])) is None
    assert "repeated edge" in trail_violation(g, Trail.from_vertices([0, 1, 0, 1]))
    assert "outside" in trail_violation(g, Trail.from_vertices([0, 5]))
    assert "not present" in trail_violation(Graph.empty(2), Trail.from_vertices([0, 1]))
    mismatched = Trail((0, 1, 2), ((0, 1), (0, 2)))
    assert "expected" in trail_violation(g, mismatched)


def test_longest_trail_fixed_cases():
    assert longest_trail(Graph.complete(3)).best_vertex_count == 4
    assert longest_trail(Graph.path(4)).best_vertex_count == 4
    star = Graph.from_edges(5, [(0, i) for i in range(1, 5)])
    assert longest_trail(star).best_vertex_count == 3
    assert longest_trail(Graph.empty(1)).best_vertex_count == 1


def test_longest_trail_witness_is_valid_and_deterministic():
    for g in (Graph.complete(4), Graph.path(5), Graph.cycle(5)):
        r1 = longest_trail(g)
        r2 = longest_trail(g)
        assert r1 == r2
        assert is_trail_in(g, r1.witness)
        assert r1.witness.vertex_count == r1.best_vertex_count


@pytest.mark.parametrize("n", range(1, 6))
def test_longest_trail_matches_naive_oracle_labeled(n):
    # n = 6 per isomorphism class is part of the acceptance suite
    for g in all_labeled_graphs(n):
        assert longest_trail(g).best_vertex_count == naive_longest_trail(g)


@pytest.mark.parametrize("n", range(1, 6))
def test_pruning_does_not_change_results(n):
    for g in all_labeled_graphs(n):
        assert (
            longest_trail(g, prune=True).best_vertex_count
            == longest_trail(g, prune=False).best_vertex_count
        )


def test_has_long_trail():
    assert has_long_trail(Graph.complete(3), 4)
    assert not has_long_trail(Graph.complete(3), 5)
    # 5 vertices, 5 edges, four odd degrees on both sides: no 6-vertex trail
    fig = Graph.from_edges(5, [(4, 0), (0, 1), (1, 4), (4, 3), (1, 2)])
    assert not has_long_trail(fig, 6)
    assert not has_long_trail(complement(fig), 6)
    assert has_long_trail(Graph.empty(1), 1)
    t = find_long_trail(Graph.complete(4), 4)
    assert t is not None and t.vertex_count == 4
    assert is_trail_in(Graph.complete(4), t)
    assert find_long_trail(Graph.path(3), 4) is None


def test_eulerian_trail():
    t = eulerian_trail(Graph.complete(3))
    assert t.edge_count == 3 and t.vertex_count == 4 and t.closed
    p = eulerian_trail(Graph.path(4))
    assert p.vertices == (0, 1, 2, 3)
    k5 = eulerian_trail(Graph.complete(5))
    assert k5.edge_count == 10 and k5.vertex_count == 11 and k5.closed
    assert is_trail_in(Graph.complete(5), k5)
    # semi-Eulerian endpoints are the two odd vertices
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 1)])
    t = eulerian_trail(g)
    odd = sorted(v for v in range(4) if g.degree(v) % 2)
    assert sorted((t.vertices[0], t.vertices[-1])) == odd
    assert eulerian_trail(g) == eulerian_trail(g)


def test_eulerian_trail_rejects_non_traversable():
    with pytest.raises(ValueError, match="odd degrees"):
        eulerian_trail(Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]))
    with pytest.raises(ValueError, match="disconnected"):
        eulerian_trail(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_eulerian_trail_start_control():
    g = Graph.cycle(5)
    t = eulerian_trail(g, start=3)
    assert t.vertices[0] == t.vertices[-1] == 3
    with pytest.raises(ValueError, match="odd vertex"):
        eulerian_trail(Graph.path(3), start=1)


@pytest.mark.parametrize("n", range(2, 6))
def test_euler_trail_length_identity(n):
    # connected traversable graphs: longest trail uses every edge
    from ramsey_trails.graph import EulerKind, euler_classify

    for g in all_labeled_graphs(n):
        cls = euler_classify(g)
        if cls.kind is EulerKind.NEITHER or g.edge_count() == 0:
            continue
        assert longest_trail(g).best_vertex_count == g.edge_count() + 1
        t = eulerian_trail(g)
        assert t.edge_count == g.edge_count()
        assert is_trail_in(g, t)
        assert t.closed == (cls.kind is EulerKind.EULERIAN)


def test_pair_trail_count():
    single = Graph.from_edges(3, [(0, 2)])
    assert pair_trail_count(single) == 3
    assert pair_trail_count(Graph.from_edges(2, [(0, 1)])) == 2


@pytest.mark.parametrize("n", range(1, 6))
def test_pair_trail_count_complement_symmetric(n):
    for g in all_labeled_graphs(n):
        assert pair_trail_count(g) == pair_trail_count(complement(g))
