"""Tests for the immutable graph and its counting functionals."""
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from backend.services.errors import DuplicateEdge, OverlappingSets, SelfLoop, VertexOutOfRange
from backend.services.generators import complete
from backend.services.graph import (
    build_graph,
    cross_edge_count,
    induced_edge_count,
    surplus,
)


class TestBuildGraph:
    def test_path_degrees(self, path3):
        assert [path3.degree(v) for v in range(3)] == [1, 2, 1]
        assert path3.edge_count == 2

    def test_complete_counts(self, k7):
        assert k7.edge_count == 21
        assert k7.min_degree() == 6

    @pytest.mark.parametrize("edges", [[(0, 1), (0, 1)], [(0, 1), (1, 0)]])
    def test_duplicate_edge_rejected(self, edges):
        with pytest.raises(DuplicateEdge):
            build_graph(4, edges)

    def test_self_loop_rejected(self):
        with pytest.raises(SelfLoop):
            build_graph(2, [(0, 0)])

    def test_out_of_range_rejected(self):
        with pytest.raises(VertexOutOfRange):
            build_graph(3, [(0, 3)])

    def test_edge_list_sorted_with_low_endpoint_first(self):
        G = build_graph(4, [(3, 1), (2, 0), (1, 0)])
        assert G.edge_list == ((0, 1), (0, 2), (1, 3))

    def test_graph_is_frozen(self, k7):
        with pytest.raises(Exception):
            k7.nx.add_edge(0, 100)


class TestRestrict:
    def test_keeps_original_ids(self, k7_pair):
        H = k7_pair.restrict(range(7, 14))
        assert H.vertices == frozenset(range(7, 14))
        assert H.edge_count == 21
        assert H.neighbors(7) == frozenset(range(8, 14))

    def test_rejects_foreign_vertices(self, k7):
        with pytest.raises(VertexOutOfRange):
            k7.restrict([0, 1, 99])

    def test_is_clique(self, k7_pair, path3):
        assert k7_pair.is_clique(range(7))
        assert not k7_pair.is_clique([0, 7])
        assert not path3.is_clique([0, 1, 2])
        assert path3.is_clique([])


class TestCounting:
    @pytest.mark.parametrize("X, expected", [({0, 1, 2}, 3), (set(range(7)), 21), (set(), 0)])
    def test_induced_edge_count_k7(self, k7, X, expected):
        assert induced_edge_count(k7, X) == expected

    def test_induced_edge_count_nonadjacent(self, path3):
        assert induced_edge_count(path3, {0, 2}) == 0

    def test_cross_edge_count(self, k7, k7_pair, path3):
        assert cross_edge_count(k7, {0, 1, 2}, {3, 4, 5, 6}) == 12
        assert cross_edge_count(k7_pair, range(7), range(7, 14)) == 0
        assert cross_edge_count(path3, {0, 2}, {1}) == 2

    def test_cross_edge_count_rejects_overlap(self, k7):
        with pytest.raises(OverlappingSets):
            cross_edge_count(k7, {0, 1}, {1, 2})

    @pytest.mark.parametrize("n, expected", [
        (7, (Fraction(0), Fraction(0))),
        (6, (Fraction(-3), Fraction(0))),
        (8, (Fraction(4), Fraction(4))),
    ])
    def test_surplus_of_complete_graphs(self, n, expected):
        G = complete(n)
        assert surplus(G, G.vertices, Fraction(3)) == expected


C_GRID = [Fraction(0), Fraction(1, 2), Fraction(5, 2), Fraction(3), Fraction(7, 2)]


@st.composite
def graph_and_split(draw):
    n = draw(st.integers(min_value=0, max_value=9))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    side = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    return build_graph(n, edges), side


def _check_edge_count_splits(data):
    G, side = data
    A = {v for v in range(G.vertex_count) if side[v]}
    B = G.vertices - A
    assert G.edge_count == (
        induced_edge_count(G, A) + induced_edge_count(G, B) + cross_edge_count(G, A, B)
    )


@settings(max_examples=200, deadline=None)
@given(graph_and_split())
def test_edge_count_splits_over_any_partition(data):
    _check_edge_count_splits(data)


@pytest.mark.slow
@settings(max_examples=10_000, deadline=None)
@given(graph_and_split())
def test_edge_count_splits_over_any_partition_long_run(data):
    _check_edge_count_splits(data)


@settings(max_examples=200, deadline=None)
@given(graph_and_split(), st.sampled_from(C_GRID))
def test_surplus_of_whole_graph_is_half_the_degree_sum(data, c):
    G, _ = data
    excess, T = surplus(G, G.vertices, c)
    assert excess == Fraction(sum(G.degree(v) for v in G.vertices), 2) - c * G.vertex_count
    assert excess == G.edge_count - c * G.vertex_count
    assert T == max(Fraction(0), excess)


@settings(max_examples=200, deadline=None)
@given(graph_and_split())
def test_induced_edge_count_by_pairs_and_by_adjacency(data):
    G, side = data
    X = {v for v in range(G.vertex_count) if side[v]}
    by_pairs = sum(1 for u, v in combinations(sorted(X), 2) if G.has_edge(u, v))
    by_adjacency = sum(len(G.adjacency[v] & X) for v in X)
    assert by_adjacency % 2 == 0
    assert induced_edge_count(G, X) == by_pairs == by_adjacency // 2
