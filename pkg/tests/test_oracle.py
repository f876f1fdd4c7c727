"""Tests for the brute-force oracle."""
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from backend import config
from backend.services.errors import TooLarge
from backend.services.generators import complete, sharp
from backend.services.graph import build_graph
from backend.services.oracle import brute_force_partition, check_fact5
from backend.services.peeler import peel
from backend.services.relaxation import make_params


class TestBruteForcePartition:
    def test_k4_has_no_partition(self):
        assert brute_force_partition(complete(4), 1, 1) is None

    def test_k7_first_hit_in_lexicographic_order(self, k7):
        A, B = brute_force_partition(k7, 1, 1)
        assert A == {4, 5, 6}
        assert B == {0, 1, 2, 3}

    def test_k6_fractional_parameters(self):
        A, B = brute_force_partition(complete(6), Fraction(3, 4), Fraction(3, 4))
        assert (A, B) == ({3, 4, 5}, {0, 1, 2})

    @pytest.mark.parametrize("n", [6, 7, 9])
    def test_sharp_graphs_have_none(self, n):
        assert brute_force_partition(sharp(1, 1, n), 1, 1) is None

    def test_cap(self):
        with pytest.raises(TooLarge):
            brute_force_partition(complete(config.ORACLE_PARTITION_CAP + 1), 1, 1)

    def test_cap_override(self, k7, monkeypatch):
        with pytest.raises(TooLarge):
            brute_force_partition(k7, 1, 1, cap=6)
        monkeypatch.setattr(config, "ORACLE_PARTITION_CAP", 6)
        with pytest.raises(TooLarge):
            brute_force_partition(k7, 1, 1)


class TestFact5:
    def test_k7_is_sparse_below_the_whole(self, k7):
        assert check_fact5(k7, 3)

    def test_k8_has_a_dense_proper_subset(self):
        assert not check_fact5(complete(8), 3)

    def test_disjoint_union_fails(self, k7_pair):
        assert not check_fact5(k7_pair, 3)

    def test_cap(self):
        with pytest.raises(TooLarge):
            check_fact5(complete(config.ORACLE_FACT5_CAP + 1), 3)

    def test_k7_sparse_below_the_whole_peels_nothing(self, k7):
        params = make_params(1, 1)
        assert check_fact5(k7, params.c)
        assert peel(k7, params).trace == ()


def test_split_exists_below_the_density_threshold():
    # K5 misses ||V|| >= (5/2)|V| yet still splits into a triangle and an edge
    A, B = brute_force_partition(complete(5), 1, Fraction(1, 2))
    assert (len(A), len(B)) == (3, 2)


@st.composite
def nearly_complete(draw):
    n = draw(st.integers(min_value=5, max_value=10))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    missing = set(draw(st.lists(st.sampled_from(pairs), max_size=n, unique=True)))
    G = build_graph(n, [pair for pair in pairs if pair not in missing])
    grid = st.sampled_from([Fraction(1, 2), Fraction(3, 4), Fraction(1), Fraction(3, 2)])
    return G, make_params(draw(grid), draw(grid))


@settings(max_examples=200, deadline=None)
@given(nearly_complete())
def test_sparse_proper_subsets_mean_nothing_is_peeled(data):
    G, params = data
    assume(G.edge_count >= params.c * G.vertex_count)
    if check_fact5(G, params.c):
        result = peel(G, params)
        assert result.trace == ()
        assert result.surviving == G.vertices
