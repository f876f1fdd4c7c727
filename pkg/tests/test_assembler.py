"""Tests for the pipeline orchestration and witness validation."""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from backend.services.assembler import (
    MERGED_A,
    MERGED_NONE,
    PATH_CLIQUE,
    PATH_ROUNDING,
    PATH_SMALL,
    PartitionWitness,
    clique_split,
    merge_remainder,
    side_margin,
    small_split,
    solve,
    validate,
)
from backend.services.errors import CliqueTooSmall, HypothesisNotMet, InvalidInput, NotAClique
from backend.services.generators import complete
from backend.services.graph import build_graph
from backend.services.oracle import brute_force_partition
from backend.services.relaxation import make_params


def _witness(A, B, path=PATH_SMALL):
    return PartitionWitness(A=frozenset(A), B=frozenset(B), path=path,
                            s_side=Fraction(0), t_side=Fraction(0), peeled=frozenset())


class TestSmallSplit:
    def test_edge_on_b_side(self):
        A, B = small_split(complete(6), 1, Fraction(1, 2))
        assert B == {0, 1}
        assert A == {2, 3, 4, 5}

    def test_uneven_parameters(self):
        A, B = small_split(complete(6), Fraction(6, 5), Fraction(3, 10))
        assert B == {0, 1}
        assert A == {2, 3, 4, 5}

    def test_edge_on_a_side_when_s_is_smaller(self):
        A, B = small_split(complete(6), Fraction(1, 2), 1)
        assert A == {0, 1}
        assert B == {2, 3, 4, 5}

    def test_isolated_vertices_are_skipped(self):
        G = build_graph(8, [(u, v) for u in range(1, 8) for v in range(u + 1, 8)])
        A, B = small_split(G, Fraction(1, 2), Fraction(1, 2))
        assert B == {1, 2}
        assert 0 in A

    def test_k5_does_not_meet_hypothesis(self):
        # 10 < (5/2) * 5
        with pytest.raises(HypothesisNotMet):
            small_split(complete(5), 1, Fraction(1, 2))

    def test_requires_small_parameter(self, k7):
        with pytest.raises(InvalidInput):
            small_split(k7, 1, 1)


class TestCliqueSplit:
    def test_k7(self, k7):
        A, B = clique_split(k7, make_params(1, 1), k7.vertices)
        assert A == {0, 1, 2}
        assert B == {3, 4, 5}

    def test_k6_three_quarters(self):
        G = complete(6)
        A, B = clique_split(G, make_params(Fraction(3, 4), Fraction(3, 4)), G.vertices)
        assert (len(A), len(B)) == (3, 3)

    def test_too_small(self, k7):
        with pytest.raises(CliqueTooSmall):
            clique_split(k7, make_params(1, 1), range(5))

    def test_not_a_clique(self, k7_pair):
        with pytest.raises(NotAClique):
            clique_split(k7_pair, make_params(1, 1), range(14))


class TestMerge:
    def test_k7_remainder_goes_to_a(self, k7):
        w = merge_remainder(k7, make_params(1, 1), {0, 1, 2}, {3, 4, 5}, path=PATH_CLIQUE)
        assert w.A == {0, 1, 2, 6}
        assert w.B == {3, 4, 5}
        assert w.merged_into == MERGED_A
        assert (w.s_side, w.t_side) == (2, 0)

    def test_empty_remainder_is_identity(self):
        G = complete(6)
        w = merge_remainder(G, make_params(1, 1), {0, 1, 2}, {3, 4, 5})
        assert (w.A, w.B) == ({0, 1, 2}, {3, 4, 5})
        assert w.merged_into == MERGED_NONE

    def test_second_component_joins_a(self, k7_pair):
        w = merge_remainder(k7_pair, make_params(1, 1), {0, 1, 2}, {3, 4, 5})
        assert w.A == frozenset({0, 1, 2, 6}) | frozenset(range(7, 14))
        assert w.s_side == 27 - 11


class TestSolve:
    def test_k7_takes_clique_fallback(self, k7):
        w = solve(k7, 1, 1)
        assert w.path == PATH_CLIQUE
        assert w.A == {0, 1, 2, 6}
        assert w.B == {3, 4, 5}
        assert {w.s_side, w.t_side} == {Fraction(2), Fraction(0)}
        assert w.certificate is None

    def test_small_path(self):
        w = solve(complete(6), 1, Fraction(1, 2))
        assert w.path == PATH_SMALL
        assert w.B == {0, 1}
        assert w.peeled == frozenset(range(6))

    def test_rounding_path(self, k7_pair):
        w = solve(k7_pair, 1, 1)
        assert w.path == PATH_ROUNDING
        assert validate(k7_pair, 1, 1, w).ok
        assert w.certificate is not None
        assert w.certificate.achieved >= w.certificate.T - 1
        assert w.trace.loop_stats.pair_moves > 0

    def test_peeled_vertices_are_merged(self, k8_pendant):
        w = solve(k8_pendant, 1, 1)
        assert w.peeled == frozenset(range(1, 8))
        assert w.A | w.B == k8_pendant.vertices
        assert [entry.vertex for entry in w.trace.peel_trace] == [8, 0]
        assert validate(k8_pendant, 1, 1, w).ok

    def test_hypothesis_not_met(self):
        with pytest.raises(HypothesisNotMet):
            solve(complete(4), 1, 1)

    def test_empty_graph(self):
        with pytest.raises(HypothesisNotMet):
            solve(build_graph(0, []), 1, 1)

    def test_swapped_parameters_exchange_labels(self):
        G = complete(9)
        forward = solve(G, 1, 2)
        backward = solve(G, 2, 1)
        assert forward.A == {0, 1, 2, 8}
        assert (backward.A, backward.B) == (forward.B, forward.A)
        assert (forward.s_side, forward.t_side) == (2, 0)
        assert (backward.s_side, backward.t_side) == (0, 2)

    def test_deterministic(self, k7_pair):
        assert solve(k7_pair, 1, 1) == solve(k7_pair, 1, 1)


class TestValidate:
    def test_valid_partition(self, k7):
        assert validate(k7, 1, 1, _witness({0, 1, 2, 6}, {3, 4, 5})).ok

    def test_trivial_partition(self, k7):
        report = validate(k7, 1, 1, _witness(range(7), []))
        assert not report.ok
        assert "trivial partition" in report.names()

    def test_a_margin_failure(self, k7):
        report = validate(k7, 1, 1, _witness({0, 1}, range(2, 7)))
        assert report.names() == ["A-margin"]
        assert report.failures[0].values == {"edges": 1, "needed": 2}

    def test_not_a_partition(self, k7):
        report = validate(k7, 1, 1, _witness({0, 1, 2}, {3, 4, 5}))
        assert "not a partition" in report.names()

    def test_overlap_and_stray_vertices(self, k7):
        assert "overlapping parts" in validate(k7, 1, 1, _witness({0, 1, 2, 3}, {3, 4, 5, 6})).names()
        assert validate(k7, 1, 1, _witness({0, 1, 2, 99}, {3, 4, 5, 6})).names() == ["vertex range"]


@st.composite
def dense_instance(draw):
    n = draw(st.integers(min_value=4, max_value=10))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    missing = set(draw(st.lists(st.sampled_from(pairs), max_size=n, unique=True)))
    G = build_graph(n, [pair for pair in pairs if pair not in missing])
    grid = st.sampled_from([Fraction(1, 3), Fraction(1, 2), Fraction(3, 4), Fraction(1), Fraction(5, 4)])
    return G, draw(grid), draw(grid)


@settings(max_examples=150, deadline=None)
@given(dense_instance())
def test_solve_is_sound_and_agrees_with_oracle(data):
    G, s, t = data
    if G.edge_count < (s + t + 1) * G.vertex_count:
        with pytest.raises(HypothesisNotMet):
            solve(G, s, t)
        return
    w = solve(G, s, t)
    assert validate(G, s, t, w).ok
    assert w.A | w.B == G.vertices
    assert w.s_side == side_margin(G, w.A, s)
    assert brute_force_partition(G, s, t) is not None
