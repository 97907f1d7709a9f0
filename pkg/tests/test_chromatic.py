import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rainbowpath import (
    GraphError,
    build_graph,
    canonical_form,
    chromatic_number,
    dsatur_coloring,
    enumerate_colorings,
    is_proper,
    iter_colorings,
)
from rainbowpath.chromatic import TooLargeError
from helpers import is_bipartite_bfs, naive_canonical_colorings, naive_chromatic_number
from test_graphs import graphs


class TestDsatur:
    def test_edgeless(self):
        assert dsatur_coloring(build_graph(4, [])).palette_size == 1

    def test_c5_needs_three(self, c5):
        coloring = dsatur_coloring(c5)
        assert is_proper(c5, coloring)
        assert coloring.palette_size == 3

    def test_k2(self, k2):
        assert dsatur_coloring(k2).palette_size == 2

    @given(graphs())
    def test_always_proper_and_at_least_chi(self, g):
        coloring = dsatur_coloring(g)
        assert is_proper(g, coloring)
        assert coloring.palette_size >= chromatic_number(g).chi


class TestChromaticNumber:
    def test_c5(self, c5):
        result = chromatic_number(c5)
        assert result.chi == 3
        assert is_proper(c5, result.witness)
        assert result.witness.palette_size == 3
        kind, cycle = result.lower_bound_certificate
        assert kind == "odd_cycle" and len(cycle) % 2 == 1

    def test_grotzsch(self, grotzsch):
        assert grotzsch.n == 11 and grotzsch.edge_count == 20
        assert chromatic_number(grotzsch).chi == 4

    def test_edgeless(self):
        assert chromatic_number(build_graph(6, [])).chi == 1

    def test_empty_graph(self):
        assert chromatic_number(build_graph(0, [])).chi == 0

    def test_cap(self):
        with pytest.raises(TooLargeError):
            chromatic_number(build_graph(70, []), max_vertices=64)

    @given(graphs(max_n=7))
    @settings(max_examples=60, deadline=None)
    def test_matches_brute_force(self, g):
        result = chromatic_number(g)
        assert result.chi == naive_chromatic_number(g)
        assert is_proper(g, result.witness)
        assert result.witness.palette_size == result.chi

    @given(graphs())
    def test_bipartite_iff_chi_at_most_two(self, g):
        chi = chromatic_number(g).chi
        assert (chi <= 2) == is_bipartite_bfs(g)
        if g.edge_count:
            assert chi >= 2

    @given(graphs(max_n=7), st.data())
    @settings(max_examples=40, deadline=None)
    def test_vertex_deletion_monotone(self, g, data):
        from rainbowpath import induced_subgraph

        v = data.draw(st.integers(0, g.n - 1))
        rest = [u for u in range(g.n) if u != v]
        smaller = induced_subgraph(g, rest).graph
        assert chromatic_number(smaller).chi <= chromatic_number(g).chi


class TestEnumerateColorings:
    def test_k2_single_canonical(self, k2):
        enum = enumerate_colorings(k2, max_colors=2, cap=100)
        assert [c.colors for c in enum.colorings] == [(1, 2)]
        assert not enum.truncated

    def test_c5_matches_brute_force(self, c5):
        expected = naive_canonical_colorings(c5, 3)
        enum = enumerate_colorings(c5, max_colors=3, cap=1000)
        assert {c.colors for c in enum.colorings} == expected
        # thirty proper 3-colorings collapse to five canonical classes
        assert len(enum.colorings) == 5

    def test_path3_matches_brute_force(self):
        p3 = build_graph(3, [(0, 1), (1, 2)])
        expected = naive_canonical_colorings(p3, 2)
        enum = enumerate_colorings(p3, max_colors=2, cap=100)
        assert {c.colors for c in enum.colorings} == expected
        assert len(enum.colorings) == 1

    def test_cap_and_truncation(self, c5):
        enum = enumerate_colorings(c5, max_colors=3, cap=2)
        assert len(enum.colorings) == 2 and enum.truncated

    def test_infeasible_palette_is_empty(self, c5):
        assert enumerate_colorings(c5, max_colors=2, cap=10).colorings == ()

    @given(graphs(max_n=8))
    @settings(max_examples=40, deadline=None)
    def test_emissions_proper_canonical_and_complete(self, g):
        max_colors = 3
        emitted = list(iter_colorings(g, max_colors))
        for coloring in emitted:
            assert is_proper(g, coloring)
            assert canonical_form(coloring) == coloring
        seen = {c.colors for c in emitted}
        assert len(seen) == len(emitted)
        assert seen == naive_canonical_colorings(g, max_colors)

    def test_lexicographic_order(self, c5):
        emitted = [c.colors for c in iter_colorings(c5, 3)]
        assert emitted == sorted(emitted)
