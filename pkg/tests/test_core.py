"""Value objects, component labeling, and the exact mc solver."""

import json
from itertools import combinations

import pytest

from monocomp import (
    BudgetExceeded,
    EdgeColoring,
    PreconditionError,
    UniformHypergraph,
    canonicalize,
    check_coloring,
    color_components,
    largest_mono_component,
    mc_exact,
    two_shadow,
)


def path(n):
    return UniformHypergraph(n, 2, [(i, i + 1) for i in range(n - 1)])


class TestUniformHypergraph:
    def test_normalization(self):
        g = UniformHypergraph(4, 2, [(3, 2), (1, 0)])
        assert g.edges == ((0, 1), (2, 3))
        assert g.num_edges == 2

    def test_rejects_bad_edges(self):
        with pytest.raises(PreconditionError):
            UniformHypergraph(3, 2, [(0, 0)])
        with pytest.raises(PreconditionError):
            UniformHypergraph(3, 2, [(1, 0), (0, 1)])
        with pytest.raises(PreconditionError):
            UniformHypergraph(3, 2, [(0, 3)])
        with pytest.raises(PreconditionError):
            UniformHypergraph(3, 3, [(0, 1)])

    def test_complete_counts(self):
        assert UniformHypergraph.complete(5, 2).num_edges == 10
        assert UniformHypergraph.complete(6, 3).num_edges == 20
        assert UniformHypergraph.complete(3, 3).edges == ((0, 1, 2),)

    def test_dict_round_trip(self):
        g = UniformHypergraph(5, 3, [(0, 1, 2), (2, 3, 4)])
        d = g.to_dict()
        assert json.loads(json.dumps(d)) == d
        assert UniformHypergraph.from_dict(d) == g


class TestEdgeColoring:
    def test_from_labels_round_trip(self):
        chi = EdgeColoring.from_labels(3, [0, 2, 1, 0])
        assert chi.is_singleton
        assert chi.labels() == (0, 2, 1, 0)

    def test_multi_color_not_singleton(self):
        chi = EdgeColoring(2, [(0, 1), (1,)])
        assert not chi.is_singleton
        with pytest.raises(PreconditionError):
            chi.labels()

    def test_serialization(self):
        chi = EdgeColoring(3, [(0, 2), (1,)])
        assert EdgeColoring.from_dict(chi.to_dict()) == chi

    def test_check_coloring_rejects_mismatch(self):
        g = path(3)
        with pytest.raises(PreconditionError):
            check_coloring(g, EdgeColoring.from_labels(2, [0]))
        with pytest.raises(PreconditionError):
            check_coloring(g, EdgeColoring(2, [(0,), (2,)]))

    def test_canonicalize_keeps_lowest(self):
        g = path(3)
        chi = EdgeColoring(3, [(1, 2), (0, 2)])
        assert canonicalize(g, chi).labels() == (1, 0)


class TestTwoShadow:
    def test_triangle_from_triple(self):
        g = UniformHypergraph(3, 3, [(0, 1, 2)])
        assert two_shadow(g).edges == ((0, 1), (0, 2), (1, 2))

    def test_edge_filter(self):
        g = UniformHypergraph(5, 3, [(0, 1, 2), (2, 3, 4)])
        assert two_shadow(g, edge_filter=[1]).edges == ((2, 3), (2, 4), (3, 4))
        with pytest.raises(PreconditionError):
            two_shadow(g, edge_filter=[2])


class TestComponents:
    def test_labeling_by_hand(self):
        # edges 01, 12 red; 34 blue; vertex 5 isolated everywhere
        g = UniformHypergraph(6, 2, [(0, 1), (1, 2), (3, 4)])
        chi = EdgeColoring.from_labels(2, [0, 0, 1])
        lab = color_components(g, chi)
        assert lab.components[0] == ((0, 1, 2), (3,), (4,), (5,))
        assert lab.components[1] == ((0,), (1,), (2,), (3, 4), (5,))
        assert lab.sizes(0) == (3, 1, 1, 1)
        assert lab.largest(1) == (2, (3, 4))

    def test_largest_mono_component_tie_break(self):
        g = UniformHypergraph(4, 2, [(0, 1), (2, 3)])
        chi = EdgeColoring.from_labels(2, [1, 0])
        color, size, verts = largest_mono_component(g, chi)
        assert (color, size, verts) == (0, 2, (2, 3))

    def test_multi_colored_edge_joins_both_colors(self):
        g = path(3)
        chi = EdgeColoring(2, [(0, 1), (1,)])
        lab = color_components(g, chi)
        assert lab.largest(0) == (2, (0, 1))
        assert lab.largest(1) == (3, (0, 1, 2))


class TestMcExact:
    def test_no_edges(self):
        g = UniformHypergraph(4, 2, [])
        assert mc_exact(g, 2) == 1

    def test_single_edge(self):
        g = UniformHypergraph(2, 2, [(0, 1)])
        assert mc_exact(g, 2) == 2

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_complete_graph_two_colors_spans(self, n):
        # classical: any 2-coloring of a complete graph has a spanning
        # monochromatic component
        assert mc_exact(UniformHypergraph.complete(n, 2), 2) == n

    def test_path_values(self):
        assert mc_exact(path(4), 2) == 2
        assert mc_exact(path(4), 3) == 2

    def test_colors_exceeding_edges(self):
        g = path(3)
        assert mc_exact(g, 5) == 2     # only 2 edges to spread

    def test_budget_raises(self):
        g = UniformHypergraph.complete(6, 2)
        with pytest.raises(BudgetExceeded):
            mc_exact(g, 3, budget=2)

    def test_matches_exhaustive_reference(self):
        # independent reference: min over all label assignments directly
        g = UniformHypergraph(4, 2, [(0, 1), (1, 2), (2, 3), (0, 3)])
        best = g.n
        for labels in ([(a, b, c, d) for a in range(2) for b in range(2)
                        for c in range(2) for d in range(2)]):
            chi = EdgeColoring.from_labels(2, labels)
            _, size, _ = largest_mono_component(g, chi)
            best = min(best, size)
        assert mc_exact(g, 2) == best
