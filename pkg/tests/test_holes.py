"""Hole numbers, cross-free families, and expansion checks.

The brute-force counterparts in `monocomp.holes` serve as oracles here; the
fast paths must agree with them on every random instance drawn.
"""

import random
from itertools import combinations

import pytest

from monocomp import (
    PartiteMultiHypergraph,
    PreconditionError,
    UniformHypergraph,
    cross_free_number,
    independence_number,
    is_expander,
    is_outer_expander,
    overlapping_hole_number,
    partite_hole_number,
)
from monocomp.acceptance import _rand_partite, _rand_uniform
from monocomp.constructions import construct_grid
from monocomp.holes import (
    cross_free_brute,
    overlapping_hole_brute,
    partite_hole_brute,
    sdr_crosses,
)


def brute_independence(graph):
    masks = [set(e) for e in graph.edges]
    for size in range(graph.n, -1, -1):
        for cand in combinations(range(graph.n), size):
            s = set(cand)
            if not any(m <= s for m in masks):
                return size
    return 0


class TestIndependence:
    def test_empty_and_edgeless(self):
        g = UniformHypergraph(5, 2, [])
        assert independence_number(g) == (5, (0, 1, 2, 3, 4))

    def test_complete(self):
        g = UniformHypergraph.complete(5, 2)
        size, verts = independence_number(g)
        assert size == 1 and len(verts) == 1

    def test_complete_hypergraph(self):
        # any k-1 vertices are independent, no k of them are
        g = UniformHypergraph.complete(6, 3)
        assert independence_number(g)[0] == 2

    @pytest.mark.parametrize("seed", range(12))
    def test_against_brute(self, seed):
        rng = random.Random(seed)
        k = rng.choice([2, 3])
        n = rng.randint(k, 9)
        g = _rand_uniform(rng, n, k, max_edges=2 * n)
        size, verts = independence_number(g)
        assert size == brute_independence(g)
        assert not any(set(e) <= set(verts) for e in g.edges)


class TestPartiteHole:
    def test_verifies_and_matches_brute(self):
        rng = random.Random(7)
        for _ in range(12):
            k = rng.choice([2, 3])
            n = rng.randint(k, 9)
            g = _rand_uniform(rng, n, k, max_edges=2 * n)
            parts = rng.choice([2, 3])
            a, hole = partite_hole_number(g, parts)
            ref, _ = partite_hole_brute(g, parts)
            assert a == ref
            if a > 0:
                hole.verify(g)
                assert len(hole.sets) == parts

    def test_grid_headline_instance(self):
        # 2-colored grid with 3x4 groups at n=12: exact alpha_2 is 2, not
        # the closed formula's n/3 (the formula and its worked instance
        # disagree; the exact solver is the contract here)
        g = construct_grid(3, 4, 12).instance
        a, hole = partite_hole_number(g, 2)
        assert a == 2
        hole.verify(g)

    def test_too_few_parts_rejected(self):
        with pytest.raises(PreconditionError):
            partite_hole_number(UniformHypergraph(4, 2, []), 1)


class TestOverlappingHole:
    def test_sdr_crossing_needs_distinct_reps(self):
        # a 3-edge cannot cross ({x}, {x}): only one distinct vertex available
        assert sdr_crosses((0, 1, 2), [{0}, {1}])
        assert not sdr_crosses((0, 1, 2), [{0}, {0}])
        assert sdr_crosses((0, 1, 2), [{0, 1}, {0}])

    def test_chain_floor_law_on_path_with_isolate(self):
        # path 0-2 plus isolated 1: alpha = 2 and alpha-hat_2 = 2; under
        # touch-style crossing alpha-hat_2 would drop to 1 and break
        # floor(alpha/k) <= floor(alpha-hat_k/k)
        g = UniformHypergraph(3, 2, [(0, 2)])
        assert independence_number(g)[0] == 2
        a_hat, sets = overlapping_hole_number(g, 2)
        assert a_hat == 2
        assert len(sets) == 2

    def test_at_least_disjoint_hole(self):
        rng = random.Random(19)
        for _ in range(8):
            n = rng.randint(2, 8)
            g = _rand_uniform(rng, n, 2, max_edges=2 * n)
            a, _ = partite_hole_number(g, 2)
            a_hat, _ = overlapping_hole_number(g, 2)
            assert a_hat >= a

    @pytest.mark.parametrize("seed", range(8))
    def test_against_brute(self, seed):
        rng = random.Random(100 + seed)
        k = rng.choice([2, 3])
        n = rng.randint(k, 8)
        g = _rand_uniform(rng, n, k, max_edges=2 * n)
        a, _ = overlapping_hole_number(g, 2)
        assert a == overlapping_hole_brute(g, 2)[0]


class TestCrossFree:
    def test_two_disjoint_stars(self):
        edges = [((0, 2 + i), 1) for i in range(4)] + [((1, 6 + i), 1) for i in range(4)]
        h = PartiteMultiHypergraph(2, [2, 8], edges)
        val, fam = cross_free_number(h, 2)
        assert val == 4
        fam.verify(h, min_size=4)

    def test_star_has_no_cross_free_pair(self):
        h = PartiteMultiHypergraph(2, [1, 5], [((0, 1 + i), 1) for i in range(5)])
        val, _ = cross_free_number(h, 2)
        assert val == 0      # vertex 0 is covered by every family

    def test_at_most_caps_the_search(self):
        edges = [((0, 2 + i), 1) for i in range(4)] + [((1, 6 + i), 1) for i in range(4)]
        h = PartiteMultiHypergraph(2, [2, 8], edges)
        val, fam = cross_free_number(h, 2, at_most=2)
        assert val == 2
        fam.verify(h, min_size=2)

    def test_at_most_does_not_overshoot_true_value(self):
        h = PartiteMultiHypergraph(2, [1, 5], [((0, 1 + i), 1) for i in range(5)])
        assert cross_free_number(h, 2, at_most=3)[0] == 0

    @pytest.mark.parametrize("seed", range(10))
    def test_against_brute(self, seed):
        rng = random.Random(300 + seed)
        r = rng.choice([2, 3])
        h = _rand_partite(rng, r, 4, 10)
        s = rng.choice([2, 3])
        if s * 1 > h.num_copies:
            return
        val, fam = cross_free_number(h, s)
        assert val == cross_free_brute(h, s)[0]
        if val > 0:
            fam.verify(h, min_size=val)

    def test_three_families(self):
        # three parallel bundles, one per part-1 vertex
        edges = [((i, 3 + 3 * i + j), 1) for i in range(3) for j in range(3)]
        h = PartiteMultiHypergraph(2, [3, 9], edges)
        val, fam = cross_free_number(h, 3)
        assert val == cross_free_brute(h, 3)[0] == 3
        fam.verify(h, min_size=3)


class TestExpansion:
    def test_complete_graph_expands(self):
        g = UniformHypergraph.complete(6, 2)
        ok, _ = is_expander(g, 0, 5)
        assert ok   # every single vertex sees the other 5

    def test_sparse_graph_fails_expansion(self):
        g = UniformHypergraph(5, 2, [(0, 1)])
        ok, violation = is_expander(g, 0, 2)
        assert not ok
        sets, nbhd = violation
        assert len(nbhd) < 2

    def test_repeated_singletons_block_k3_expansion(self):
        # with distinct-representative crossing, two copies of {x} have an
        # empty neighbourhood in a 3-uniform host; the full-host example
        # "(0, n)-expander" only holds for k = 2
        g = UniformHypergraph.complete(5, 3)
        ok, violation = is_expander(g, 0, 1)
        assert not ok
        sets, nbhd = violation
        assert sets[0] == sets[1] and nbhd == ()

    def test_outer_expander_disjointness(self):
        g = UniformHypergraph.complete(6, 3)
        ok, _ = is_outer_expander(g, 0, 6)
        assert ok   # |N - union| + |union| covers everything in K_6^3
