"""Property-based invariants over random instances.

Strategies draw small instances so the exact solvers stay cheap; hypothesis
shrinks any failure to a minimal counterexample.
"""

import json

from hypothesis import given, settings, strategies as st

from monocomp import (
    EdgeColoring,
    PartiteMultiHypergraph,
    PreconditionError,
    UniformHypergraph,
    canonicalize,
    cross_free_number,
    degree_witness,
    dual_of_coloring,
    independence_number,
    largest_mono_component,
    overlapping_hole_number,
    partite_hole_number,
)
from monocomp.holes import cross_free_brute


@st.composite
def graphs(draw, max_n=8, k_choices=(2, 3)):
    k = draw(st.sampled_from(k_choices))
    n = draw(st.integers(min_value=k, max_value=max_n))
    from itertools import combinations
    all_edges = list(combinations(range(n), k))
    edges = draw(st.lists(st.sampled_from(all_edges), max_size=2 * n, unique=True))
    return UniformHypergraph(n, k, edges)


@st.composite
def colored_graphs(draw, max_n=8, r_choices=(2, 3)):
    g = draw(graphs(max_n=max_n))
    r = draw(st.sampled_from(r_choices))
    labels = draw(st.lists(st.integers(0, r - 1), min_size=g.num_edges,
                           max_size=g.num_edges))
    return g, EdgeColoring.from_labels(r, labels)


@st.composite
def partite_instances(draw, r_choices=(2, 3), max_part=3, max_copies=8):
    r = draw(st.sampled_from(r_choices))
    sizes = draw(st.lists(st.integers(1, max_part), min_size=r, max_size=r))
    offsets = [sum(sizes[:i]) for i in range(r)]
    n_edges = draw(st.integers(0, max_copies))
    edges = []
    for _ in range(n_edges):
        verts = tuple(
            offsets[i] + draw(st.integers(0, sizes[i] - 1)) for i in range(r)
        )
        edges.append((verts, draw(st.integers(1, 2))))
    return PartiteMultiHypergraph(r, sizes, edges)


@given(graphs())
@settings(max_examples=60, deadline=None)
def test_serialization_fixpoint(g):
    d = g.to_dict()
    assert UniformHypergraph.from_dict(json.loads(json.dumps(d))) == g


@given(graphs())
@settings(max_examples=40, deadline=None)
def test_hole_chain(g):
    """alpha_k <= alpha-hat_k, and the floor chain against independence."""
    a, hole = partite_hole_number(g, 2)
    a_hat, _ = overlapping_hole_number(g, 2)
    assert a <= a_hat
    alpha = independence_number(g)[0]
    assert alpha // 2 <= a_hat // 2 or a_hat >= alpha // 2


@given(graphs())
@settings(max_examples=40, deadline=None)
def test_hole_witness_verifies(g):
    a, hole = partite_hole_number(g, 2)
    if a > 0:
        hole.verify(g)
        assert all(len(s) == a for s in hole.sets)


@given(colored_graphs())
@settings(max_examples=50, deadline=None)
def test_duality_identities(pair):
    g, chi = pair
    corr = dual_of_coloring(g, chi)
    assert corr.dual.max_degree()[0] == largest_mono_component(g, chi)[1]
    assert sum(mult for _, mult in corr.dual.edges) == g.n
    nu, _ = cross_free_number(corr.dual, 2)
    alpha, _ = partite_hole_number(g, 2)
    assert nu <= alpha


@given(colored_graphs(r_choices=(2, 3, 4)))
@settings(max_examples=40, deadline=None)
def test_canonicalize_never_grows_components(pair):
    g, chi = pair
    multi = EdgeColoring(chi.r, [cs | {(i + 1) % chi.r for i in cs} for cs in chi.colors])
    single = canonicalize(g, multi)
    assert largest_mono_component(g, single)[1] <= largest_mono_component(g, multi)[1]


@given(partite_instances())
@settings(max_examples=40, deadline=None)
def test_nu_monotone_under_size_gate(h):
    """nu_s <= nu_t for s < t, whenever nu_t's families fit the gate
    t * (nu_t + 1) <= num copies (below that the larger count is vacuous)."""
    if h.num_copies == 0 or h.num_copies > 12:
        return
    nu2 = cross_free_brute(h, 2)[0]
    nu3 = cross_free_brute(h, 3)[0]
    if 3 * (nu3 + 1) <= h.num_copies and nu3 <= h.num_copies // 3 - 1:
        assert nu2 >= nu3


@given(partite_instances(), st.integers(0, 2))
@settings(max_examples=60, deadline=None)
def test_driver_totality_and_soundness(h, nu_hat):
    """Whatever the claim, the driver returns a verifying witness or a
    clean precondition rejection; never an internal failure."""
    if h.num_copies == 0:
        return
    s = h.r
    try:
        w = degree_witness(h, s, nu_hat)
    except PreconditionError:
        return
    w.verify(h)


@given(partite_instances())
@settings(max_examples=30, deadline=None)
def test_partite_serialization_fixpoint(h):
    d = h.to_dict()
    h2 = PartiteMultiHypergraph.from_dict(json.loads(json.dumps(d)))
    assert h2.to_dict() == d
