"""Uniform hypergraphs, edge colorings, and exact monochromatic components.

A coloring assigns every edge a nonempty *set* of colors (multi-colorings are
first-class; a singleton coloring is the usual kind).  The component
structure of color c is the connected-component partition of the 2-shadow of
the edges carrying c, with uncovered vertices as singletons.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from . import _backend
from .errors import PreconditionError

MC_DEFAULT_BUDGET = 100_000_000


@dataclass(frozen=True)
class UniformHypergraph:
    """k-uniform hypergraph on vertices 0..n-1 with a sorted, duplicate-free
    edge list.  Instances are value objects: normalize on construction, never
    mutate."""

    n: int
    k: int
    edges: tuple

    def __init__(self, n, k, edges):
        if k < 2:
            raise PreconditionError(f"uniformity k must be >= 2, got {k}")
        if n < 0:
            raise PreconditionError(f"vertex count must be >= 0, got {n}")
        normalized = []
        for e in edges:
            t = tuple(sorted(e))
            if len(t) != k or len(set(t)) != k:
                raise PreconditionError(f"edge {e!r} is not a {k}-set")
            if t[0] < 0 or t[-1] >= n:
                raise PreconditionError(f"edge {e!r} out of range for n={n}")
            normalized.append(t)
        normalized.sort()
        for a, b in zip(normalized, normalized[1:]):
            if a == b:
                raise PreconditionError(f"duplicate edge {a!r}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "edges", tuple(normalized))

    @classmethod
    def complete(cls, n, k):
        return cls(n, k, combinations(range(n), k))

    @property
    def num_edges(self):
        return len(self.edges)

    @cached_property
    def edge_masks(self):
        """Per-edge vertex bitmask (usable while n <= machine-friendly sizes)."""
        masks = []
        for e in self.edges:
            m = 0
            for v in e:
                m |= 1 << v
            masks.append(m)
        return tuple(masks)

    @cached_property
    def incidence(self):
        """Tuple mapping vertex -> tuple of incident edge indices."""
        inc = [[] for _ in range(self.n)]
        for i, e in enumerate(self.edges):
            for v in e:
                inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    def to_dict(self):
        return {"n": self.n, "k": self.k, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_dict(cls, d):
        try:
            return cls(int(d["n"]), int(d["k"]), d["edges"])
        except KeyError as exc:
            raise PreconditionError(f"instance object missing field {exc}") from exc


@dataclass(frozen=True)
class EdgeColoring:
    """Assignment of a nonempty subset of range(r) to each edge, aligned by
    index with the owning hypergraph's edge list."""

    r: int
    colors: tuple

    def __init__(self, r, colors):
        if r < 1:
            raise PreconditionError(f"number of colors must be >= 1, got {r}")
        normalized = []
        for cs in colors:
            f = frozenset(int(c) for c in (cs if not isinstance(cs, int) else (cs,)))
            if not f:
                raise PreconditionError("every edge needs at least one color")
            if min(f) < 0 or max(f) >= r:
                raise PreconditionError(f"color set {sorted(f)} out of range for r={r}")
            normalized.append(f)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "colors", tuple(normalized))

    @classmethod
    def from_labels(cls, r, labels):
        return cls(r, [(c,) for c in labels])

    @property
    def is_singleton(self):
        return all(len(cs) == 1 for cs in self.colors)

    def labels(self):
        """Per-edge single labels; requires a singleton coloring."""
        if not self.is_singleton:
            raise PreconditionError("coloring is not singleton; canonicalize first")
        return tuple(min(cs) for cs in self.colors)

    def to_dict(self):
        return {"r": self.r, "colors": [sorted(cs) for cs in self.colors]}

    @classmethod
    def from_dict(cls, d):
        try:
            return cls(int(d["r"]), d["colors"])
        except KeyError as exc:
            raise PreconditionError(f"coloring object missing field {exc}") from exc


def check_coloring(graph, coloring):
    if len(coloring.colors) != graph.num_edges:
        raise PreconditionError(
            f"coloring covers {len(coloring.colors)} edges, instance has {graph.num_edges}"
        )


def canonicalize(graph, coloring):
    """Singleton coloring keeping the lowest color of each edge."""
    check_coloring(graph, coloring)
    return EdgeColoring(coloring.r, [(min(cs),) for cs in coloring.colors])


def two_shadow(graph, edge_filter=None):
    """Graph on V(graph) whose edges are all pairs inside a (selected) edge."""
    if edge_filter is None:
        chosen = graph.edges
    else:
        m = graph.num_edges
        idxs = sorted(set(edge_filter))
        if idxs and (idxs[0] < 0 or idxs[-1] >= m):
            raise PreconditionError(f"edge filter index out of range 0..{m - 1}")
        chosen = [graph.edges[i] for i in idxs]
    pairs = set()
    for e in chosen:
        pairs.update(combinations(e, 2))
    return UniformHypergraph(graph.n, 2, pairs)


@dataclass(frozen=True)
class ComponentLabeling:
    """Per-color component partitions.  components[c] is a tuple of vertex
    tuples, each sorted, listed in order of smallest contained vertex, with
    singletons included."""

    n: int
    r: int
    components: tuple

    def sizes(self, color):
        return tuple(len(c) for c in self.components[color])

    def largest(self, color):
        """(size, vertices) of the largest component of this color; ties go to
        the lexicographically smallest vertex tuple."""
        best = ()
        for comp in self.components[color]:
            if len(comp) > len(best) or (len(comp) == len(best) and comp < best):
                best = comp
        return len(best), best

    def component_of(self, color, vertex):
        for comp in self.components[color]:
            if vertex in comp:
                return comp
        raise PreconditionError(f"vertex {vertex} not in range")


class _DSU:
    __slots__ = ("parent", "size")

    def __init__(self, n):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, v):
        p = self.parent
        while p[v] != v:
            p[v] = p[p[v]]
            v = p[v]
        return v

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]


def color_components(graph, coloring):
    """ComponentLabeling of every color class (singleton vertices included)."""
    check_coloring(graph, coloring)
    per_color = []
    for c in range(coloring.r):
        dsu = _DSU(graph.n)
        for i, e in enumerate(graph.edges):
            if c in coloring.colors[i]:
                first = e[0]
                for v in e[1:]:
                    dsu.union(first, v)
        groups = {}
        for v in range(graph.n):
            groups.setdefault(dsu.find(v), []).append(v)
        comps = sorted((tuple(g) for g in groups.values()), key=lambda t: t[0])
        per_color.append(tuple(comps))
    return ComponentLabeling(graph.n, coloring.r, tuple(per_color))


def largest_mono_component(graph, coloring):
    """(color, size, vertices) of the overall largest monochromatic component.

    Ties break to the lowest color index, then the lexicographically smallest
    vertex tuple."""
    labeling = color_components(graph, coloring)
    best_color, best_size, best_verts = 0, 0, ()
    for c in range(coloring.r):
        size, verts = labeling.largest(c)
        if size > best_size:
            best_color, best_size, best_verts = c, size, verts
    return best_color, best_size, best_verts


def mc_exact(graph, r, budget=MC_DEFAULT_BUDGET):
    """Largest t such that every singleton r-coloring of the edges leaves a
    monochromatic component of order >= t.

    Exhaustive minimum over colorings enumerated up to color-permutation
    symmetry; raises BudgetExceeded when more than ``budget`` complete
    colorings would be visited.
    """
    if r < 1:
        raise PreconditionError(f"r must be >= 1, got {r}")
    if graph.n == 0:
        return 0
    value, _visited = _backend.mc_min_max(graph.n, graph.edges, r, budget)
    return value
