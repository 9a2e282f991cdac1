"""Two-way translation between edge-colored uniform hypergraphs and
r-partite r-uniform multi-hypergraphs.

Forward: each color class of a singleton coloring splits the vertices into
monochromatic components (singletons included); the dual has one part per
color, one part-vertex per component, and one edge copy per original vertex,
threading the r components that vertex lies in.  A part-vertex's degree is
then exactly its component's size, so the dual's max degree is the largest
monochromatic component order.

Backward: vertices are the edge copies; any k copies that agree on their
part-i vertex form an edge of color i (a k-set may earn several colors).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import (
    EdgeColoring,
    UniformHypergraph,
    color_components,
    largest_mono_component,
)
from .errors import PreconditionError
from .partite import PartiteMultiHypergraph


@dataclass(frozen=True)
class DualCorrespondence:
    """Bookkeeping tying a colored hypergraph to its partite dual."""

    graph: UniformHypergraph
    coloring: EdgeColoring
    dual: PartiteMultiHypergraph
    vertex_to_copy: tuple  # G-vertex -> dual edge copy id
    part_vertex_to_component: tuple  # global part-vertex -> (color, comp index)
    components: object  # the ComponentLabeling the parts were read from

    def copy_to_vertices(self, copy_id):
        """All G-vertices whose dual edge is this copy's underlying edge.

        Distinct vertices in exactly the same component of every color are
        interchangeable copies of one multi-edge; they come back sorted.
        """
        target = self.dual.copy_verts(copy_id)
        verts = [
            v
            for v, c in enumerate(self.vertex_to_copy)
            if self.dual.copy_verts(c) == target
        ]
        return tuple(sorted(verts))


def dual_of_coloring(graph, coloring):
    """Build the partite dual of a singleton-colored hypergraph.

    Every vertex of `graph` must lie in exactly one component per color,
    which is what ComponentLabeling provides (isolated vertices count as
    singleton components).
    """
    if not coloring.is_singleton:
        raise PreconditionError(
            "dual_of_coloring needs a singleton coloring; canonicalize first"
        )
    if len(coloring.colors) != graph.num_edges:
        raise PreconditionError("coloring length does not match edge count")
    r = coloring.r
    labeling = color_components(graph, coloring)

    part_sizes = tuple(len(labeling.components[i]) for i in range(r))
    offsets = [0]
    for s in part_sizes:
        offsets.append(offsets[-1] + s)

    # vertex -> its component index within each color
    comp_of = []
    for i in range(r):
        cmap = {}
        for j, comp in enumerate(labeling.components[i]):
            for v in comp:
                cmap[v] = j
        comp_of.append(cmap)

    vert_edges = []
    for v in range(graph.n):
        vert_edges.append(
            tuple(offsets[i] + comp_of[i][v] for i in range(r))
        )

    dual = PartiteMultiHypergraph(
        r,
        part_sizes,
        [(e, 1) for e in vert_edges],
    )

    # copies of an edge are handed to its vertices in ascending vertex order
    next_copy = {e: dual.copy_offsets[i] for i, (e, _) in enumerate(dual.edges)}
    vertex_to_copy = []
    for v in range(graph.n):
        e = vert_edges[v]
        vertex_to_copy.append(next_copy[e])
        next_copy[e] += 1

    pv_to_comp = []
    for i in range(r):
        for j in range(part_sizes[i]):
            pv_to_comp.append((i, j))

    return DualCorrespondence(
        graph=graph,
        coloring=coloring,
        dual=dual,
        vertex_to_copy=tuple(vertex_to_copy),
        part_vertex_to_component=tuple(pv_to_comp),
        components=labeling,
    )


def primal_of_dual(hyper, k):
    """Colored k-uniform hypergraph on the edge copies of `hyper`.

    A k-set of copies is an edge of color i exactly when all k share their
    part-i vertex; the returned coloring is a multi-coloring.
    """
    r = hyper.r
    if not (2 <= k <= r):
        raise PreconditionError(f"need 2 <= k <= {r}, got k={k}")
    n = hyper.num_copies
    if n == 0:
        raise PreconditionError("dual hypergraph has no edge copies")

    # fiber of a part-vertex = the copies through it; any k of them agree
    fibers = {}
    for edge_idx, (verts, _) in enumerate(hyper.edges):
        for u in verts:
            fibers.setdefault(u, []).extend(hyper.copies_of_edge(edge_idx))

    edge_colors = {}
    for u, copies in sorted(fibers.items()):
        if len(copies) < k:
            continue
        color = hyper.part_of(u)
        for combo in combinations(sorted(copies), k):
            edge_colors.setdefault(combo, set()).add(color)

    edges = sorted(edge_colors)
    graph = UniformHypergraph(n, k, edges)
    coloring = EdgeColoring(r, [edge_colors[e] for e in graph.edges])
    return graph, coloring


def dual_max_degree_identity(graph, coloring):
    """(dual max degree, largest mono component size); equal by construction."""
    corr = dual_of_coloring(graph, coloring)
    deg, _ = corr.dual.max_degree()
    _, size, _ = largest_mono_component(graph, coloring)
    return deg, size
