"""r-partite r-uniform multi-hypergraphs with distinguishable edge copies.

Vertices are numbered globally with parts contiguous: part i occupies
[offset_i, offset_i + part_sizes[i]).  Every edge has exactly one vertex in
each part and an integer multiplicity; the copies of an edge are
distinguishable and numbered consecutively in sorted-edge order, so copy ids
run 0..num_copies-1.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from functools import cached_property

from .errors import PreconditionError


@dataclass(frozen=True)
class PartiteMultiHypergraph:
    r: int
    part_sizes: tuple
    edges: tuple  # of (verts tuple, mult); sorted by verts, verts distinct

    def __init__(self, r, part_sizes, edges):
        if r < 2:
            raise PreconditionError(f"number of parts must be >= 2, got {r}")
        sizes = tuple(int(s) for s in part_sizes)
        if len(sizes) != r or any(s < 0 for s in sizes):
            raise PreconditionError(f"need {r} nonnegative part sizes, got {part_sizes!r}")
        offsets = [0]
        for s in sizes:
            offsets.append(offsets[-1] + s)
        merged = {}
        for item in edges:
            if isinstance(item, dict):
                verts, mult = item["verts"], item.get("mult", 1)
            else:
                verts, mult = item
            verts = tuple(sorted(int(v) for v in verts))
            mult = int(mult)
            if mult < 1:
                raise PreconditionError(f"multiplicity must be >= 1, got {mult} for {verts}")
            if len(verts) != r:
                raise PreconditionError(f"edge {verts} needs one vertex per part")
            for i, v in enumerate(verts):
                if not (offsets[i] <= v < offsets[i + 1]):
                    raise PreconditionError(f"edge {verts}: vertex {v} not in part {i}")
            merged[verts] = merged.get(verts, 0) + mult
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "part_sizes", sizes)
        object.__setattr__(self, "edges", tuple(sorted(merged.items())))

    @cached_property
    def part_offsets(self):
        offs = [0]
        for s in self.part_sizes:
            offs.append(offs[-1] + s)
        return tuple(offs)

    @property
    def num_vertices(self):
        return self.part_offsets[-1]

    @cached_property
    def num_copies(self):
        """Edge count with multiplicity; the 'n' of the degree theorems."""
        return sum(m for _, m in self.edges)

    @cached_property
    def copy_offsets(self):
        offs = [0]
        for _, m in self.edges:
            offs.append(offs[-1] + m)
        return tuple(offs)

    def part_of(self, v):
        if not (0 <= v < self.num_vertices):
            raise PreconditionError(f"vertex {v} out of range")
        return bisect_right(self.part_offsets, v) - 1

    def part_members(self, i):
        return range(self.part_offsets[i], self.part_offsets[i + 1])

    def copy_edge_index(self, copy_id):
        if not (0 <= copy_id < self.num_copies):
            raise PreconditionError(f"copy id {copy_id} out of range")
        return bisect_right(self.copy_offsets, copy_id) - 1

    def copy_verts(self, copy_id):
        return self.edges[self.copy_edge_index(copy_id)][0]

    def copies_of_edge(self, edge_index):
        return range(self.copy_offsets[edge_index], self.copy_offsets[edge_index + 1])

    @cached_property
    def degrees(self):
        """Vertex degree counting multiplicity."""
        deg = [0] * self.num_vertices
        for verts, mult in self.edges:
            for v in verts:
                deg[v] += mult
        return tuple(deg)

    def max_degree(self):
        """(degree, vertex); ties go to the lowest vertex id."""
        if self.num_vertices == 0:
            return 0, None
        deg = self.degrees
        best = max(deg)
        return best, deg.index(best)

    def max_multiplicity(self):
        """(multiplicity, edge index); ties go to the lowest edge index."""
        if not self.edges:
            return 0, None
        mults = [m for _, m in self.edges]
        best = max(mults)
        return best, mults.index(best)

    def incident_edge_indices(self, v):
        return tuple(i for i, (verts, _) in enumerate(self.edges) if v in verts)

    def to_dict(self):
        return {
            "r": self.r,
            "part_sizes": list(self.part_sizes),
            "edges": [{"verts": list(vs), "mult": m} for vs, m in self.edges],
        }

    @classmethod
    def from_dict(cls, d):
        try:
            return cls(int(d["r"]), d["part_sizes"], d["edges"])
        except KeyError as exc:
            raise PreconditionError(f"multi-hypergraph object missing field {exc}") from exc
