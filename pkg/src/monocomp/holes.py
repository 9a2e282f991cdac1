"""Hole-style invariants of uniform hypergraphs and their partite duals.

Four exact quantities, each returned together with an optimal witness:

  independence_number  largest vertex set containing no edge
  partite_hole_number  largest a with k DISJOINT a-sets no edge meets all of
  overlapping_hole_number  same but the a-sets may overlap
  cross_free_number    largest m with k disjoint size-m families of edge
                       copies such that no vertex is covered by all k

plus neighbourhood-expansion checks that are logically equivalent to upper
bounds on the hole numbers.  Everything here is exact search at desk scale;
the *_brute variants re-derive the same values by raw enumeration and exist
so the clever searches can be cross-checked.

A vertex set S "meets" an edge e when S and e intersect.  The expansion
N(S_1,..,S_{k-1}) is the union of all edges meeting every S_i, which for
disjoint S_i coincides with the usual distinct-representative reading.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

from . import _backend
from .core import UniformHypergraph
from .errors import BudgetExceeded, PreconditionError, VerificationError
from .partite import PartiteMultiHypergraph

_MASK_LIMIT = 63  # bitmask kernels index vertices/copies into a machine word


# ---------------------------------------------------------------------------
# witness containers


@dataclass(frozen=True)
class PartiteHole:
    """k disjoint equal-size vertex sets with no edge meeting all of them."""

    sets: tuple

    def __init__(self, sets):
        object.__setattr__(self, "sets", tuple(tuple(sorted(s)) for s in sets))

    @property
    def size(self):
        return len(self.sets[0]) if self.sets else 0

    def verify(self, graph):
        if len(self.sets) < 2:
            raise VerificationError(f"hole needs >= 2 sets, got {len(self.sets)}")
        sizes = {len(s) for s in self.sets}
        if len(sizes) != 1:
            raise VerificationError(f"hole sets have unequal sizes {sorted(sizes)}")
        seen = set()
        for s in self.sets:
            for v in s:
                if not (0 <= v < graph.n):
                    raise VerificationError(f"hole vertex {v} out of range")
                if v in seen:
                    raise VerificationError(f"hole sets overlap at vertex {v}")
                seen.add(v)
        fsets = [frozenset(s) for s in self.sets]
        for e in graph.edges:
            if all(fs.intersection(e) for fs in fsets):
                raise VerificationError(f"edge {e} meets every hole set")

    def to_dict(self):
        return {"sets": [list(s) for s in self.sets]}

    @classmethod
    def from_dict(cls, d):
        return cls(d["sets"])


@dataclass(frozen=True)
class CrossFreeFamily:
    """k disjoint families of edge copies with no commonly covered vertex."""

    families: tuple

    def __init__(self, families):
        object.__setattr__(
            self, "families", tuple(tuple(sorted(f)) for f in families)
        )

    @property
    def size(self):
        return min((len(f) for f in self.families), default=0)

    def verify(self, hyper, min_size=None):
        if len(self.families) < 2:
            raise VerificationError(f"need >= 2 families, got {len(self.families)}")
        if min_size is not None:
            for t, f in enumerate(self.families):
                if len(f) < min_size:
                    raise VerificationError(
                        f"family {t} has {len(f)} copies, needs >= {min_size}"
                    )
        seen = set()
        for t, f in enumerate(self.families):
            for c in f:
                if not (0 <= c < hyper.num_copies):
                    raise VerificationError(f"copy id {c} out of range")
                if c in seen:
                    raise VerificationError(f"families overlap at copy {c}")
                seen.add(c)
        covers = [
            set().union(*(hyper.copy_verts(c) for c in f)) if f else set()
            for f in self.families
        ]
        common = set.intersection(*covers) if covers else set()
        if common:
            raise VerificationError(
                f"vertex {min(common)} is covered by every family"
            )

    def to_dict(self):
        return {"families": [list(f) for f in self.families]}

    @classmethod
    def from_dict(cls, d):
        return cls(d["families"])


# ---------------------------------------------------------------------------
# shared helpers


def shadow_adjacency_masks(graph):
    """Per-vertex bitmask of 2-shadow neighbours.  Needs n <= 63."""
    if graph.n > _MASK_LIMIT:
        raise PreconditionError(f"bitmask path supports n <= {_MASK_LIMIT}, got {graph.n}")
    adj = [0] * graph.n
    for e in graph.edges:
        for u, v in combinations(e, 2):
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return adj


def conflict_masks(hyper):
    """Copy-vs-copy conflict bitmasks: two copies conflict iff they share a
    vertex (copies of the same edge always conflict)."""
    m = hyper.num_copies
    if m > _MASK_LIMIT:
        raise PreconditionError(f"bitmask path supports <= {_MASK_LIMIT} copies, got {m}")
    vert_masks = []
    for verts, mult in hyper.edges:
        vm = 0
        for v in verts:
            vm |= 1 << v
        vert_masks.extend([vm] * mult)
    adj = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            if vert_masks[i] & vert_masks[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def _bits(mask):
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


# ---------------------------------------------------------------------------
# independence number


def independence_number(graph):
    """Largest S with no edge inside S.  Returns (size, sorted vertex tuple)."""
    if graph.n == 0:
        return 0, ()
    if graph.num_edges == 0:
        return graph.n, tuple(range(graph.n))
    if graph.k == 2 and graph.n <= _MASK_LIMIT:
        return _mis_graph(graph)
    return _mis_hyper(graph)


def _mis_graph(graph):
    adj = shadow_adjacency_masks(graph)
    best = [0, 0]

    def rec(cand, cur, cur_size):
        if cur_size + cand.bit_count() <= best[0]:
            return
        if cand == 0:
            best[0] = cur_size
            best[1] = cur
            return
        # branch on the highest-degree candidate; dense graphs collapse fast
        v = max(_bits(cand), key=lambda u: (adj[u] & cand).bit_count())
        bit = 1 << v
        rec(cand & ~bit & ~adj[v], cur | bit, cur_size + 1)
        rec(cand & ~bit, cur, cur_size)

    rec((1 << graph.n) - 1, 0, 0)
    return best[0], tuple(_bits(best[1]))


def _mis_hyper(graph):
    edges = [frozenset(e) for e in graph.edges]
    best = [0, frozenset()]

    def rec(allowed):
        if len(allowed) <= best[0]:
            return
        inside = next((e for e in edges if e <= allowed), None)
        if inside is None:
            best[0] = len(allowed)
            best[1] = allowed
            return
        for v in sorted(inside):
            rec(allowed - {v})

    rec(frozenset(range(graph.n)))
    return best[0], tuple(sorted(best[1]))


def independence_brute(graph):
    if graph.n > 16:
        raise PreconditionError("brute independence oracle is for n <= 16")
    masks = [0] * graph.num_edges
    for i, e in enumerate(graph.edges):
        for v in e:
            masks[i] |= 1 << v
    best, best_mask = 0, 0
    for m in range(1 << graph.n):
        if m.bit_count() > best and not any(em & m == em for em in masks):
            best, best_mask = m.bit_count(), m
    return best, tuple(_bits(best_mask))


# ---------------------------------------------------------------------------
# disjoint partite holes


def partite_hole_number(graph, parts=None):
    """Largest a admitting `parts` disjoint a-sets no edge meets all of.

    Returns (a, PartiteHole).  `parts` defaults to the edge size.
    """
    k = graph.k if parts is None else parts
    if k < 2:
        raise PreconditionError(f"need >= 2 parts, got {k}")
    cap = graph.n // k
    if cap == 0 or graph.num_edges == 0:
        sets = [tuple(range(i * cap, (i + 1) * cap)) for i in range(k)]
        return cap, PartiteHole(sets)
    if k == 2 and graph.n <= _MASK_LIMIT:
        adj = shadow_adjacency_masks(graph)
        a, ma, mb = _backend.best_cross_pair(graph.n, adj)
        return a, PartiteHole([_bits(ma)[:a], _bits(mb)[:a]])
    return _hole_search(graph, k, cap)


def _hole_search(graph, k, cap):
    # feasibility search with classes capped at the target size; vertices are
    # tried in descending shadow-degree order, which tightens the cover prune
    deg = [0] * graph.n
    for e in graph.edges:
        for u, v in combinations(e, 2):
            deg[u] += 1
            deg[v] += 1
    order = sorted(range(graph.n), key=lambda v: (-deg[v], v))
    inc = graph.incidence
    m = graph.num_edges

    def feasible(t):
        if t == 0:
            return [()] * k
        hits = [[0] * k for _ in range(m)]
        sizes = [0] * k
        classes = [[] for _ in range(k)]

        def rec(pos, used):
            need = sum(t - s for s in sizes if s < t)
            if need == 0:
                return True
            if need > graph.n - pos:
                return False
            v = order[pos]
            hi = used if used < k else k - 1
            for lab in range(hi + 1):
                if sizes[lab] >= t:
                    continue
                bad = False
                touched = []
                for ei in inc[v]:
                    h = hits[ei]
                    h[lab] += 1
                    touched.append(ei)
                    if all(h):
                        bad = True
                        break
                if not bad:
                    sizes[lab] += 1
                    classes[lab].append(v)
                    if rec(pos + 1, max(used, lab + 1)):
                        return True
                    classes[lab].pop()
                    sizes[lab] -= 1
                for ei in touched:
                    hits[ei][lab] -= 1
            return rec(pos + 1, used)

        return [tuple(c) for c in classes] if rec(0, 0) else None

    lo, hi = 0, cap
    witness = feasible(0)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        got = feasible(mid)
        if got is not None:
            lo, witness = mid, got
        else:
            hi = mid - 1
    return lo, PartiteHole(witness)


def partite_hole_brute(graph, parts=None):
    k = graph.k if parts is None else parts
    if graph.n > 12:
        raise PreconditionError("brute hole oracle is for n <= 12")
    fsets = [frozenset(e) for e in graph.edges]

    def ok(sets):
        return not any(all(s & e for s in sets) for e in fsets)

    for a in range(graph.n // k, 0, -1):
        for sets in _disjoint_tuples(graph.n, k, a):
            if ok([frozenset(s) for s in sets]):
                return a, PartiteHole(sets)
    return 0, PartiteHole([()] * k)


def _disjoint_tuples(n, k, a):
    # canonical order: each later set has a larger minimum element
    def rec(chosen, taken):
        if len(chosen) == k:
            yield list(chosen)
            return
        lo = min(chosen[-1]) if chosen else -1
        for comb in combinations([v for v in range(n) if v not in taken], a):
            if min(comb) > lo or not chosen:
                yield from rec(chosen + [comb], taken | set(comb))

    yield from rec([], set())


# ---------------------------------------------------------------------------
# overlapping holes


def sdr_crosses(edge, vertex_sets):
    """True if distinct vertices of `edge` can represent every set.

    The crossing notion for overlapping sets: an edge defeats the tuple only
    when it carries a system of distinct representatives, one per set (for
    pairwise disjoint sets this degenerates to touching every set).  Checked
    by augmenting-path matching, sets side saturated.
    """
    match = {}

    def place(i, seen):
        for v in edge:
            if v in seen or v not in vertex_sets[i]:
                continue
            seen.add(v)
            j = match.get(v)
            if j is None or place(j, seen):
                match[v] = i
                return True
        return False

    return all(place(i, set()) for i in range(len(vertex_sets)))


def overlapping_hole_number(graph, parts=None):
    """Like partite_hole_number but the k sets may overlap (even coincide).

    A tuple is defeated only by an edge with distinct representatives in
    every set (`sdr_crosses`); mere touching is not enough once sets share
    vertices.  Returns (a, tuple of k vertex tuples).
    """
    k = graph.k if parts is None else parts
    if k < 2:
        raise PreconditionError(f"need >= 2 parts, got {k}")
    n = graph.n
    if graph.num_edges == 0 or k > graph.k:
        # short edges can never hold k distinct representatives
        sets = tuple(tuple(range(n)) for _ in range(k))
        return n, sets
    emasks = []
    for e in graph.edges:
        m = 0
        for v in e:
            m |= 1 << v
        emasks.append(m)

    def feasible(a):
        if a == 0:
            return tuple(() for _ in range(k))
        combos = [c for c in combinations(range(n), a)]
        cmasks = []
        for c in combos:
            m = 0
            for v in c:
                m |= 1 << v
            cmasks.append(m)
        full = (1 << len(emasks)) - 1
        chosen = []

        # surv tracks edges touching every chosen set: a necessary condition
        # for crossing, so dropping to zero certifies any completion.  The
        # final matching test depends on the whole tuple, which is why there
        # is no (level, start, surv) memo here.
        def rec(level, start, surv):
            if surv == 0:
                fill = combos[start - 1] if level else combos[0]
                return list(chosen) + [fill] * (k - level)
            if level == k:
                csets = [frozenset(c) for c in chosen]
                s = surv
                while s:
                    b = s & -s
                    if sdr_crosses(graph.edges[b.bit_length() - 1], csets):
                        return None
                    s ^= b
                return list(chosen)
            for idx in range(start, len(combos)):
                cm = cmasks[idx]
                nxt = 0
                s = surv
                while s:
                    b = s & -s
                    if emasks[b.bit_length() - 1] & cm:
                        nxt |= b
                    s ^= b
                chosen.append(combos[idx])
                tail = rec(level + 1, idx, nxt)
                chosen.pop()
                if tail is not None:
                    return tail
            return None

        got = rec(0, 0, full)
        return tuple(got) if got is not None else None

    lo, hi = 0, n
    witness = feasible(0)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        got = feasible(mid)
        if got is not None:
            lo, witness = mid, got
        else:
            hi = mid - 1
    return lo, witness


def overlapping_hole_brute(graph, parts=None):
    k = graph.k if parts is None else parts
    # tuples with replacement grow like C(n, n/2)^k; the pair case stays
    # cheap up to n = 10, wider ones do not
    if graph.n > (10 if k == 2 else 8):
        raise PreconditionError(
            f"brute overlapping-hole oracle is for n <= {10 if k == 2 else 8}")
    for a in range(graph.n, 0, -1):
        for sets in combinations_with_replacement(combinations(range(graph.n), a), k):
            fs = [frozenset(s) for s in sets]
            if not any(sdr_crosses(e, fs) for e in graph.edges):
                return a, tuple(sets)
    return 0, tuple(() for _ in range(k))


# ---------------------------------------------------------------------------
# cross-free families of edge copies


def cross_free_number(hyper, families=2, budget=10_000_000, at_most=None):
    """Largest m with `families` disjoint size-m copy families such that no
    vertex is covered by all of them.  Returns (m, CrossFreeFamily).

    `at_most` caps the scan: once families of that size are found the search
    stops, which answers "is the value at least `at_most`" without paying for
    the exact maximum.
    """
    s = families
    if s < 2:
        raise PreconditionError(f"need >= 2 families, got {s}")
    m = hyper.num_copies
    if m < s:
        return 0, CrossFreeFamily([()] * s)
    if s == 2 and at_most is None:
        adj = conflict_masks(hyper)
        val, ma, mb = _backend.best_cross_pair(m, adj, node_budget=budget)
        return val, CrossFreeFamily([_bits(ma)[:val], _bits(mb)[:val]])
    return _cross_free_search(hyper, s, budget, at_most)


def _cross_free_search(hyper, s, budget, at_most=None):
    copies = []
    for verts, mult in hyper.edges:
        copies.extend([verts] * mult)
    m = len(copies)
    nv = hyper.num_vertices
    nodes = [0]

    def feasible(t):
        cnt = [[0] * s for _ in range(nv)]
        sizes = [0] * s
        classes = [[] for _ in range(s)]

        def rec(pos, used):
            nodes[0] += 1
            if nodes[0] > budget:
                raise BudgetExceeded(
                    f"cross-free search visited more than {budget} nodes",
                    visited=nodes[0],
                )
            need = sum(t - z for z in sizes if z < t)
            if need == 0:
                return True
            if need > m - pos:
                return False
            verts = copies[pos]
            hi = used if used < s else s - 1
            for lab in range(hi + 1):
                if sizes[lab] >= t:
                    continue
                bad = False
                touched = 0
                for v in verts:
                    c = cnt[v]
                    c[lab] += 1
                    touched += 1
                    if all(c):
                        bad = True
                        break
                if not bad:
                    sizes[lab] += 1
                    classes[lab].append(pos)
                    if rec(pos + 1, max(used, lab + 1)):
                        return True
                    classes[lab].pop()
                    sizes[lab] -= 1
                for v in verts[:touched]:
                    cnt[v][lab] -= 1
            return rec(pos + 1, used)

        return [tuple(c) for c in classes] if rec(0, 0) else None

    cap = m // s if at_most is None else min(m // s, at_most)
    val, witness = 0, [()] * s
    for t in range(1, cap + 1):
        got = feasible(t)
        if got is None:
            break
        val, witness = t, got
    return val, CrossFreeFamily(witness)


def cross_free_brute(hyper, families=2):
    s = families
    m = hyper.num_copies
    if m > 12:
        raise PreconditionError("brute cross-free oracle is for <= 12 copies")
    covers = [frozenset(hyper.copy_verts(c)) for c in range(m)]

    def rec(chosen, taken, size):
        if len(chosen) == s:
            hit = [set().union(*(covers[c] for c in fam)) for fam in chosen]
            if not set.intersection(*hit):
                return list(chosen)
            return None
        lo = min(chosen[-1]) if chosen else -1
        for fam in combinations([c for c in range(m) if c not in taken], size):
            if not chosen or min(fam) > lo:
                got = rec(chosen + [fam], taken | set(fam), size)
                if got is not None:
                    return got
        return None

    for size in range(m // s, 0, -1):
        got = rec([], set(), size)
        if got is not None:
            return size, CrossFreeFamily(got)
    return 0, CrossFreeFamily([()] * s)


# ---------------------------------------------------------------------------
# expansion checks


def _expansion_neighbourhood(graph, sets):
    """Vertices v with an edge whose other vertices represent every set.

    Representatives must be distinct and are drawn from the edge minus v
    itself (`sdr_crosses` on the punctured edge); for pairwise disjoint sets
    this coincides with the union of edges touching every set."""
    fsets = [frozenset(s) for s in sets]
    out = set()
    for e in graph.edges:
        for v in e:
            if v not in out and sdr_crosses([u for u in e if u != v], fsets):
                out.add(v)
    return out


def is_expander(graph, p, q):
    """Check: every (k-1) sets of size p+1 (overlap allowed) expand to >= q.

    Returns (True, None) or (False, (sets, neighbourhood)).  Exhaustive over
    set tuples, so desk scale only.
    """
    k = graph.k
    if p + 1 > graph.n:
        return True, None
    combos = list(combinations(range(graph.n), p + 1))
    for sets in combinations_with_replacement(combos, k - 1):
        nb = _expansion_neighbourhood(graph, sets)
        if len(nb) < q:
            return False, (sets, tuple(sorted(nb)))
    return True, None


def is_outer_expander(graph, p, q):
    """Check: all disjoint (k-1) sets of size p+1 satisfy
    |N(sets) - union| + |union| >= q.  Returns (True, None) or a violation."""
    k = graph.k
    if (k - 1) * (p + 1) > graph.n:
        return True, None
    combos = list(combinations(range(graph.n), p + 1))
    for sets in combinations_with_replacement(combos, k - 1):
        union = set()
        clash = False
        for s in sets:
            for v in s:
                if v in union:
                    clash = True
                    break
                union.add(v)
            if clash:
                break
        if clash:
            continue
        outer = _expansion_neighbourhood(graph, sets) - union
        if len(outer) + len(union) < q:
            return False, (sets, tuple(sorted(outer)))
    return True, None
