"""Certificate-producing degree search in partite multi-hypergraphs.

Every routine here is total in the following sense: given an instance and a
claimed bound ``nu_hat`` on its cross-free number, it either exhibits a vertex
(or edge) meeting the advertised degree/multiplicity bound, or it exhibits a
cross-free family of size nu_hat+1 proving the claim false.  Both outcomes are
plain data and can be re-checked against the instance by the verifiers in this
module; nothing has to be trusted.

The splitting primitives (`split_or_concentrate`, `split_or_concentrate_simple`)
work part by part: they either concentrate every family on a single vertex of
the chosen part or split off subfamilies whose supports in that part are
separated.  The drivers chain them across parts and translate the end states
into witnesses.
"""

from dataclasses import dataclass
from math import comb

from .core import EdgeColoring, UniformHypergraph, color_components
from .duality import dual_of_coloring
from .errors import InternalCheckError, PreconditionError
from .holes import CrossFreeFamily, PartiteHole, cross_free_number
from .partite import PartiteMultiHypergraph


# ---------------------------------------------------------------------------
# threshold table

class ThresholdTable:
    """Exact integer thresholds and degree bounds for the covered cases.

    Each case pairs a precondition on nu_hat (how small the claimed
    cross-free number must be relative to the number of edge copies n) with
    the degree bound the matching driver certifies.  Bounds are stated in
    cross-multiplied form (scale * degree >= rhs) so all comparisons stay in
    integers.
    """

    CASES = ("bipartite", "tripartite", "r-partite", "shadow", "weak")

    @staticmethod
    def case_name(s, r):
        """Return the driver case for (s, r), or None if uncovered."""
        if s == 2 and r == 2:
            return "bipartite"
        if s == 2 and r == 3:
            return "tripartite"
        if s == r and r >= 3:
            return "r-partite"
        if s == r - 1 and r >= 4:
            return "shadow"
        if s == 2 and r >= 4:
            return "weak"
        return None

    @staticmethod
    def threshold_holds(s, r, n, nu_hat):
        """Exact integer precondition check for the (s, r) case."""
        case = ThresholdTable.case_name(s, r)
        if case is None:
            raise PreconditionError(f"no covered case for s={s}, r={r}")
        if case == "bipartite":
            return 6 * nu_hat < n
        if case == "tripartite":
            return 3 ** 9 * nu_hat <= n
        # remaining cases share one threshold
        return 3 ** (comb(r + 1, 2) + r) * nu_hat <= n

    @staticmethod
    def degree_bound(s, r, n, nu_hat):
        """(scale, rhs) with the guarantee scale*degree >= rhs."""
        case = ThresholdTable.case_name(s, r)
        if case is None:
            raise PreconditionError(f"no covered case for s={s}, r={r}")
        if case == "bipartite":
            return 1, n - 2 * nu_hat
        if case == "tripartite":
            return 2, n - 4 * nu_hat
        if case == "r-partite":
            return 1, n - (r - 1) * nu_hat
        if case == "shadow":
            return r, (r - 1) * n - r * comb(r, 2) * nu_hat
        return r, n - nu_hat  # weak


# ---------------------------------------------------------------------------
# witness types

@dataclass(frozen=True)
class DegreeWitness:
    """A vertex whose degree (with multiplicity) meets a stated bound."""

    vertex: int
    degree: int
    edge_indices: tuple
    bound_scale: int
    bound_rhs: int
    case: str

    tag = "Degree"

    def verify(self, hyper):
        d = hyper.degrees[self.vertex]
        if d != self.degree:
            raise_verification(f"claimed degree {self.degree}, actual {d}")
        incident = tuple(hyper.incident_edge_indices(self.vertex))
        if incident != self.edge_indices:
            raise_verification("incident edge list mismatch")
        if self.bound_scale * self.degree < self.bound_rhs:
            raise_verification(
                f"bound violated: {self.bound_scale}*{self.degree} < {self.bound_rhs}")
        return True

    def to_dict(self):
        return {
            "tag": self.tag,
            "vertex": self.vertex,
            "degree": self.degree,
            "edge_indices": list(self.edge_indices),
            "bound_scale": self.bound_scale,
            "bound_rhs": self.bound_rhs,
            "case": self.case,
        }


@dataclass(frozen=True)
class MultiplicityWitness:
    """An edge whose multiplicity is at least min_required."""

    edge_index: int
    verts: tuple
    multiplicity: int
    min_required: int

    tag = "Multiplicity"

    def verify(self, hyper):
        verts, mult = hyper.edges[self.edge_index]
        if verts != self.verts or mult != self.multiplicity:
            raise_verification("edge payload mismatch")
        if self.multiplicity < self.min_required:
            raise_verification(
                f"multiplicity {self.multiplicity} < required {self.min_required}")
        return True

    def to_dict(self):
        return {
            "tag": self.tag,
            "edge_index": self.edge_index,
            "verts": list(self.verts),
            "multiplicity": self.multiplicity,
            "min_required": self.min_required,
        }


@dataclass(frozen=True)
class CrossFreeWitness:
    """Disjoint families of edge copies, no vertex covered by all of them.

    Existence of len(family.families) such families of size min_size refutes
    nu_s <= min_size - 1 for s = that family count.
    """

    family: CrossFreeFamily
    min_size: int

    tag = "CrossFree"

    @property
    def refutes_s(self):
        return len(self.family.families)

    def verify(self, hyper):
        self.family.verify(hyper, min_size=self.min_size)
        return True

    def to_dict(self):
        d = self.family.to_dict()
        d.update({"tag": self.tag, "min_size": self.min_size,
                  "refutes_s": self.refutes_s})
        return d


@dataclass(frozen=True)
class HoleWitness:
    """A partite hole in a colored hypergraph, refuting a claimed bound."""

    hole: PartiteHole
    refuted_bound: int

    tag = "Hole"

    def verify(self, graph):
        self.hole.verify(graph)
        if self.hole.size < self.refuted_bound + 1:
            raise_verification("hole too small for the claimed refutation")
        return True

    def to_dict(self):
        d = self.hole.to_dict()
        d.update({"tag": self.tag, "refuted_bound": self.refuted_bound})
        return d


def raise_verification(message):
    from .errors import VerificationError
    raise VerificationError(message)


# ---------------------------------------------------------------------------
# splitting lemma outcomes

@dataclass(frozen=True)
class DegreeInPart:
    """Concentration outcome: one vertex carries almost all of every family."""

    part: int
    vertex: int
    counts: tuple

    tag = "Degree"

    def verify(self, hyper, families, weights, nu_hat):
        for j, fam in enumerate(families):
            c = sum(1 for cp in fam if hyper.copy_verts(cp)[self.part] == self.vertex)
            if c != self.counts[j]:
                raise_verification(f"family {j}: claimed count {self.counts[j]}, actual {c}")
            if c < len(fam) - weights[j] * nu_hat:
                raise_verification(f"family {j}: concentration bound missed")
        return True


@dataclass(frozen=True)
class PartRestrictedSplit:
    """Split outcome: subfamilies with no common covered vertex in one part."""

    part: int
    families: tuple

    tag = "CrossFree"

    def verify(self, hyper, original_families, weights, nu_hat):
        if len(original_families) == 1:
            # single-family calls split the family against itself
            originals = (original_families[0], original_families[0])
            wts = (weights[0], weights[0])
        else:
            originals = original_families
            wts = weights
        if len(self.families) != len(originals):
            raise_verification("family count changed")
        supports = []
        for j, fam in enumerate(self.families):
            if not set(fam) <= set(originals[j]):
                raise_verification(f"family {j} is not a subfamily")
            if len(fam) < wts[j] * nu_hat + 1:
                raise_verification(f"family {j} too small after split")
            supports.append({hyper.copy_verts(cp)[self.part] for cp in fam})
        common = set.intersection(*supports)
        if common:
            raise_verification(f"part {self.part} vertex {min(common)} covered by all families")
        return True


# ---------------------------------------------------------------------------
# shared helpers

def _part_counts(hyper, family, part):
    cnt = {}
    for cp in family:
        v = hyper.copy_verts(cp)[part]
        cnt[v] = cnt.get(v, 0) + 1
    return cnt


def _best_vertex(cnt):
    # highest count, ties to the lowest vertex id
    best_v, best_c = None, -1
    for v in sorted(cnt):
        if cnt[v] > best_c:
            best_v, best_c = v, cnt[v]
    return best_v, best_c


def _minimal_concentrating_set(cnt, threshold):
    """Vertices accumulating >= threshold, greedy by count then pruned minimal.

    Returns (vertex set, total count) or None when the total mass is short.
    """
    order = sorted(cnt, key=lambda v: (-cnt[v], v))
    chosen, total = [], 0
    for v in order:
        if total >= threshold:
            break
        chosen.append(v)
        total += cnt[v]
    if total < threshold:
        return None
    for v in reversed(chosen):
        if total - cnt[v] >= threshold:
            chosen.remove(v)
            total -= cnt[v]
    return set(chosen), total


def _side_split(hyper, family, part, vset):
    inside, outside = [], []
    for cp in family:
        (inside if hyper.copy_verts(cp)[part] in vset else outside).append(cp)
    return tuple(inside), tuple(outside)


def _check_lemma_args(hyper, part, families, weights, nu_hat):
    if not isinstance(hyper, PartiteMultiHypergraph):
        raise PreconditionError("expected a partite multi-hypergraph")
    if not 0 <= part < hyper.r:
        raise PreconditionError(f"part {part} out of range")
    if len(families) == 0:
        raise PreconditionError("need at least one family")
    if len(weights) != len(families):
        raise PreconditionError("one weight per family required")
    if any(a < 1 for a in weights):
        raise PreconditionError("weights must be positive")
    if nu_hat < 0:
        raise PreconditionError("nu_hat must be nonnegative")
    n = hyper.num_copies
    for fam in families:
        for cp in fam:
            if not 0 <= cp < n:
                raise PreconditionError(f"copy id {cp} out of range")


# ---------------------------------------------------------------------------
# splitting lemmas

def split_or_concentrate(hyper, part, families, weights, nu_hat):
    """Concentrate or split families in one part, asymmetric preconditions.

    Requires |F_1| >= 3*a_1*nu_hat + 1 and |F_j| >= 2*a_j*nu_hat + 1 for the
    rest.  Returns DegreeInPart (a vertex of the part incident with at least
    |F_j| - a_j*nu_hat copies of every family) or PartRestrictedSplit (the
    family tuple with families 1 and some j replaced by subfamilies of sizes
    >= a_1*nu_hat+1 and >= a_j*nu_hat+1, no part vertex covered by all).

    With a single family the split outcome degenerates to two disjoint
    subfamilies of F_1, both of size >= a_1*nu_hat + 1.
    """
    _check_lemma_args(hyper, part, families, weights, nu_hat)
    ell = len(families)
    if len(families[0]) < 3 * weights[0] * nu_hat + 1:
        raise PreconditionError("family 1 below 3*a_1*nu_hat + 1")
    for j in range(1, ell):
        if len(families[j]) < 2 * weights[j] * nu_hat + 1:
            raise PreconditionError(f"family {j + 1} below 2*a_j*nu_hat + 1")

    cnt1 = _part_counts(hyper, families[0], part)
    u, cu = _best_vertex(cnt1)
    if cu >= len(families[0]) - weights[0] * nu_hat:
        # concentration on u; look for a family with enough mass elsewhere
        for j in range(1, ell):
            cj = sum(1 for cp in families[j] if hyper.copy_verts(cp)[part] == u)
            if len(families[j]) - cj >= weights[j] * nu_hat + 1:
                f1 = tuple(cp for cp in families[0]
                           if hyper.copy_verts(cp)[part] == u)
                fj = tuple(cp for cp in families[j]
                           if hyper.copy_verts(cp)[part] != u)
                out = list(families)
                out[0], out[j] = f1, fj
                return PartRestrictedSplit(part, tuple(out))
        counts = tuple(
            sum(1 for cp in fam if hyper.copy_verts(cp)[part] == u)
            for fam in families)
        return DegreeInPart(part, u, counts)

    return _split_case_b(hyper, part, families, weights, nu_hat, cnt1)


def _split_case_b(hyper, part, families, weights, nu_hat, cnt1):
    threshold = weights[0] * nu_hat + 1
    built = _minimal_concentrating_set(cnt1, threshold)
    if built is None:
        raise InternalCheckError(
            "family 1 cannot reach its own split threshold",
            dump=_dump(hyper, nu_hat=nu_hat, part=part))
    vset, inside_total = built
    f1_in, f1_out = _side_split(hyper, families[0], part, vset)
    if len(f1_in) < threshold or len(f1_out) < threshold:
        raise InternalCheckError(
            "minimal split failed the two-sided count bound",
            dump=_dump(hyper, nu_hat=nu_hat, part=part, vset=sorted(vset)))

    if len(families) == 1:
        return PartRestrictedSplit(part, (f1_in, f1_out))

    f2_in, f2_out = _side_split(hyper, families[1], part, vset)
    bar = len(families[1]) - weights[1] * nu_hat
    if len(f2_in) >= bar:
        new1, new2 = f1_out, f2_in
    elif len(f2_out) >= bar:
        new1, new2 = f1_in, f2_out
    else:
        # both sides hold >= a_2*nu_hat + 1 copies of F_2
        new1, new2 = f1_in, f2_out
    out = list(families)
    out[0], out[1] = new1, new2
    return PartRestrictedSplit(part, tuple(out))


def split_or_concentrate_simple(hyper, part, families, weights, nu_hat):
    """Symmetric variant: every family needs >= 3*a_j*nu_hat + 1 copies.

    The split outcome subsets every family (each to >= a_j*nu_hat + 1) with
    no part vertex covered by all of them.
    """
    _check_lemma_args(hyper, part, families, weights, nu_hat)
    ell = len(families)
    for j in range(ell):
        if len(families[j]) < 3 * weights[j] * nu_hat + 1:
            raise PreconditionError(f"family {j + 1} below 3*a_j*nu_hat + 1")

    cnt1 = _part_counts(hyper, families[0], part)
    u, cu = _best_vertex(cnt1)
    if cu >= len(families[0]) - weights[0] * nu_hat:
        counts = [cu]
        bad = None
        for j in range(1, ell):
            cj = sum(1 for cp in families[j] if hyper.copy_verts(cp)[part] == u)
            counts.append(cj)
            if cj < len(families[j]) - weights[j] * nu_hat:
                bad = j
                break
        if bad is None:
            return DegreeInPart(part, u, tuple(counts))
        f1 = tuple(cp for cp in families[0] if hyper.copy_verts(cp)[part] == u)
        fbad = tuple(cp for cp in families[bad]
                     if hyper.copy_verts(cp)[part] != u)
        out = list(families)
        out[0], out[bad] = f1, fbad
        return PartRestrictedSplit(part, tuple(out))

    threshold = weights[0] * nu_hat + 1
    built = _minimal_concentrating_set(cnt1, threshold)
    if built is None:
        raise InternalCheckError(
            "family 1 cannot reach its own split threshold",
            dump=_dump(hyper, nu_hat=nu_hat, part=part))
    vset, _ = built
    f1_in, f1_out = _side_split(hyper, families[0], part, vset)
    if len(f1_in) < threshold or len(f1_out) < threshold:
        raise InternalCheckError(
            "minimal split failed the two-sided count bound",
            dump=_dump(hyper, nu_hat=nu_hat, part=part, vset=sorted(vset)))
    if len(families) == 1:
        return PartRestrictedSplit(part, (f1_in, f1_out))

    majorities = []
    all_inside = True
    for j in range(1, ell):
        fin, fout = _side_split(hyper, families[j], part, vset)
        if len(fin) >= len(fout):
            majorities.append(fin)
        else:
            majorities.append(fout)
            all_inside = False
    f1_new = f1_out if all_inside else f1_in
    out = [f1_new] + majorities
    return PartRestrictedSplit(part, tuple(out))


# ---------------------------------------------------------------------------
# cross-free assembly

def _dump(hyper, **extra):
    parts = [repr(hyper.to_dict())]
    for k, v in extra.items():
        parts.append(f"{k}={v!r}")
    return "\n".join(parts)


def _materialize_disjoint(hyper, pools, size, nu_hat, context, strict=True):
    """Pick pairwise-disjoint size-subsets, one per pool, via matching.

    Any transversal works for the callers: their pool systems already
    guarantee the no-common-cover property for arbitrary subfamilies, so only
    disjointness has to be arranged.  Overlapping pools can make that
    impossible (a lied nu_hat entangles the avoider sets); with strict=False
    the caller gets None back and falls through to its next strategy, while
    strict=True treats the failure as an internal contradiction.
    """
    pools = [tuple(sorted(p)) for p in pools]
    slots = [(t, k) for t in range(len(pools)) for k in range(size)]
    slots.sort(key=lambda tk: (len(pools[tk[0]]), tk[0], tk[1]))
    match = {}  # copy id -> slot

    def augment(slot, visited):
        for cp in pools[slot[0]]:
            if cp in visited:
                continue
            visited.add(cp)
            holder = match.get(cp)
            if holder is None or augment(holder, visited):
                match[cp] = slot
                return True
        return False

    for slot in slots:
        if not augment(slot, set()):
            if strict:
                raise InternalCheckError(
                    f"cannot realize disjoint families of size {size} ({context})",
                    dump=_dump(hyper, nu_hat=nu_hat, pools=pools))
            return None
    fams = [[] for _ in pools]
    for cp, (t, _) in match.items():
        fams[t].append(cp)
    return tuple(tuple(sorted(f)) for f in fams)


def _cross_free(hyper, families, nu_hat, pad_to=None):
    """Wrap families into a verified CrossFreeWitness, padding when possible.

    Padding appends extra disjoint families of unused copies; intersecting
    over more families only shrinks the common cover, so it never breaks the
    certificate.
    """
    fams = [tuple(sorted(f)) for f in families]
    if pad_to is not None and len(fams) < pad_to:
        used = set()
        for f in fams:
            used.update(f)
        avail = [cp for cp in range(hyper.num_copies) if cp not in used]
        need = (pad_to - len(fams)) * (nu_hat + 1)
        if len(avail) >= need:
            for t in range(pad_to - len(fams)):
                fams.append(tuple(avail[t * (nu_hat + 1):(t + 1) * (nu_hat + 1)]))
    witness = CrossFreeWitness(CrossFreeFamily(tuple(fams)), nu_hat + 1)
    try:
        witness.verify(hyper)
    except Exception as exc:
        raise InternalCheckError(
            f"constructed cross-free family failed verification: {exc}",
            dump=_dump(hyper, nu_hat=nu_hat, families=fams))
    return witness


def _degree_witness(hyper, vertex, scale, rhs, case):
    d = hyper.degrees[vertex]
    if scale * d < rhs:
        raise InternalCheckError(
            f"degree bound missed in case {case}: {scale}*{d} < {rhs}",
            dump=_dump(hyper, vertex=vertex))
    return DegreeWitness(vertex, d, tuple(hyper.incident_edge_indices(vertex)),
                         scale, rhs, case)


def _last_resort(hyper, s, scale, rhs, case, nu_hat):
    """Total fallback once the branch analysis dead-ends.

    Scan for a vertex meeting the bound outright, then search exactly for a
    refutation with s, s-1, ..., 2 families of size nu_hat+1.  A two-family
    hit still certifies a lie: the case thresholds keep every nu_t with
    t <= s at or below nu_hat whenever the claimed bound is truthful, so any
    level refutes the claim.  This path is reachable only off the structured
    branches (entangled avoider pools under a lied nu_hat, or degenerate
    instances too small to hold s disjoint families), where instances are
    tiny and the exact search is affordable.  Coming up empty here means the
    case analysis itself is broken, which stays an internal error.
    """
    dmax, vmax = hyper.max_degree()
    if scale * dmax >= rhs:
        return _degree_witness(hyper, vmax, scale, rhs, case)
    for k in range(s, 1, -1):
        if k * (nu_hat + 1) > hyper.num_copies:
            continue
        val, cert = cross_free_number(hyper, families=k, at_most=nu_hat + 1)
        if val >= nu_hat + 1:
            fams = tuple(tuple(f[:nu_hat + 1]) for f in cert.families)
            return _cross_free(hyper, fams, nu_hat, pad_to=s)
    raise InternalCheckError(
        f"no qualifying degree and no refutation in case {case}",
        dump=_dump(hyper, nu_hat=nu_hat, s=s))


# ---------------------------------------------------------------------------
# degree pipeline, stage 1: forced high-degree vertex

def high_degree_vertex(hyper, s, big_delta, nu_hat):
    """A vertex of degree >= big_delta*nu_hat + 1, or a cross-free refutation.

    Precondition: 3^r * big_delta * nu_hat <= n.  The part-1 minimal split is
    walked through parts 2..r: a concentration along the way certifies the
    degree, while a full split cascade leaves a pair of families with no
    commonly covered vertex anywhere, refuting nu_2 <= nu_hat (and
    nu_s <= nu_hat when padding to s families fits).  Instances too lopsided
    to split (one part-1 vertex owning almost everything) fall back to the
    maximum-degree vertex, which then meets the bound outright.
    """
    r, n = hyper.r, hyper.num_copies
    if not 2 <= s <= r:
        raise PreconditionError(f"s={s} outside [2, r]")
    if big_delta < 1:
        raise PreconditionError("big_delta must be positive")
    if nu_hat < 0:
        raise PreconditionError("nu_hat must be nonnegative")
    if n == 0:
        raise PreconditionError("instance has no edge copies")
    if 3 ** r * big_delta * nu_hat > n:
        raise PreconditionError("nu_hat too large for the scan threshold")

    bound = big_delta * nu_hat + 1

    def fallback():
        deg, v = hyper.max_degree()
        if deg < bound:
            raise InternalCheckError(
                "split cascade unavailable below the degree bound",
                dump=_dump(hyper, nu_hat=nu_hat))
        return _degree_witness(hyper, v, 1, bound, "high-degree")

    cnt0 = _part_counts(hyper, tuple(range(n)), 0)
    built = _minimal_concentrating_set(cnt0, 3 ** (r - 1) * big_delta * nu_hat + 1)
    if built is None:
        return fallback()
    vset, total = built
    if n - total < 3 ** (r - 1) * big_delta * nu_hat + 1:
        return fallback()
    f1, f2 = _side_split(hyper, tuple(range(n)), 0, vset)

    for i in range(1, r):
        a = 3 ** (r - 1 - i) * big_delta
        out = split_or_concentrate_simple(hyper, i, (f1, f2), (a, a), nu_hat)
        if isinstance(out, DegreeInPart):
            # the concentration vertex carries >= 2*a*nu_hat+1 >= bound copies
            return _degree_witness(hyper, out.vertex, 1, bound, "high-degree")
        f1, f2 = out.families
    return _cross_free(hyper, (f1, f2), nu_hat, pad_to=s)


# ---------------------------------------------------------------------------
# degree pipeline, stage 2: fat edge or degree

def _grow_transversal(hyper, nu_hat):
    """Greedy partial transversal U with d(U) >= 3^C(r+2-|U|,2)*nu_hat + 1.

    Extends while some vertex of an uncovered part keeps the next threshold;
    the result is extension-maximal, which is all the case analyses use.
    """
    r, n = hyper.r, hyper.num_copies
    deg, v = hyper.max_degree()
    if deg < 3 ** comb(r + 1, 2) * nu_hat + 1:
        raise PreconditionError("maximum degree below the fat-edge threshold")
    u_of = {hyper.part_of(v): v}
    copies = tuple(cp for cp in range(n) if v in hyper.copy_verts(cp))
    while len(u_of) < r:
        need = 3 ** comb(r + 1 - len(u_of), 2) * nu_hat + 1
        counts = {}
        for cp in copies:
            verts = hyper.copy_verts(cp)
            for p in range(r):
                if p not in u_of:
                    key = (p, verts[p])
                    counts[key] = counts.get(key, 0) + 1
        best = None
        for (p, w), c in counts.items():
            if c >= need and (best is None or (-c, p, w) < (-best[1], best[0][0], best[0][1])):
                best = ((p, w), c)
        if best is None:
            break
        (p, w), _ = best
        u_of[p] = w
        copies = tuple(cp for cp in copies if hyper.copy_verts(cp)[p] == w)
    return u_of, copies


def _edge_index_of(hyper, verts):
    verts = tuple(sorted(verts))
    for i, (ev, _) in enumerate(hyper.edges):
        if ev == verts:
            return i
    raise InternalCheckError("transversal is not an edge of the instance",
                             dump=_dump(hyper, verts=verts))


def _multiplicity_witness(hyper, verts, nu_hat):
    i = _edge_index_of(hyper, verts)
    ev, mult = hyper.edges[i]
    if mult < nu_hat + 1:
        raise InternalCheckError("fat edge thinner than promised",
                                 dump=_dump(hyper, verts=verts, nu_hat=nu_hat))
    return MultiplicityWitness(i, ev, mult, nu_hat + 1)


def _avoiders(hyper, vertex):
    return tuple(cp for cp in range(hyper.num_copies)
                 if vertex not in hyper.copy_verts(cp))


def _halves_walk(hyper, u_of, copies, nu_hat):
    """Split the concentrated copies and walk the uncovered parts.

    Ends with subfamilies E1, E2 such that every pair of their copies meets
    exactly in the transversal.  Concentration during the walk would extend
    the transversal, which greedy maximality rules out.
    """
    r = hyper.r
    ell = len(u_of)
    c2 = comb(r + 2 - ell, 2)
    half = len(copies) // 2
    e1, e2 = copies[:half], copies[half:]
    if min(len(e1), len(e2)) < 3 ** (c2 - 1) * nu_hat + 1:
        raise InternalCheckError("concentrated family too small to halve",
                                 dump=_dump(hyper, nu_hat=nu_hat, u_of=u_of))
    free_parts = [p for p in range(r) if p not in u_of]
    for step, p in enumerate(free_parts, start=1):
        a = 3 ** (c2 - 1 - step)
        out = split_or_concentrate_simple(hyper, p, (e1, e2), (a, a), nu_hat)
        if isinstance(out, DegreeInPart):
            raise InternalCheckError(
                "walk concentration would extend a maximal transversal",
                dump=_dump(hyper, nu_hat=nu_hat, part=p, vertex=out.vertex))
        e1, e2 = out.families
    return e1, e2


def fat_edge_or_degree(hyper, s, nu_hat):
    """High-multiplicity edge, case degree bound, or cross-free refutation.

    Precondition: max degree >= 3^C(r+1,2)*nu_hat + 1.  Case degree bounds
    (scale, rhs): s=2 gives (r-1, n-2*nu_hat); s=r gives (1, n-2*nu_hat);
    s=r-1 gives (r, (r-1)*n - 2*r*(r-1)*nu_hat).
    """
    r, n = hyper.r, hyper.num_copies
    if r < 2:
        raise PreconditionError("need at least two parts")
    if s not in (2, r - 1, r):
        raise PreconditionError(f"s={s} not in {{2, r-1, r}}")
    if s == r - 1 and s != 2 and r < 4:
        raise PreconditionError("the s=r-1 case needs r >= 4")
    if nu_hat < 0:
        raise PreconditionError("nu_hat must be nonnegative")
    if n == 0:
        raise PreconditionError("instance has no edge copies")

    u_of, copies = _grow_transversal(hyper, nu_hat)
    ell = len(u_of)
    if ell == r:
        verts = tuple(sorted(u_of.values()))
        return _multiplicity_witness(hyper, verts, nu_hat)
    if nu_hat == 0:
        raise InternalCheckError("transversal stalled with nu_hat=0",
                                 dump=_dump(hyper, u_of=u_of))

    if s == 2:
        return _fat_edge_case_two(hyper, u_of, copies, nu_hat)
    if s == r:
        return _fat_edge_case_full(hyper, u_of, copies, nu_hat)
    return _fat_edge_case_shadow(hyper, u_of, copies, nu_hat)


def _fat_edge_case_two(hyper, u_of, copies, nu_hat):
    r, n = hyper.r, hyper.num_copies
    ell = len(u_of)
    uset = set(u_of.values())
    f = tuple(cp for cp in range(n)
              if not (set(hyper.copy_verts(cp)) & uset))
    if (r - 1) * len(f) <= (r - 1 - ell) * n + 2 * ell * nu_hat:
        best = max(sorted(u_of.values()), key=lambda v: hyper.degrees[v])
        return _degree_witness(hyper, best, r - 1, n - 2 * nu_hat, "fat-edge-s2")

    c2 = comb(r + 2 - ell, 2)
    m = r - ell
    if len(f) < 2 * 3 ** (m - 1) * nu_hat + 1:
        raise InternalCheckError("avoiding family below the walk threshold",
                                 dump=_dump(hyper, nu_hat=nu_hat, u_of=u_of))
    e_fam = copies
    free_parts = [p for p in range(r) if p not in u_of]
    for step, p in enumerate(free_parts, start=1):
        a1 = 3 ** (c2 - step)
        a2 = 3 ** (m - step)
        out = split_or_concentrate(hyper, p, (e_fam, f), (a1, a2), nu_hat)
        if isinstance(out, DegreeInPart):
            raise InternalCheckError(
                "walk concentration would extend a maximal transversal",
                dump=_dump(hyper, nu_hat=nu_hat, part=p, vertex=out.vertex))
        e_fam, f = out.families
    return _cross_free(hyper, (e_fam, f), nu_hat)


def _fat_edge_case_full(hyper, u_of, copies, nu_hat):
    r, n = hyper.r, hyper.num_copies
    ell = len(u_of)
    avoid = {p: _avoiders(hyper, u_of[p]) for p in sorted(u_of)}
    for p in sorted(avoid):
        if len(avoid[p]) <= 2 * nu_hat:
            return _degree_witness(hyper, u_of[p], 1, n - 2 * nu_hat, "fat-edge-full")

    if ell <= r - 2:
        e1, e2 = _halves_walk(hyper, u_of, copies, nu_hat)
        pools = [e1, e2] + [avoid[p] for p in sorted(avoid)]
        fams = _materialize_disjoint(hyper, pools, nu_hat + 1, nu_hat,
                                     "fat-edge case s=r", strict=False)
        if fams is None:
            return _last_resort(hyper, r,
                                *ThresholdTable.degree_bound(r, r, n, nu_hat),
                                "fat-edge-full", nu_hat)
        return _cross_free(hyper, fams, nu_hat, pad_to=r)

    # ell == r - 1: one asymmetric application in the single free part
    free_part = next(p for p in range(r) if p not in u_of)
    fams_in = (copies,) + tuple(avoid[p] for p in sorted(avoid))
    weights = (8,) + (1,) * (r - 1)
    out = split_or_concentrate(hyper, free_part, fams_in, weights, nu_hat)
    if isinstance(out, DegreeInPart):
        verts = tuple(sorted(list(u_of.values()) + [out.vertex]))
        return _multiplicity_witness(hyper, verts, nu_hat)
    fams = _materialize_disjoint(hyper, out.families, nu_hat + 1, nu_hat,
                                 "fat-edge case s=r, full transversal bar one",
                                 strict=False)
    if fams is None:
        return _last_resort(hyper, r,
                            *ThresholdTable.degree_bound(r, r, n, nu_hat),
                            "fat-edge-full", nu_hat)
    return _cross_free(hyper, fams, nu_hat)


def _fat_edge_case_shadow(hyper, u_of, copies, nu_hat):
    r, n = hyper.r, hyper.num_copies
    ell = len(u_of)
    avoid = {p: _avoiders(hyper, u_of[p]) for p in sorted(u_of)}
    for p in sorted(avoid):
        if r * len(avoid[p]) <= n + 2 * r * (r - 1) * nu_hat:
            return _degree_witness(hyper, u_of[p], r,
                                   (r - 1) * n - 2 * r * (r - 1) * nu_hat,
                                   "fat-edge-shadow")

    if ell <= r - 3:
        e1, e2 = _halves_walk(hyper, u_of, copies, nu_hat)
        pools = [e1, e2] + [avoid[p] for p in sorted(avoid)]
        fams = _materialize_disjoint(hyper, pools, nu_hat + 1, nu_hat,
                                     "fat-edge case s=r-1", strict=False)
        if fams is None:
            return _last_resort(hyper, r - 1,
                                *ThresholdTable.degree_bound(r - 1, r, n, nu_hat),
                                "fat-edge-shadow", nu_hat)
        return _cross_free(hyper, fams, nu_hat, pad_to=r - 1)

    if ell == r - 2:
        c2 = comb(4, 2)
        cur = (copies,) + tuple(avoid[p] for p in sorted(avoid))
        free_parts = [p for p in range(r) if p not in u_of]
        for step, p in enumerate(free_parts, start=1):
            a1 = 3 ** (c2 - step)
            aj = 2 if step == 1 else 1
            weights = (a1,) + (aj,) * (r - 2)
            out = split_or_concentrate(hyper, p, cur, weights, nu_hat)
            if isinstance(out, DegreeInPart):
                raise InternalCheckError(
                    "walk concentration would extend a maximal transversal",
                    dump=_dump(hyper, nu_hat=nu_hat, part=p, vertex=out.vertex))
            cur = out.families
        fams = _materialize_disjoint(hyper, cur, nu_hat + 1, nu_hat,
                                     "fat-edge case s=r-1, two free parts",
                                     strict=False)
        if fams is None:
            return _last_resort(hyper, r - 1,
                                *ThresholdTable.degree_bound(r - 1, r, n, nu_hat),
                                "fat-edge-shadow", nu_hat)
        return _cross_free(hyper, fams, nu_hat)

    # ell == r - 1
    free_part = next(p for p in range(r) if p not in u_of)
    parts = sorted(avoid)
    best_pair, best_size = None, 0
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            inter = set(avoid[parts[i]]) & set(avoid[parts[j]])
            if len(inter) > best_size:
                best_pair, best_size = (parts[i], parts[j]), len(inter)
    if best_pair is not None and best_size >= 2 * nu_hat + 1:
        pa, pb = best_pair
        inter = tuple(sorted(set(avoid[pa]) & set(avoid[pb])))
        rest = [avoid[p] for p in parts if p not in (pa, pb)]
        fams_in = (copies,) + tuple(rest) + (inter,)
        weights = (8,) + (1,) * (len(rest) + 1)
        out = split_or_concentrate(hyper, free_part, fams_in, weights, nu_hat)
        if isinstance(out, DegreeInPart):
            verts = tuple(sorted(list(u_of.values()) + [out.vertex]))
            return _multiplicity_witness(hyper, verts, nu_hat)
        fams = _materialize_disjoint(hyper, out.families, nu_hat + 1, nu_hat,
                                     "fat-edge case s=r-1, heavy pair",
                                     strict=False)
        if fams is None:
            return _last_resort(hyper, r - 1,
                                *ThresholdTable.degree_bound(r - 1, r, n, nu_hat),
                                "fat-edge-shadow", nu_hat)
        return _cross_free(hyper, fams, nu_hat)

    starred = []
    for p in parts:
        others = set()
        for q in parts:
            if q != p:
                others.update(avoid[q])
        fam = tuple(cp for cp in avoid[p] if cp not in others)
        if r * len(fam) < n + 2 * r * nu_hat + 1:
            return _last_resort(hyper, r - 1,
                                *ThresholdTable.degree_bound(r - 1, r, n, nu_hat),
                                "fat-edge-shadow", nu_hat)
        starred.append(fam)
    out = split_or_concentrate(hyper, free_part, tuple(starred),
                               (1,) * len(starred), nu_hat)
    if isinstance(out, DegreeInPart):
        return _degree_witness(hyper, out.vertex, r,
                               (r - 1) * n - 2 * r * (r - 1) * nu_hat,
                               "fat-edge-shadow")
    trimmed = tuple(f[:nu_hat + 1] for f in out.families)
    return _cross_free(hyper, trimmed, nu_hat)


# ---------------------------------------------------------------------------
# drivers, one per covered (s, r) case

def _require_driver_input(hyper, r, s, nu_hat):
    if not isinstance(hyper, PartiteMultiHypergraph):
        raise PreconditionError("expected a partite multi-hypergraph")
    if hyper.r != r:
        raise PreconditionError(f"driver needs r={r}, instance has r={hyper.r}")
    if nu_hat < 0:
        raise PreconditionError("nu_hat must be nonnegative")
    n = hyper.num_copies
    if n == 0:
        raise PreconditionError("instance has no edge copies")
    if not ThresholdTable.threshold_holds(s, r, n, nu_hat):
        raise PreconditionError(
            f"threshold fails: nu_hat={nu_hat} too large for n={n}")
    return n


def bipartite_degree_witness(hyper, nu_hat):
    """Degree >= n - 2*nu_hat in a bipartite instance, or a refutation.

    Precondition 6*nu_hat < n.  The returned DegreeWitness always carries the
    bound (1, n - 2*nu_hat); a CrossFreeWitness refutes nu_2 <= nu_hat.
    """
    n = _require_driver_input(hyper, 2, 2, nu_hat)
    scale, rhs = ThresholdTable.degree_bound(2, 2, n, nu_hat)

    mult, ei = hyper.max_multiplicity()
    if mult >= nu_hat + 1:
        u1, u2 = hyper.edges[ei][0]
        e_copies = tuple(hyper.copies_of_edge(ei))
        through1 = tuple(cp for cp in range(n) if u1 in hyper.copy_verts(cp))
        through2 = tuple(cp for cp in range(n) if u2 in hyper.copy_verts(cp))
        outside = tuple(cp for cp in range(n)
                        if cp not in set(through1) and cp not in set(through2))
        if len(outside) >= nu_hat + 1:
            return _cross_free(hyper, (e_copies, outside), nu_hat)
        only1 = tuple(cp for cp in through1 if u2 not in hyper.copy_verts(cp))
        only2 = tuple(cp for cp in through2 if u1 not in hyper.copy_verts(cp))
        if len(only1) >= nu_hat + 1 and len(only2) >= nu_hat + 1:
            return _cross_free(hyper, (only1, only2), nu_hat)
        if len(only2) <= nu_hat:
            return _degree_witness(hyper, u1, scale, rhs, "bipartite")
        return _degree_witness(hyper, u2, scale, rhs, "bipartite")

    # every multiplicity is at most nu_hat
    degs = hyper.degrees
    big1 = [v for v in hyper.part_members(0) if degs[v] >= 2 * nu_hat + 1]
    big2 = [v for v in hyper.part_members(1) if degs[v] >= 2 * nu_hat + 1]
    if big1 and big2:
        u1, u2 = big1[0], big2[0]
        fam1 = tuple(cp for cp in range(n)
                     if u1 in hyper.copy_verts(cp) and u2 not in hyper.copy_verts(cp))
        fam2 = tuple(cp for cp in range(n)
                     if u2 in hyper.copy_verts(cp) and u1 not in hyper.copy_verts(cp))
        if min(len(fam1), len(fam2)) <= nu_hat:
            raise InternalCheckError("pierced stars lost too many copies",
                                     dump=_dump(hyper, nu_hat=nu_hat))
        return _cross_free(hyper, (fam1, fam2), nu_hat)

    cap_part = 1 if not big2 else 0
    other_part = 1 - cap_part
    cnt = _part_counts(hyper, tuple(range(n)), cap_part)
    built = _minimal_concentrating_set(cnt, 2 * nu_hat + 1)
    if built is None:
        raise InternalCheckError("capped side cannot reach 2*nu_hat+1",
                                 dump=_dump(hyper, nu_hat=nu_hat))
    vset, total = built
    if total > 4 * nu_hat:
        raise InternalCheckError("minimal set on the capped side too heavy",
                                 dump=_dump(hyper, nu_hat=nu_hat, vset=sorted(vset)))
    fa, fb = _side_split(hyper, tuple(range(n)), cap_part, vset)
    if len(fb) < 2 * nu_hat + 1:
        raise InternalCheckError("complement side too light",
                                 dump=_dump(hyper, nu_hat=nu_hat))
    f1, f2 = (fa, fb) if len(fa) >= 3 * nu_hat + 1 else (fb, fa)
    if len(f1) < 3 * nu_hat + 1:
        raise InternalCheckError("neither side reaches 3*nu_hat+1",
                                 dump=_dump(hyper, nu_hat=nu_hat))
    out = split_or_concentrate(hyper, other_part, (f1, f2), (1, 1), nu_hat)
    if isinstance(out, DegreeInPart):
        return _degree_witness(hyper, out.vertex, scale, rhs, "bipartite")
    return _cross_free(hyper, out.families, nu_hat)


def _rebadge(hyper, witness, scale, rhs, case):
    # restate a degree witness against the driver-level bound
    return _degree_witness(hyper, witness.vertex, scale, rhs, case)


def tripartite_degree_witness(hyper, nu_hat):
    """2*degree >= n - 4*nu_hat in a tripartite instance, or a refutation."""
    n = _require_driver_input(hyper, 3, 2, nu_hat)
    scale, rhs = ThresholdTable.degree_bound(2, 3, n, nu_hat)

    stage1 = high_degree_vertex(hyper, 2, 3 ** 6, nu_hat)
    if isinstance(stage1, CrossFreeWitness):
        return stage1
    stage2 = fat_edge_or_degree(hyper, 2, nu_hat)
    if isinstance(stage2, CrossFreeWitness):
        return stage2
    if isinstance(stage2, DegreeWitness):
        return _rebadge(hyper, stage2, scale, rhs, "tripartite")

    # a fat edge: push it to a degree bound or a refutation
    u1, u2, u3 = stage2.verts
    dmax, vmax = hyper.max_degree()
    if 2 * dmax >= rhs:
        return _degree_witness(hyper, vmax, scale, rhs, "tripartite")

    e_copies = tuple(hyper.copies_of_edge(stage2.edge_index))
    through = [set(cp for cp in range(n) if u in hyper.copy_verts(cp))
               for u in (u1, u2, u3)]
    union = through[0] | through[1] | through[2]
    outside = tuple(cp for cp in range(n) if cp not in union)
    if len(outside) >= nu_hat + 1:
        return _cross_free(hyper, (e_copies, outside), nu_hat)

    only = [tuple(sorted(through[i] - through[j] - through[k]))
            for i, j, k in ((0, 1, 2), (1, 0, 2), (2, 0, 1))]
    for i, j, k in ((0, 1, 2), (0, 2, 1), (1, 2, 0)):
        pair = tuple(sorted((through[i] & through[j]) - through[k]))
        if len(pair) >= nu_hat + 1 and len(only[k]) >= nu_hat + 1:
            return _cross_free(hyper, (pair, only[k]), nu_hat)
    e1_only, e2_only = only[0], only[1]
    for fam in only:
        if len(fam) < 3 * nu_hat + 1:
            return _last_resort(hyper, 2, scale, rhs, "tripartite", nu_hat)
    if 2 * (len(e1_only) + len(e2_only)) < n + 1:
        return _last_resort(hyper, 2, scale, rhs, "tripartite", nu_hat)
    out = split_or_concentrate_simple(hyper, 2, (e1_only, e2_only), (1, 1), nu_hat)
    if isinstance(out, DegreeInPart):
        return _degree_witness(hyper, out.vertex, scale, rhs, "tripartite")
    return _cross_free(hyper, out.families, nu_hat)


def r_partite_degree_witness(hyper, nu_hat):
    """degree >= n - (r-1)*nu_hat with r disjoint parts, or a refutation."""
    r = hyper.r
    n = _require_driver_input(hyper, r, r, nu_hat)
    if r < 3:
        raise PreconditionError("this driver needs r >= 3")
    scale, rhs = ThresholdTable.degree_bound(r, r, n, nu_hat)

    stage1 = high_degree_vertex(hyper, r, 3 ** comb(r + 1, 2), nu_hat)
    if isinstance(stage1, CrossFreeWitness):
        return stage1
    stage2 = fat_edge_or_degree(hyper, r, nu_hat)
    if isinstance(stage2, CrossFreeWitness):
        return stage2
    if isinstance(stage2, DegreeWitness):
        return _rebadge(hyper, stage2, scale, rhs, "r-partite")

    everts = stage2.verts
    e_copies = tuple(hyper.copies_of_edge(stage2.edge_index))
    avoid = [_avoiders(hyper, u) for u in everts]
    for i in range(r):
        if len(avoid[i]) <= (r - 1) * nu_hat:
            return _degree_witness(hyper, everts[i], scale, rhs, "r-partite")
    for i in range(r):
        for j in range(i + 1, r):
            inter = tuple(sorted(set(avoid[i]) & set(avoid[j])))
            if len(inter) >= nu_hat + 1:
                pools = [e_copies, inter] + [avoid[k] for k in range(r)
                                             if k not in (i, j)]
                fams = _materialize_disjoint(hyper, pools, nu_hat + 1, nu_hat,
                                             "r-partite heavy pair",
                                             strict=False)
                if fams is not None:
                    return _cross_free(hyper, fams, nu_hat)
    # the cyclic differences are pairwise disjoint and miss a transversal
    # vertex in every part by construction, so they work whenever they are
    # large enough, heavy pairs or not
    cyc = []
    for i in range(r):
        keep = {i, (i + 1) % r}
        others = set()
        for j in range(r):
            if j not in keep:
                others.update(avoid[j])
        fam = tuple(cp for cp in avoid[i] if cp not in others)
        if len(fam) < nu_hat + 1:
            cyc = None
            break
        cyc.append(fam[:nu_hat + 1])
    if cyc is not None:
        return _cross_free(hyper, tuple(cyc), nu_hat)
    return _last_resort(hyper, r, scale, rhs, "r-partite", nu_hat)


def shadow_degree_witness(hyper, nu_hat):
    """r*degree >= (r-1)*n - r*C(r,2)*nu_hat, or a refutation (r >= 4)."""
    r = hyper.r
    if r < 4:
        raise PreconditionError("this driver needs r >= 4")
    n = _require_driver_input(hyper, r, r - 1, nu_hat)
    scale, rhs = ThresholdTable.degree_bound(r - 1, r, n, nu_hat)

    stage1 = high_degree_vertex(hyper, r - 1, 3 ** comb(r + 1, 2), nu_hat)
    if isinstance(stage1, CrossFreeWitness):
        return stage1
    stage2 = fat_edge_or_degree(hyper, r - 1, nu_hat)
    if isinstance(stage2, CrossFreeWitness):
        return stage2
    if isinstance(stage2, DegreeWitness):
        return _rebadge(hyper, stage2, scale, rhs, "shadow")

    everts = stage2.verts
    e_copies = tuple(hyper.copies_of_edge(stage2.edge_index))
    avoid = [_avoiders(hyper, u) for u in everts]
    for i in range(r):
        if r * len(avoid[i]) <= n + r * comb(r, 2) * nu_hat:
            return _degree_witness(hyper, everts[i], scale, rhs, "shadow")

    asets = [set(a) for a in avoid]
    for h in range(r):
        for i in range(h + 1, r):
            for j in range(i + 1, r):
                triple = tuple(sorted(asets[h] & asets[i] & asets[j]))
                if len(triple) >= nu_hat + 1:
                    pools = [e_copies, triple] + [avoid[m] for m in range(r)
                                                 if m not in (h, i, j)]
                    fams = _materialize_disjoint(hyper, pools, nu_hat + 1, nu_hat,
                                                 "shadow heavy triple",
                                                 strict=False)
                    if fams is not None:
                        return _cross_free(hyper, fams, nu_hat)
    pair_sets = {}
    for i in range(r):
        for j in range(i + 1, r):
            pair_sets[(i, j)] = asets[i] & asets[j]
    pair_keys = sorted(pair_sets)
    for a in range(len(pair_keys)):
        for b in range(a + 1, len(pair_keys)):
            ka, kb = pair_keys[a], pair_keys[b]
            if set(ka) & set(kb):
                continue
            if len(pair_sets[ka]) >= nu_hat + 1 and len(pair_sets[kb]) >= nu_hat + 1:
                rest = [avoid[m] for m in range(r) if m not in ka + kb]
                pools = [e_copies, tuple(sorted(pair_sets[ka])),
                         tuple(sorted(pair_sets[kb]))] + rest
                fams = _materialize_disjoint(hyper, pools, nu_hat + 1, nu_hat,
                                             "shadow two heavy pairs",
                                             strict=False)
                if fams is not None:
                    return _cross_free(hyper, fams, nu_hat)

    def exclusive(base_sets, others_idx):
        cut = set()
        for m in others_idx:
            cut.update(asets[m])
        keep = set.intersection(*base_sets) if len(base_sets) > 1 else set(base_sets[0])
        return tuple(sorted(keep - cut))

    for h in range(r):
        for i in range(h + 1, r):
            pair_star = exclusive([asets[h], asets[i]],
                                  [m for m in range(r) if m not in (h, i)])
            if len(pair_star) < nu_hat + 1:
                continue
            for j in range(r):
                if j in (h, i):
                    continue
                single_star = exclusive([asets[j]],
                                        [m for m in range(r) if m != j])
                if len(single_star) >= nu_hat + 1:
                    rest = [avoid[m] for m in range(r) if m not in (h, i, j)]
                    pools = [pair_star, single_star] + rest
                    fams = _materialize_disjoint(hyper, pools, nu_hat + 1, nu_hat,
                                                 "shadow exclusive pair + star",
                                                 strict=False)
                    if fams is not None:
                        return _cross_free(hyper, fams, nu_hat)

    # no early refutation fired; the pair structure is now forced (any slack
    # left in the counting below means the claimed nu_hat was a lie, and the
    # last resort recovers a concrete refutation)
    best_pair, best_size = None, -1
    for (i, j) in pair_keys:
        if len(pair_sets[(i, j)]) > best_size:
            best_pair, best_size = (i, j), len(pair_sets[(i, j)])
    if best_size < (r - 1) * nu_hat + 1:
        return _last_resort(hyper, r - 1, scale, rhs, "shadow", nu_hat)
    p, q = best_pair
    sides = []
    for i in range(r):
        if i in (p, q):
            continue
        with_p = len(asets[i] & asets[p])
        with_q = len(asets[i] & asets[q])
        if with_p + with_q < len(avoid[i]) - (r - 2) * nu_hat:
            return _last_resort(hyper, r - 1, scale, rhs, "shadow", nu_hat)
        sides.append((i, with_p >= with_q))
    if len({side for _, side in sides}) != 1:
        return _last_resort(hyper, r - 1, scale, rhs, "shadow", nu_hat)
    toward_p = sides[0][1]
    p_star, q_star = (q, p) if toward_p else (p, q)
    # every i in the rest leans on q_star; p_star is the isolated endpoint
    fams = []
    for i, _ in sides:
        fam = exclusive([asets[i], asets[q_star]],
                        [m for m in range(r) if m not in (i, q_star)])
        if r * len(fam) < n + r * nu_hat + 1:
            return _last_resort(hyper, r - 1, scale, rhs, "shadow", nu_hat)
        fams.append(fam)
    top = exclusive([asets[p_star], asets[q_star]],
                    [m for m in range(r) if m not in (p_star, q_star)])
    if r * len(top) < n + r * nu_hat + 1:
        return _last_resort(hyper, r - 1, scale, rhs, "shadow", nu_hat)
    fams.append(top)
    free_part = hyper.part_of(everts[q_star])
    out = split_or_concentrate(hyper, free_part, tuple(fams),
                               (1,) * len(fams), nu_hat)
    if isinstance(out, DegreeInPart):
        return _degree_witness(hyper, out.vertex, scale, rhs, "shadow")
    trimmed = tuple(f[:nu_hat + 1] for f in out.families)
    return _cross_free(hyper, trimmed, nu_hat)


def weak_degree_witness(hyper, nu_hat):
    """r*degree >= n - nu_hat for r >= 4 with two families, or a refutation."""
    r = hyper.r
    if r < 4:
        raise PreconditionError("this driver needs r >= 4")
    n = _require_driver_input(hyper, r, 2, nu_hat)
    scale, rhs = ThresholdTable.degree_bound(2, r, n, nu_hat)

    stage1 = high_degree_vertex(hyper, 2, 3 ** comb(r + 1, 2), nu_hat)
    if isinstance(stage1, CrossFreeWitness):
        return stage1
    stage2 = fat_edge_or_degree(hyper, 2, nu_hat)
    if isinstance(stage2, CrossFreeWitness):
        return stage2
    if isinstance(stage2, DegreeWitness):
        return _rebadge(hyper, stage2, scale, rhs, "weak")

    everts = stage2.verts
    e_copies = tuple(hyper.copies_of_edge(stage2.edge_index))
    eset = set(everts)
    outside = tuple(cp for cp in range(n)
                    if not (set(hyper.copy_verts(cp)) & eset))
    if len(outside) >= nu_hat + 1:
        return _cross_free(hyper, (e_copies, outside), nu_hat)
    best = max(everts, key=lambda v: (hyper.degrees[v], -v))
    return _degree_witness(hyper, best, scale, rhs, "weak")


_DRIVERS = {
    "bipartite": bipartite_degree_witness,
    "tripartite": tripartite_degree_witness,
    "r-partite": r_partite_degree_witness,
    "shadow": shadow_degree_witness,
    "weak": weak_degree_witness,
}


def degree_witness(hyper, s, nu_hat):
    """Dispatch to the driver covering (s, hyper.r)."""
    case = ThresholdTable.case_name(s, hyper.r)
    if case is None:
        raise PreconditionError(f"no covered case for s={s}, r={hyper.r}")
    return _DRIVERS[case](hyper, nu_hat)


# ---------------------------------------------------------------------------
# primal pipeline

@dataclass(frozen=True)
class MonoComponentResult:
    """Outcome of the colored-component pipeline.

    kind is "component" (color, vertices, size, certificate) when the dual
    driver certified a degree, or "hole" when the claimed bound on the
    partite hole number was refuted by an actual hole.
    """

    kind: str
    color: int
    vertices: tuple
    size: int
    certificate: tuple
    dual_witness: object
    hole: object

    def to_dict(self):
        d = {"kind": self.kind}
        if self.kind == "component":
            d.update({"color": self.color, "vertices": list(self.vertices),
                      "size": self.size,
                      "certificate": {"scale": self.certificate[0],
                                      "rhs": self.certificate[1]}})
        else:
            d["hole"] = self.hole.to_dict()
        d["dual_witness"] = (self.dual_witness.to_dict()
                             if self.dual_witness is not None else None)
        return d


def mono_component_witness(graph, coloring, s, nu_hat):
    """Certified monochromatic component, or a hole refuting nu_hat.

    Requires a singleton edge coloring whose color count r forms a covered
    case with s, the case threshold to hold for nu_hat against n = graph.n,
    and (for the component guarantee) nu_hat >= the partite hole number
    alpha_s of the graph; the caller owns that last claim, and a wrong claim
    is answered with a verified hole instead of a component.
    """
    if not isinstance(graph, UniformHypergraph):
        raise PreconditionError("expected a uniform hypergraph")
    if not isinstance(coloring, EdgeColoring):
        raise PreconditionError("expected an edge coloring")
    if not coloring.is_singleton:
        raise PreconditionError("coloring must assign one color per edge")
    r = coloring.r
    case = ThresholdTable.case_name(s, r)
    if case is None:
        raise PreconditionError(f"no covered case for s={s}, r={r}")
    if not ThresholdTable.threshold_holds(s, r, graph.n, nu_hat):
        raise PreconditionError(
            f"threshold fails: nu_hat={nu_hat} too large for n={graph.n}")

    corr = dual_of_coloring(graph, coloring)
    witness = _DRIVERS[case](corr.dual, nu_hat)

    if isinstance(witness, DegreeWitness):
        color, comp_idx = corr.part_vertex_to_component[witness.vertex]
        comp = corr.components.components[color][comp_idx]
        if len(comp) != witness.degree:
            raise InternalCheckError(
                "dual degree disagrees with the component size",
                dump=_dump(corr.dual, vertex=witness.vertex))
        return MonoComponentResult("component", color, tuple(comp), len(comp),
                                   (witness.bound_scale, witness.bound_rhs),
                                   witness, None)
    if isinstance(witness, CrossFreeWitness):
        copy_owner = {c: v for v, c in enumerate(corr.vertex_to_copy)}
        hole = PartiteHole(tuple(
            tuple(sorted(copy_owner[cp] for cp in fam))[:nu_hat + 1]
            for fam in witness.family.families))
        try:
            hole.verify(graph)
        except Exception as exc:
            raise InternalCheckError(
                f"dual refutation did not map to a hole: {exc}",
                dump=_dump(corr.dual, nu_hat=nu_hat))
        return MonoComponentResult("hole", -1, (), 0, (), witness, hole)
    raise InternalCheckError("driver returned an unexpected witness kind",
                             dump=_dump(corr.dual, nu_hat=nu_hat))
