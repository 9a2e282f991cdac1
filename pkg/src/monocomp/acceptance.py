"""Nine-point acceptance battery behind `monocomp verify` and the test suite.

Each criterion is a standalone check over the public API, reported as one
PASS/FAIL line with its measured values and elapsed time.  `fast` shrinks
corpus volumes for quick runs; `full` runs the stated volumes.  Assertions
are identical at both levels -- only sample counts change.

Criterion 9 is expected to FAIL: the required inequality n - 2*alpha_3 >=
2n/3 + 1 is false for the exact hole numbers of the Bose triple systems at
every pinned n (the underlying component theorem is about mc_3 itself, which
we verify exactly at n = 9, where it is tight).  The check is kept faithful
rather than weakened; see the ledger note in the repository history and the
README for the analysis.
"""

import math
import random
import time
from itertools import combinations

from .constructions import (
    affine_plane_coloring,
    bose_sts,
    construct_grid,
    construct_layered,
    construct_layered_dual,
    steiner_pair_cover,
)
from .core import (
    EdgeColoring,
    UniformHypergraph,
    largest_mono_component,
    mc_exact,
)
from .duality import dual_of_coloring
from .errors import PreconditionError
from .holes import (
    cross_free_brute,
    cross_free_number,
    independence_number,
    is_expander,
    is_outer_expander,
    overlapping_hole_brute,
    overlapping_hole_number,
    partite_hole_brute,
    partite_hole_number,
)
from .partite import PartiteMultiHypergraph
from .sweep import run_sweep
from .witness import (
    CrossFreeWitness,
    DegreeWitness,
    MultiplicityWitness,
    ThresholdTable,
    bipartite_degree_witness,
    degree_witness,
)

_VOLUMES = {
    "fast": {"pairs": 150, "bip": 300, "c3_nmax": 5, "fuzz": 1000,
             "corpus": 60, "seeds": 6, "sts": (9, 15)},
    "full": {"pairs": 500, "bip": 1000, "c3_nmax": 6, "fuzz": 10_000,
             "corpus": 200, "seeds": 20, "sts": (9, 15, 21)},
}

_DRIVER_CONFIGS = (
    ("bipartite", 2, 2),
    ("tripartite", 2, 3),
    ("r-partite", 3, 3),
    ("r-partite", 4, 4),
    ("shadow", 3, 4),
    ("weak", 2, 4),
)


def _rand_uniform(rng, n, k, max_edges=None):
    pool = list(combinations(range(n), k))
    cap = len(pool) if max_edges is None else min(len(pool), max_edges)
    m = rng.randint(1, cap) if cap else 0
    return UniformHypergraph(n, k, rng.sample(pool, m))


def _rand_coloring(rng, r, m):
    return EdgeColoring.from_labels(r, [rng.randrange(r) for _ in range(m)])


def _rand_partite(rng, r, max_part, max_copies, dominate=None):
    sizes = [rng.randint(1, max_part) for _ in range(r)]
    offs = [0]
    for s in sizes:
        offs.append(offs[-1] + s)
    merged = {}
    for _ in range(rng.randint(1, max_copies)):
        e = [offs[i] + rng.randrange(sizes[i]) for i in range(r)]
        if dominate is not None:
            e[dominate] = offs[dominate]
        e = tuple(e)
        merged[e] = merged.get(e, 0) + 1
    return PartiteMultiHypergraph(r, sizes, list(merged.items()))


def _c1_duality(level):
    """Dual max degree = largest component; multiplicity mass = n; nu <= alpha."""
    vol = _VOLUMES[level]["pairs"]
    rng = random.Random(101)
    for t in range(vol):
        k_edge = rng.choice([2, 3])
        n = rng.randint(max(2, k_edge), 12)
        graph = _rand_uniform(rng, n, k_edge, max_edges=3 * n)
        r = rng.choice([2, 3, 4])
        chi = _rand_coloring(rng, r, graph.num_edges)
        corr = dual_of_coloring(graph, chi)
        deg, _ = corr.dual.max_degree()
        _, size, _ = largest_mono_component(graph, chi)
        if deg != size:
            return False, f"pair {t}: dual degree {deg} != component {size}", []
        mass = sum(mult for _, mult in corr.dual.edges)
        if mass != n:
            return False, f"pair {t}: multiplicity mass {mass} != n {n}", []
        arity = rng.choice([2, 3])
        nu, _ = cross_free_number(corr.dual, arity)
        alpha, _ = partite_hole_number(graph, arity)
        if nu > alpha:
            return False, f"pair {t}: nu_{arity} {nu} > alpha_{arity} {alpha}", []
    return True, f"{vol} colored pairs, all three identities held", []


def _c2_bipartite(level):
    """Exact nu_2; under the size gate the degree theorem holds both ways."""
    vol = _VOLUMES[level]["bip"]
    rng = random.Random(202)
    gated = 0
    for t in range(vol):
        H = _rand_partite(rng, 2, 4, 24)
        n = H.num_copies
        nu, _ = cross_free_number(H, 2)
        if not 6 * nu < n:
            continue
        gated += 1
        deg, _ = H.max_degree()
        if deg < n - 2 * nu:
            return False, f"instance {t}: max degree {deg} < {n - 2 * nu}", []
        w = bipartite_degree_witness(H, nu)
        if not isinstance(w, DegreeWitness):
            return False, f"instance {t}: driver returned {type(w).__name__}", []
        w.verify(H)
        if w.degree < n - 2 * nu:
            return False, f"instance {t}: witness degree {w.degree} < {n - 2 * nu}", []
    return True, f"{vol} multigraphs, {gated} under the gate, bound held", []


def _c3_primal_bounds(level):
    """mc_2 <= n - alpha_2 and the coloring lower bound, all small graphs."""
    nmax = _VOLUMES[level]["c3_nmax"]
    graphs = 0
    for n in range(1, nmax + 1):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            G = UniformHypergraph(n, 2, edges)
            graphs += 1
            mc2 = mc_exact(G, 2)
            a2, _ = partite_hole_number(G, 2)
            if mc2 > n - a2:
                return False, f"n={n} mask={mask}: mc_2 {mc2} > {n - a2}", []
            alpha, _ = independence_number(G)
            if mc2 < math.ceil(n / alpha):
                return False, f"n={n} mask={mask}: mc_2 {mc2} below n/alpha", []
            mc3 = mc_exact(G, 3)
            if mc3 < math.ceil(n / (2 * alpha)):
                return False, f"n={n} mask={mask}: mc_3 {mc3} below n/(2 alpha)", []
    return True, f"all {graphs} labeled graphs on n <= {nmax} passed both bounds", []


def _c4_anchors(level):
    """Complete-host exact values."""
    for n in range(1, 7):
        Kn = UniformHypergraph(n, 2, list(combinations(range(n), 2)))
        got = mc_exact(Kn, 2)
        if got != n:
            return False, f"mc_2(K_{n}) = {got} != {n}", []
    for n in (4, 5):
        K3 = UniformHypergraph.complete(n, 3)
        got = mc_exact(K3, 3)
        if got != n:
            return False, f"3-uniform complete host n={n}: mc_3 = {got} != {n}", []
    return True, "complete graphs n <= 6 and 3-uniform hosts n in {4,5} exact", []


def _c5_constructions(level):
    """Certified constructions: grid, layered (+ duals), affine planes."""
    rep = construct_grid(3, 4, 12)
    rep.verify()
    _, size, _ = largest_mono_component(rep.instance, rep.coloring)
    ab, _ = partite_hole_brute(rep.instance, 2)
    if size != 4 or ab != 2:
        return False, f"grid(3,4,12): comp {size}, brute alpha_2 {ab}", []
    for (r, a, n) in [(2, 2, 12), (3, 1, 10), (3, 2, 30)]:
        construct_layered(r, a, n).verify()
        dual = construct_layered_dual(r, a, n)
        degs = set(dual.instance.degrees)
        if degs != {n - 2 * a, 2 * a}:
            return False, f"layered dual ({r},{a},{n}): degree set {sorted(degs)}", []
    for q in (2, 3, 5):
        affine_plane_coloring(q, q * q).verify()
    return True, "grid, three layered pairs, affine q in {2,3,5} all certified", []


def _c6_witness_fuzz(level):
    """Soundness on arbitrary claims; Degree completeness on exact ones."""
    vol = _VOLUMES[level]["fuzz"]
    details = []
    for case, s, r in _DRIVER_CONFIGS:
        rng = random.Random(6000 + 10 * s + r)
        kinds = {}
        # soundness: nu_hat may be a lie; whatever comes back must verify
        for t in range(vol):
            H = _rand_partite(rng, r, 6, 40)
            nu_hat = rng.choice([0, 1])
            if not ThresholdTable.threshold_holds(s, r, H.num_copies, nu_hat):
                continue
            w = degree_witness(H, s, nu_hat)
            w.verify(H)
            kinds[w.tag] = kinds.get(w.tag, 0) + 1
        # completeness: exact nu_hat must land on the degree branch
        for t in range(vol):
            if case == "bipartite":
                H = _rand_partite(rng, 2, 4, 24)
                nu, _ = cross_free_number(H, 2)
            else:
                H = _rand_partite(rng, r, 6, 40, dominate=rng.randrange(r))
                nu = 0
                if t % 50 == 0:
                    got, _ = cross_free_number(H, s)
                    if got != 0:
                        return False, f"{case}: planted instance has nu {got}", details
            if not ThresholdTable.threshold_holds(s, r, H.num_copies, nu):
                continue
            w = degree_witness(H, s, nu)
            if not isinstance(w, (DegreeWitness, MultiplicityWitness)):
                return False, f"{case}: exact nu_hat={nu} gave {w.tag}", details
            w.verify(H)
            scale, rhs = ThresholdTable.degree_bound(s, r, H.num_copies, nu)
            if isinstance(w, DegreeWitness) and scale * w.degree < rhs:
                return False, f"{case}: degree {w.degree} misses {scale}*d >= {rhs}", details
        details.append(f"{case}(s={s},r={r}):{sum(kinds.values())}")
    return True, f"2x{vol} runs per config; " + " ".join(details), []


def _c7_oracles(level):
    """Branch-and-bound equals full enumeration; chain and expander laws."""
    vol = _VOLUMES[level]["corpus"]
    rng = random.Random(707)
    uniform = partite = 0
    for t in range(vol):
        if t % 5 < 3:
            k = rng.choice([2, 3])
            n = rng.randint(max(2, k), 10 if k == 2 else 8)
            G = _rand_uniform(rng, n, k, max_edges=3 * n)
            uniform += 1
            ak, _ = partite_hole_number(G, k)
            if ak != partite_hole_brute(G, k)[0]:
                return False, f"instance {t}: alpha_{k} disagrees with brute", []
            ah, _ = overlapping_hole_number(G, k)
            if ah != overlapping_hole_brute(G, k)[0]:
                return False, f"instance {t}: overlapping alpha_{k} vs brute", []
            alpha, _ = independence_number(G)
            if not (alpha // k <= ah // k <= ak <= ah):
                return False, f"instance {t}: chain broke ({alpha},{ah},{ak})", []
            for p in range(n):
                if is_expander(G, p, n - p)[0] != (ah <= p):
                    return False, f"instance {t}: expander law at p={p}", []
                if is_outer_expander(G, p, n - p)[0] != (ak <= p):
                    return False, f"instance {t}: outer expander law at p={p}", []
        else:
            r = rng.choice([2, 3])
            H = _rand_partite(rng, r, 4, 12)
            partite += 1
            fam = rng.choice([2, r])
            nu, _ = cross_free_number(H, fam)
            if nu != cross_free_brute(H, fam)[0]:
                return False, f"instance {t}: nu_{fam} disagrees with brute", []
    return True, f"{uniform} uniform + {partite} partite instances, oracles agree", []


def _c8_scaling(level):
    """Binomial sweep: median alpha_2 monotone in density; factor-3 band soft."""
    seeds = list(range(_VOLUMES[level]["seeds"]))
    spec = {"generator": "binomial", "k": 2,
            "params": {"n": 40, "d": [4, 8, 16, 32]},
            "seeds": seeds, "analyses": ["alpha", "first_moment"]}
    records, _ = run_sweep(spec)
    medians = [r for r in records if r.seed == "median"]
    alphas = [r.alpha for r in medians]
    if any(not isinstance(a, (int, float)) for a in alphas):
        return False, f"missing medians: {alphas}", []
    if any(alphas[i] < alphas[i + 1] for i in range(len(alphas) - 1)):
        return False, f"median alpha_2 not non-increasing: {alphas}", []
    warns = []
    for rec in medians:
        fm = rec.first_moment
        if not (fm / 3 <= rec.alpha <= 3 * fm):
            warns.append(f"d={rec.params['d']}: alpha {rec.alpha} vs "
                         f"first-moment {fm} outside factor 3")
    return True, f"median alpha_2 by d: {alphas} ({len(seeds)} seeds)", warns


def _c9_steiner(level):
    """Bose systems: pair cover exact; the pinned bound check (see module doc)."""
    rows = []
    ok = True
    for n in _VOLUMES[level]["sts"]:
        S = bose_sts(n)
        covered, bad = steiner_pair_cover(S)
        if not covered:
            return False, f"n={n}: pair {bad} not covered exactly once", []
        a3, _ = partite_hole_number(S, 3)
        bound = n - 2 * a3
        target = 2 * n // 3 + 1
        rows.append(f"n={n}: n-2*alpha_3 = {bound} vs 2n/3+1 = {target}")
        if bound < target:
            ok = False
    return ok, "; ".join(rows), []


CRITERIA = (
    (1, "duality exactness", _c1_duality),
    (2, "bipartite degree theorem", _c2_bipartite),
    (3, "primal component bounds", _c3_primal_bounds),
    (4, "complete-host anchors", _c4_anchors),
    (5, "construction certification", _c5_constructions),
    (6, "witness engine fuzz", _c6_witness_fuzz),
    (7, "hole-number oracles", _c7_oracles),
    (8, "random scaling sweep", _c8_scaling),
    (9, "Steiner anchor", _c9_steiner),
)


def run_criterion(number, level="fast"):
    """Run one criterion; returns (ok, line, warnings)."""
    for num, name, fn in CRITERIA:
        if num == number:
            start = time.perf_counter()
            try:
                ok, detail, warns = fn(level)
            except Exception as exc:  # a crash is a red line, not an abort
                ok, detail, warns = False, f"error: {exc!r}", []
            elapsed = time.perf_counter() - start
            line = (f"criterion {num} ({name}): {'PASS' if ok else 'FAIL'} "
                    f"- {detail} [{elapsed:.1f}s]")
            return ok, line, warns
    raise PreconditionError(f"no criterion {number}")


def verify_suite(level="fast", report=print):
    """Run the battery; prints one line per criterion, returns overall bool."""
    if level not in _VOLUMES:
        raise PreconditionError(f"level must be fast or full, got {level!r}")
    overall = True
    for num, _, _ in CRITERIA:
        ok, line, warns = run_criterion(num, level)
        overall = overall and ok
        report(line)
        for w in warns:
            report(f"  warning: {w}")
    report(f"acceptance: {'PASS' if overall else 'FAIL'} ({level} level)")
    return overall
