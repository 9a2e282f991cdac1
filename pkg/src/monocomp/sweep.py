"""Parameter sweeps with deterministic CSV output.

A sweep spec is a JSON-friendly dict:

    {"generator": "binomial", "k": 2,
     "params": {"n": 40, "d": [4, 8, 16, 32]},
     "seeds": [0, 1, 2],
     "analyses": ["alpha", "first_moment"]}

List-valued entries of ``params`` are crossed in key order to form the cell
grid; a spec may instead carry ``"grid": [cell, cell, ...]`` with explicit
parameter dicts.  Every cell is a pure function of (generator, cell params,
seed): generators draw randomness only from counter-based streams keyed by
the seed, so reruns are bit-identical.  Wall time is always measured into
the records but emitted only when ``timing=True``, keeping the default CSV
stable under reruns.

Cells run on a thread pool; results are assembled in grid order regardless
of completion order.  A cell that exhausts its solver budget or fails its
generator precondition becomes a failed row, never an aborted sweep.
"""

import csv
import io
import json
import statistics
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .constructions import (
    affine_plane_coloring,
    bose_sts,
    construct_grid,
    construct_layered,
    first_moment_alpha_bound,
    sample_binomial_hypergraph,
)
from .core import canonicalize
from .duality import dual_of_coloring
from .errors import BudgetExceeded, PreconditionError
from .holes import partite_hole_number
from .witness import (
    CrossFreeWitness,
    DegreeWitness,
    MultiplicityWitness,
    ThresholdTable,
    degree_witness,
)

CSV_COLUMNS = (
    "generator",
    "params",
    "seed",
    "n",
    "k",
    "r",
    "alpha",
    "alpha_exact",
    "first_moment",
    "mc_bound",
    "driver_outcome",
    "status",
)

_DEFAULT_ANALYSES = {
    "binomial": ("alpha", "first_moment"),
    "bose_sts": ("alpha", "mc_bound"),
    "grid": ("alpha",),
    "layered": ("alpha",),
    "affine": ("alpha",),
}


@dataclass
class ExperimentRecord:
    """One sweep cell: instance parameters and computed quantities.

    `alpha_exact` flags whether `alpha` came from the exact solver (it
    always does here; a False value would mark a bound-only fallback).
    `wall_time_ms` varies run to run and is excluded from stable output.
    """

    generator: str
    params: dict
    seed: object
    n: object = ""
    k: object = ""
    r: object = ""
    alpha: object = ""
    alpha_exact: object = ""
    first_moment: object = ""
    mc_bound: object = ""
    driver_outcome: str = ""
    status: str = "ok"
    wall_time_ms: float = 0.0

    def row(self, timing=False):
        vals = [
            self.generator,
            json.dumps(self.params, sort_keys=True, separators=(",", ":")),
            self.seed,
            self.n,
            self.k,
            self.r,
            self.alpha,
            self.alpha_exact,
            self.first_moment,
            self.mc_bound,
            self.driver_outcome,
            self.status,
        ]
        if timing:
            vals.append(f"{self.wall_time_ms:.3f}")
        return [str(v) for v in vals]


def _expand_grid(spec):
    if "grid" in spec:
        return [dict(cell) for cell in spec["grid"]]
    params = spec.get("params", {})
    cells = [{}]
    for key, val in params.items():
        choices = val if isinstance(val, (list, tuple)) else [val]
        cells = [dict(c, **{key: choice}) for c in cells for choice in choices]
    return cells


def _make_instance(generator, cell, k, seed):
    """Returns (instance, coloring or None, k, effective params)."""
    eff = dict(cell)
    if generator == "binomial":
        n = cell["n"]
        if k is None:
            raise PreconditionError("binomial sweep needs top-level k")
        if "p" in cell:
            p = cell["p"]
        else:
            p = cell["d"] / (n ** (k - 1))
        eff["p"] = p
        return sample_binomial_hypergraph(n, k, p, seed), None, k, eff
    if generator == "bose_sts":
        return bose_sts(cell["n"]), None, 3 if k is None else k, eff
    if generator == "grid":
        rep = construct_grid(cell["s"], cell["t"], cell["n"])
        return rep.instance, rep.coloring, 2 if k is None else k, eff
    if generator == "layered":
        rep = construct_layered(cell["r"], cell["a"], cell["n"])
        return rep.instance, rep.coloring, cell["r"] if k is None else k, eff
    if generator == "affine":
        rep = affine_plane_coloring(cell["q"], cell["n"])
        return rep.instance, rep.coloring, 2 if k is None else k, eff
    raise PreconditionError(f"unknown sweep generator {generator!r}")


def _driver_outcome(instance, coloring, s, nu_hat):
    chi = canonicalize(instance, coloring)
    r = chi.r
    if ThresholdTable.case_name(s, r) is None:
        return "uncovered-case"
    if not ThresholdTable.threshold_holds(s, r, instance.n, nu_hat):
        return "threshold-reject"
    dual = dual_of_coloring(instance, chi).dual
    w = degree_witness(dual, s, nu_hat)
    if isinstance(w, DegreeWitness):
        return f"degree:{w.degree}"
    if isinstance(w, MultiplicityWitness):
        return f"multiplicity:{w.multiplicity}"
    if isinstance(w, CrossFreeWitness):
        return f"crossfree:{w.refutes_s}"
    return type(w).__name__


def _run_cell(generator, cell, k, seed, analyses):
    rec = ExperimentRecord(generator=generator, params=cell, seed=seed)
    t0 = time.perf_counter()
    try:
        instance, coloring, k, eff = _make_instance(generator, cell, k, seed)
        rec.n, rec.k = instance.n, k
        rec.r = coloring.r if coloring is not None else ""
        if "alpha" in analyses or "mc_bound" in analyses or "driver" in analyses:
            rec.alpha, _ = partite_hole_number(instance, k)
            rec.alpha_exact = True
        if "first_moment" in analyses and generator == "binomial":
            rec.first_moment = first_moment_alpha_bound(rec.n, k, eff["p"])
        if "mc_bound" in analyses:
            rec.mc_bound = rec.n - 2 * rec.alpha
        if "driver" in analyses and coloring is not None:
            rec.driver_outcome = _driver_outcome(instance, coloring, k, rec.alpha)
    except BudgetExceeded:
        rec.status = "budget"
    except PreconditionError as exc:
        rec.status = f"rejected: {exc}"
    rec.wall_time_ms = (time.perf_counter() - t0) * 1000.0
    return rec


def _median_value(values):
    vals = [v for v in values if isinstance(v, (int, float))]
    if not vals:
        return ""
    med = statistics.median(vals)
    return int(med) if float(med).is_integer() else med


def run_sweep(spec, timing=False, workers=None):
    """Execute a sweep spec; returns (records, csv_text).

    Data rows appear in grid x seed order, followed by one median row per
    grid cell (seed column `median`) aggregating that cell across seeds.
    """
    generator = spec["generator"]
    k = spec.get("k")
    seeds = list(spec.get("seeds", [0]))
    cells = _expand_grid(spec)
    analyses = tuple(spec.get("analyses", _DEFAULT_ANALYSES.get(generator, ("alpha",))))

    jobs = [(cell, seed) for cell in cells for seed in seeds]
    records = []
    if jobs:
        with ThreadPoolExecutor(max_workers=workers or min(8, len(jobs))) as pool:
            futures = [pool.submit(_run_cell, generator, cell, k, seed, analyses)
                       for cell, seed in jobs]
            records = [f.result() for f in futures]

    medians = []
    for i, cell in enumerate(cells):
        group = records[i * len(seeds):(i + 1) * len(seeds)]
        med = ExperimentRecord(generator=generator, params=cell, seed="median")
        med.n = _median_value([r.n for r in group])
        med.k = group[0].k if group else ""
        med.r = group[0].r if group else ""
        med.alpha = _median_value([r.alpha for r in group])
        med.first_moment = _median_value([r.first_moment for r in group])
        med.mc_bound = _median_value([r.mc_bound for r in group])
        med.status = "ok" if all(r.status == "ok" for r in group) else "partial"
        medians.append(med)

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = list(CSV_COLUMNS) + (["wall_time_ms"] if timing else [])
    writer.writerow(header)
    for rec in records + medians:
        writer.writerow(rec.row(timing=timing))
    return records + medians, buf.getvalue()
