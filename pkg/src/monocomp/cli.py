"""Command line front end.

Every subcommand reads and writes JSON (``-`` means stdin or stdout) except
``sweep``, which defaults to CSV, and ``verify``, which prints a report.
JSON output is canonical: sorted keys, two-space indent, trailing newline.
Wrapper keys (``instance``, ``dual``, ``coloring``) are unwrapped on input,
so the output of one subcommand can be piped straight into the next.

Exit codes: 0 success, 2 input rejected before any search ran, 3 search
budget exhausted, 4 verification failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path

from .acceptance import verify_suite
from .constructions import (
    affine_plane_coloring,
    bose_sts,
    construct_grid,
    construct_isolated_clique,
    construct_layered,
    construct_layered_dual,
    sample_binomial_hypergraph,
    steiner_pair_cover,
)
from .core import (
    MC_DEFAULT_BUDGET,
    EdgeColoring,
    UniformHypergraph,
    canonicalize,
    color_components,
    mc_exact,
)
from .duality import dual_of_coloring, primal_of_dual
from .errors import (
    BudgetExceeded,
    InternalCheckError,
    PreconditionError,
    VerificationError,
)
from .holes import cross_free_number, overlapping_hole_number, partite_hole_number
from .partite import PartiteMultiHypergraph
from .sweep import run_sweep
from .witness import degree_witness, mono_component_witness

NU_DEFAULT_BUDGET = 10_000_000


# ---------------------------------------------------------------------------
# plumbing

def _read_text(path, what):
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise PreconditionError(f"{what}: cannot read {path}: {exc}") from None


def _write_text(path, text):
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _parse_json(text, what):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise PreconditionError(f"{what}: not valid JSON: {exc}") from None


def _canonical(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _emit(args, obj):
    _write_text(args.outfile, _canonical(obj))


def _instance_from(obj, what):
    """Build a hypergraph from a dict, descending through wrapper keys."""
    if isinstance(obj, dict):
        if "part_sizes" in obj:
            return _build(PartiteMultiHypergraph.from_dict, obj, what)
        if "edges" in obj and "k" in obj:
            return _build(UniformHypergraph.from_dict, obj, what)
        for key in ("instance", "dual", "graph", "hypergraph"):
            if isinstance(obj.get(key), dict):
                return _instance_from(obj[key], what)
    raise PreconditionError(
        f"{what}: expected an instance with n/k/edges or r/part_sizes/edges"
    )


def _build(ctor, obj, what):
    try:
        return ctor(obj)
    except PreconditionError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise PreconditionError(f"{what}: malformed instance: {exc}") from None


def _load_graph(args):
    inst = _instance_from(_parse_json(_read_text(args.infile, "--in"), "--in"), "--in")
    if not isinstance(inst, UniformHypergraph):
        raise PreconditionError("--in: expected a uniform hypergraph, got a partite one")
    return inst


def _load_partite(args):
    inst = _instance_from(_parse_json(_read_text(args.infile, "--in"), "--in"), "--in")
    if not isinstance(inst, PartiteMultiHypergraph):
        raise PreconditionError("--in: expected a partite multi-hypergraph")
    return inst


def _load_coloring(path):
    obj = _parse_json(_read_text(path, "--coloring"), "--coloring")
    if isinstance(obj, dict) and isinstance(obj.get("coloring"), dict):
        obj = obj["coloring"]
    try:
        return EdgeColoring.from_dict(obj)
    except PreconditionError:
        raise
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise PreconditionError(f"--coloring: malformed coloring: {exc}") from None


def _resolve_case(text, r):
    """Map a case spec (2, r-1, or r, with an optional s= prefix) to a number."""
    t = text.strip().lower()
    if t.startswith("s="):
        t = t[2:]
    if t == "r":
        return r
    if t == "r-1":
        return r - 1
    try:
        return int(t)
    except ValueError:
        raise PreconditionError(f"--case must be 2, r-1, or r, got {text!r}") from None


# ---------------------------------------------------------------------------
# subcommands

def cmd_alpha(args):
    graph = _load_graph(args)
    a, hole = partite_hole_number(graph, args.parts)
    parts = graph.k if args.parts is None else args.parts
    _emit(args, {"alpha": a, "parts": parts, "n": graph.n, "hole": hole.to_dict()})
    return 0


def cmd_alpha_hat(args):
    graph = _load_graph(args)
    a, sets = overlapping_hole_number(graph, args.parts)
    parts = graph.k if args.parts is None else args.parts
    _emit(args, {"alpha_hat": a, "parts": parts, "n": graph.n,
                 "sets": [list(s) for s in sets]})
    return 0


def cmd_nu(args):
    hyper = _load_partite(args)
    budget = NU_DEFAULT_BUDGET if args.budget is None else args.budget
    val, fam = cross_free_number(
        hyper, families=args.families, budget=budget, at_most=args.at_most
    )
    out = fam.to_dict()
    out.update({"nu": val, "count": args.families})
    _emit(args, out)
    return 0


def cmd_mc(args):
    graph = _load_graph(args)
    budget = MC_DEFAULT_BUDGET if args.budget is None else args.budget
    val = mc_exact(graph, args.colors, budget=budget)
    _emit(args, {"mc": val, "r": args.colors, "n": graph.n, "k": graph.k})
    return 0


def cmd_dualize(args):
    graph = _load_graph(args)
    coloring = _load_coloring(args.coloring)
    if not coloring.is_singleton:
        coloring = canonicalize(graph, coloring)
    corr = dual_of_coloring(graph, coloring)
    _emit(args, {"dual": corr.dual.to_dict(),
                 "vertex_to_copy": list(corr.vertex_to_copy),
                 "r": coloring.r})
    return 0


def cmd_primalize(args):
    hyper = _load_partite(args)
    k = hyper.r if args.uniformity is None else args.uniformity
    graph, coloring = primal_of_dual(hyper, k)
    _emit(args, {"instance": graph.to_dict(), "coloring": coloring.to_dict()})
    return 0


_CONSTRUCTIONS = {
    "grid": (construct_grid, ("s", "t", "n")),
    "layered": (construct_layered, ("r", "a", "n")),
    "layered-dual": (construct_layered_dual, ("r", "a", "n")),
    "isolated-clique": (construct_isolated_clique, ("n", "a", "k")),
    "affine": (affine_plane_coloring, ("q", "n")),
}


def _require_params(params, keys, name):
    missing = [k for k in keys if k not in params]
    if missing:
        raise PreconditionError(
            f"construct {name} needs params {list(keys)}; missing {missing}"
        )
    extra = sorted(set(params) - set(keys))
    if extra:
        raise PreconditionError(f"construct {name} got unknown params {extra}")
    return [params[k] for k in keys]


def cmd_construct(args):
    params = _parse_json(args.params, "--params")
    if not isinstance(params, dict):
        raise PreconditionError("--params must be a JSON object")
    if args.name == "sts":
        (n,) = _require_params(params, ("n",), "sts")
        graph = bose_sts(n)
        ok, bad = steiner_pair_cover(graph)
        if not ok:
            raise VerificationError(f"pair {bad} is not covered exactly once")
        _emit(args, {
            "name": "sts", "params": {"n": n}, "instance": graph.to_dict(),
            "coloring": None,
            "claims": {"pair_cover": "every vertex pair lies in exactly one edge"},
            "metadata": {"blocks": graph.num_edges}, "verified": True,
        })
        return 0
    if args.name == "binomial":
        params = dict(params)
        seed = params.pop("seed", None)
        if args.seed is not None:
            seed = args.seed
        if seed is None:
            seed = 0
        n, k, p = _require_params(params, ("n", "k", "p"), "binomial")
        graph = sample_binomial_hypergraph(n, k, p, seed)
        _emit(args, {
            "name": "binomial",
            "params": {"n": n, "k": k, "p": p, "seed": seed},
            "instance": graph.to_dict(), "coloring": None, "claims": {},
            "metadata": {"edges": graph.num_edges}, "verified": True,
        })
        return 0
    fn, keys = _CONSTRUCTIONS[args.name]
    report = fn(*_require_params(params, keys, args.name))
    report.verify()
    _emit(args, report.to_dict())
    return 0


def cmd_witness(args):
    hyper = _load_partite(args)
    if args.nu_hat < 0:
        raise PreconditionError(f"--nu-hat must be >= 0, got {args.nu_hat}")
    s = _resolve_case(args.case, hyper.r)
    w = degree_witness(hyper, s, args.nu_hat)
    out = {"tag": w.tag, "payload": w.to_dict()}
    code = 0
    try:
        w.verify(hyper)
        out["verified"] = True
    except VerificationError as exc:
        out["verified"] = False
        print(f"verification failed: {exc}", file=sys.stderr)
        code = 4
    _emit(args, out)
    return code


def cmd_mono_witness(args):
    graph = _load_graph(args)
    coloring = _load_coloring(args.coloring)
    if not coloring.is_singleton:
        coloring = canonicalize(graph, coloring)
    if args.nu_hat < 0:
        raise PreconditionError(f"--nu-hat must be >= 0, got {args.nu_hat}")
    s = _resolve_case(args.case, coloring.r)
    result = mono_component_witness(graph, coloring, s, args.nu_hat)
    out = result.to_dict()
    code = 0
    try:
        if result.kind == "hole":
            result.hole.verify(graph)
        else:
            labeling = color_components(graph, coloring)
            if tuple(result.vertices) not in labeling.components[result.color]:
                raise VerificationError("claimed component is not a component")
        out["verified"] = True
    except VerificationError as exc:
        out["verified"] = False
        print(f"verification failed: {exc}", file=sys.stderr)
        code = 4
    _emit(args, out)
    return code


def cmd_sweep(args):
    spec = _parse_json(_read_text(args.infile, "--in"), "--in")
    if not isinstance(spec, dict) or "generator" not in spec:
        raise PreconditionError("--in: sweep spec must be an object with a generator")
    records, csv_text = run_sweep(spec, timing=args.timing, workers=args.workers)
    if args.format == "csv":
        _write_text(args.outfile, csv_text)
    else:
        rows = []
        for rec in records:
            d = dataclasses.asdict(rec)
            if not args.timing:
                d.pop("wall_time_ms", None)
            rows.append(d)
        _write_text(args.outfile, _canonical(rows))
    return 0


def cmd_verify(args):
    lines = []
    ok = verify_suite(level=args.level, report=lines.append)
    _write_text(args.outfile, "".join(line + "\n" for line in lines))
    return 0 if ok else 4


# ---------------------------------------------------------------------------
# parser

def _build_parser():
    parser = argparse.ArgumentParser(
        prog="monocomp",
        description="Monochromatic components, hole numbers, the partite dual "
                    "translation, certified constructions, and witness search.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, fn, help_text, infile=True):
        p = sub.add_parser(name, help=help_text, description=help_text)
        if infile:
            p.add_argument("--in", dest="infile", default="-", metavar="PATH",
                           help="input JSON path, - for stdin (default)")
        p.add_argument("--out", dest="outfile", default="-", metavar="PATH",
                       help="output path, - for stdout (default)")
        p.set_defaults(func=fn)
        return p

    p = add("alpha", cmd_alpha, "disjoint partite hole number of a uniform hypergraph")
    p.add_argument("--parts", type=int, default=None,
                   help="number of hole sets (default: the edge size)")

    p = add("alpha-hat", cmd_alpha_hat,
            "overlapping hole number (distinct-representative crossing)")
    p.add_argument("--parts", type=int, default=None,
                   help="number of hole sets (default: the edge size)")

    p = add("nu", cmd_nu, "largest common size of cross-free disjoint copy families")
    p.add_argument("--families", type=int, default=2,
                   help="number of families (default 2)")
    p.add_argument("--budget", type=int, default=None,
                   help=f"search node budget (default {NU_DEFAULT_BUDGET})")
    p.add_argument("--at-most", dest="at_most", type=int, default=None,
                   help="stop as soon as families of this size are found")

    p = add("mc", cmd_mc,
            "exact monochromatic component number over all colorings")
    p.add_argument("--colors", type=int, required=True, metavar="R",
                   help="number of colors")
    p.add_argument("--budget", type=int, default=None,
                   help=f"coloring enumeration budget (default {MC_DEFAULT_BUDGET})")

    p = add("dualize", cmd_dualize,
            "partite dual of a colored hypergraph (multi-colorings are "
            "canonicalized to the lowest color first)")
    p.add_argument("--coloring", required=True, metavar="PATH",
                   help="edge coloring JSON path")

    p = add("primalize", cmd_primalize,
            "colored hypergraph on the edge copies of a partite instance")
    p.add_argument("--uniformity", type=int, default=None, metavar="K",
                   help="edge size of the output (default: the part count)")

    p = add("construct", cmd_construct, "build and certify a named construction",
            infile=False)
    p.add_argument("name", choices=sorted(set(_CONSTRUCTIONS) | {"sts", "binomial"}))
    p.add_argument("--params", default="{}", metavar="JSON",
                   help="JSON object of construction parameters")
    p.add_argument("--seed", type=int, default=None,
                   help="sampling seed (binomial only; overrides params)")

    p = add("witness", cmd_witness,
            "degree, multiplicity, or refutation witness for a partite instance")
    p.add_argument("--case", required=True, metavar="S",
                   help="target family count: 2, r-1, or r (s= prefix allowed)")
    p.add_argument("--nu-hat", dest="nu_hat", type=int, required=True,
                   help="claimed bound on the cross-free number")

    p = add("mono-witness", cmd_mono_witness,
            "certified monochromatic component, or a hole refuting the claim "
            "(multi-colorings are canonicalized to the lowest color first)")
    p.add_argument("--coloring", required=True, metavar="PATH",
                   help="edge coloring JSON path")
    p.add_argument("--case", required=True, metavar="S",
                   help="target family count: 2, r-1, or r (s= prefix allowed)")
    p.add_argument("--nu-hat", dest="nu_hat", type=int, required=True,
                   help="claimed bound on the partite hole number")

    p = add("sweep", cmd_sweep, "run an experiment grid from a sweep spec")
    p.add_argument("--format", choices=("csv", "json"), default="csv",
                   help="output format (default csv)")
    p.add_argument("--timing", action="store_true",
                   help="include wall time per cell (not stable run to run)")
    p.add_argument("--workers", type=int, default=None,
                   help="thread pool size (default: min(8, cells))")

    p = add("verify", cmd_verify, "run the acceptance battery", infile=False)
    p.add_argument("--level", choices=("fast", "full"), default="fast",
                   help="volume of the battery (default fast)")

    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return 3
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 4
    except InternalCheckError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
