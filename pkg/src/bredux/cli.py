"""Command-line front end.

Exit codes: 0 success, 1 verification found violations, 2 usage/parse/I-O errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import classes, reductions, solvers, transforms
from .errors import BreduxError
from .graph import Graph, WeightedGraph, enumerate_graphs
from .io import read_graph_file, serialize

PROBLEM_ALIASES = {
    "is": "independent-set",
    "vc": "vertex-cover",
    "color": "vertex-coloring",
    "cc": "clique-cover",
    "hp": "hamiltonian-path",
    "hc": "hamiltonian-cycle",
    "bdst": "bounded-degree-spanning-tree",
    "si": "subgraph-isomorphism",
    "tsp": "travelling-salesperson",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("BREDUX_JOBS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bredux", description="Bi-reductions between NP-hard graph problems and their class images.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", help="run an exact solver on a graph file")
    s.add_argument("problem", help="problem name or alias (" + ", ".join(PROBLEM_ALIASES) + ")")
    s.add_argument("graph_file")
    s.add_argument("--k", help="integer parameter, or budget (int or p/q) for tsp")
    s.add_argument("--pattern", help="pattern graph file for subgraph-isomorphism")

    t = sub.add_parser("transform", help="apply L, R, co or K to a graph file")
    t.add_argument("kind", choices=["l", "r", "co", "k"])
    t.add_argument("graph_file")

    r = sub.add_parser("recognize", help="test membership in a class")
    r.add_argument("class_id", choices=[c.value for c in classes.ClassId])
    r.add_argument("graph_file")

    g = sub.add_parser("generate", help="generate a spider or caterpillar")
    g.add_argument("family", choices=["spider", "caterpillar"])
    g.add_argument("params", nargs="+", type=int, help="spider: i j k; caterpillar: hair lengths along the spine")

    def sweep_flags(sp, single: bool):
        if single:
            sp.add_argument("--max-n", type=int, default=None)
        sp.add_argument("--samples", type=int, default=reductions.DEFAULT_SAMPLES)
        sp.add_argument("--seed", type=int, default=reductions.DEFAULT_SEED)
        sp.add_argument("--report", help="write the JSON report here")
        sp.add_argument("--closure-budget", type=int, default=reductions.CLOSURE_BUDGET)
        sp.add_argument("--weighted-closure-budget", type=int, default=reductions.WEIGHTED_CLOSURE_BUDGET)
        sp.add_argument("--timing", action="store_true", help="include elapsed_ms in the JSON (breaks byte-stability)")

    v = sub.add_parser("verify", help="verification sweep for one reduction")
    v.add_argument("reduction", choices=list(reductions.REDUCTIONS))
    sweep_flags(v, single=True)

    va = sub.add_parser("verify-all", help="verification sweeps for all six reductions")
    sweep_flags(va, single=False)
    va.add_argument("--jobs", type=int, default=None, help="worker processes (default: $BREDUX_JOBS or 1)")

    e = sub.add_parser("enumerate", help="list all graphs on n vertices")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--dedup", action="store_true", help="one graph per isomorphism class")
    return p


def _load(path: str):
    try:
        return read_graph_file(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str) -> Graph:
    x = _load(path)
    if not isinstance(x, Graph):
        raise UsageError(f"{path}: expected an unweighted graph")
    return x


def _cmd_solve(args, out) -> int:
    name = PROBLEM_ALIASES.get(args.problem, args.problem)
    if name not in solvers.PROBLEMS:
        raise UsageError(f"unknown problem {args.problem!r}")
    shape = solvers.PROBLEMS[name].shape
    if shape is solvers.WeightedBudget:
        w = _load(args.graph_file)
        if not isinstance(w, WeightedGraph):
            raise UsageError(f"{name} needs a weighted graph file")
        inst = solvers.WeightedBudget(w, Fraction(args.k or "0"))
    else:
        g = _load_graph(args.graph_file)
        if shape is solvers.GraphOnly:
            inst = solvers.GraphOnly(g)
        elif shape is solvers.GraphPair:
            if not args.pattern:
                raise UsageError(f"{name} needs --pattern")
            inst = solvers.GraphPair(g, _load_graph(args.pattern))
        else:
            if args.k is None:
                raise UsageError(f"{name} needs --k")
            try:
                inst = solvers.GraphInt(g, int(args.k))
            except ValueError:
                raise UsageError(f"--k must be a non-negative integer, got {args.k!r}") from None
    res = solvers.solve(name, inst)
    print(f"decision: {str(res.decision).lower()}", file=out)
    print(f"optimum: {'none' if res.optimum is None else res.optimum}", file=out)
    print(f"certificate: {json.dumps(res.certificate)}", file=out)
    return 0


def _cmd_transform(args, out) -> int:
    g = _load_graph(args.graph_file)
    fn = {
        "l": transforms.line_graph,
        "r": transforms.r_expand,
        "co": transforms.complement,
        "k": transforms.k_complete,
    }[args.kind]
    print(serialize(fn(g)), file=out)
    return 0


def _cmd_recognize(args, out) -> int:
    x = _load(args.graph_file)
    print(str(classes.is_member(args.class_id, x)).lower(), file=out)
    return 0


def _cmd_generate(args, out) -> int:
    if args.family == "spider":
        if len(args.params) != 3:
            raise UsageError("spider needs exactly three leg lengths i j k")
        g = classes.gen_spider(classes.SpiderSpec(*args.params))
    else:
        g = classes.gen_caterpillar(classes.CaterpillarSpec(tuple(args.params)))
    print(serialize(g), file=out)
    return 0


def _cmd_enumerate(args, out) -> int:
    graphs = enumerate_graphs(args.n, dedup=args.dedup)
    print("\n\n".join(serialize(g) for g in graphs), file=out)
    return 0


def print_summary(reports, out) -> None:
    head = f"{'reduction':<10} {'exhaustive':>10} {'sampled':>8} {'violations':>10} {'bijective':>9}  closure"
    print(head, file=out)
    for rep in reports:
        closure = " ".join(f"{c.class_id.value}:{len(c.violations)}" for c in rep.closure)
        contain = sum(len(c.failures) for c in rep.containment)
        if contain:
            closure += f" containment-failures:{contain}"
        print(
            f"{rep.reduction:<10} {rep.exhaustive_count:>10} {rep.sampled_count:>8} "
            f"{len(rep.violations):>10} {'yes' if not rep.bijectivity_failures else 'NO':>9}  {closure}",
            file=out,
        )


def emit_report(reports, path: str | None, out, timing: bool = False, as_list: bool = False) -> None:
    """Write sorted-key JSON (byte-stable for a fixed seed unless ``timing``) and a summary table."""
    if path:
        payload = [r.to_dict(timing) for r in reports] if as_list else reports[0].to_dict(timing)
        Path(path).write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    print_summary(reports, out)


def exit_code(reports) -> int:
    return 0 if all(r.ok for r in reports) else 1


def _sweep_kwargs(args) -> dict:
    return dict(
        samples=args.samples,
        closure_budget=args.closure_budget,
        weighted_closure_budget=args.weighted_closure_budget,
    )


def _cmd_verify(args, out) -> int:
    rep = reductions.verify_sweep(args.reduction, max_n=args.max_n, seed=args.seed, **_sweep_kwargs(args))
    emit_report([rep], args.report, out, args.timing)
    return exit_code([rep])


def _cmd_verify_all(args, out) -> int:
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    reps = reductions.verify_all(seed=args.seed, jobs=jobs, **_sweep_kwargs(args))
    emit_report(reps, args.report, out, args.timing, as_list=True)
    return exit_code(reps)


COMMANDS = {
    "solve": _cmd_solve,
    "transform": _cmd_transform,
    "recognize": _cmd_recognize,
    "generate": _cmd_generate,
    "verify": _cmd_verify,
    "verify-all": _cmd_verify_all,
    "enumerate": _cmd_enumerate,
}


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except (BreduxError, OSError) as exc:
        print(f"bredux: error: {exc}", file=sys.stderr)
        return 2


run_command = main

if __name__ == "__main__":
    sys.exit(main())
