"""Bi-reductions between the problems, and finite-scale verification sweeps.

A reduction bundles a forward instance map, its inverse, the graph-to-graph
part ``graph_map``, and the (source class, image class) pairs it is claimed
to carry. :func:`verify_sweep` checks answer preservation against the exact
solvers, round-trip bijectivity on the instance space, class-image
containment, and deletion closure of every registered class.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .classes import ClassId, ClosureReport, check_hereditary_closure, generate_members, is_member
from .errors import NotInImageError, ReductionError
from .graph import Graph, WeightedGraph, complete_graph, enumerate_graphs, sample_graph
from .io import serialize
from .solvers import GraphInt, GraphOnly, GraphPair, WeightedBudget, solve
from .transforms import complement, k_complete, k_extract

EXHAUSTIVE_MAX_N = 6
DEFAULT_SAMPLES = 200
DEFAULT_SEED = 42
CLOSURE_BUDGET = 12
WEIGHTED_CLOSURE_BUDGET = 10


class BijectivityError(ReductionError):
    pass


@dataclass(frozen=True)
class Reduction:
    id: str
    source: str
    target: str
    source_shape: type
    target_shape: type
    forward: Callable
    inverse: Callable
    graph_map: Callable[[Graph], Graph | WeightedGraph]
    class_pairs: tuple[tuple[ClassId, ClassId], ...]
    sample_range: tuple[int, int]

    def source_instances(self, g: Graph) -> Iterator:
        """Every well-formed source instance on ``g`` (all k in 0..n for parametrised problems)."""
        if self.source_shape is GraphOnly:
            yield GraphOnly(g)
        else:
            for k in range(g.n + 1):
                yield GraphInt(g, k)

    def random_instance(self, g: Graph, rng: random.Random):
        if self.source_shape is GraphOnly:
            return GraphOnly(g)
        return GraphInt(g, rng.randint(0, g.n))


def _need(inst, shape, rid: str) -> None:
    if not isinstance(inst, shape):
        raise ReductionError(f"{rid}: expected a {shape.__name__} instance, got {type(inst).__name__}")


# -- concrete maps -----------------------------------------------------------

def _is2vc_fwd(w: GraphInt) -> GraphInt:
    if w.k > w.graph.n:
        raise ReductionError(f"is2vc: k={w.k} exceeds |V|={w.graph.n}")
    return GraphInt(w.graph, w.graph.n - w.k)


def _is2vc_inv(y: GraphInt) -> GraphInt:
    if y.k > y.graph.n:
        raise NotInImageError(f"not in reduction image: k={y.k} exceeds |V|={y.graph.n}")
    return GraphInt(y.graph, y.graph.n - y.k)


def _co_k(w: GraphInt) -> GraphInt:
    return GraphInt(complement(w.graph), w.k)


def _clique2si_fwd(w: GraphInt) -> GraphPair:
    return GraphPair(w.graph, complete_graph(w.k))


def _clique2si_inv(y: GraphPair) -> GraphInt:
    h = y.pattern
    if h.m != h.n * (h.n - 1) // 2:
        raise NotInImageError("not in reduction image: pattern is not a complete graph")
    return GraphInt(y.graph, h.n)


def _hc2tsp_fwd(w: GraphOnly) -> WeightedBudget:
    return WeightedBudget(k_complete(w.graph), 0)


def _hc2tsp_inv(y: WeightedBudget) -> GraphOnly:
    if y.k != 0 or not y.weighted.is_binary():
        raise NotInImageError("not in reduction image: need binary weights and budget 0")
    return GraphOnly(k_extract(y.weighted))


def _hp2bdst_fwd(w: GraphOnly) -> GraphInt:
    return GraphInt(w.graph, 2)


def _hp2bdst_inv(y: GraphInt) -> GraphOnly:
    if y.k != 2:
        raise NotInImageError(f"not in reduction image: degree bound must be 2, got {y.k}")
    return GraphOnly(y.graph)


def _identity(g: Graph) -> Graph:
    return g


REDUCTIONS: dict[str, Reduction] = {
    r.id: r
    for r in [
        Reduction("is2vc", "independent-set", "vertex-cover", GraphInt, GraphInt,
                  _is2vc_fwd, _is2vc_inv, _identity, ((ClassId.T, ClassId.T),), (7, 12)),
        Reduction("is2clique", "independent-set", "clique", GraphInt, GraphInt,
                  _co_k, _co_k, complement, ((ClassId.T, ClassId.COT),), (7, 12)),
        Reduction("clique2si", "clique", "subgraph-isomorphism", GraphInt, GraphPair,
                  _clique2si_fwd, _clique2si_inv, _identity, ((ClassId.COT, ClassId.COT),), (7, 10)),
        Reduction("hc2tsp", "hamiltonian-cycle", "travelling-salesperson", GraphOnly, WeightedBudget,
                  _hc2tsp_fwd, _hc2tsp_inv, k_complete,
                  ((ClassId.Q, ClassId.KQ), (ClassId.RQ, ClassId.KRQ)), (7, 10)),
        Reduction("vcol2cc", "vertex-coloring", "clique-cover", GraphInt, GraphInt,
                  _co_k, _co_k, complement, ((ClassId.COLT, ClassId.LT),), (7, 10)),
        Reduction("hp2bdst", "hamiltonian-path", "bounded-degree-spanning-tree", GraphOnly, GraphInt,
                  _hp2bdst_fwd, _hp2bdst_inv, _identity, ((ClassId.Q, ClassId.Q),), (7, 10)),
    ]
}


def get_reduction(r) -> Reduction:
    if isinstance(r, Reduction):
        return r
    try:
        return REDUCTIONS[r]
    except KeyError:
        raise ReductionError(f"unknown reduction {r!r}; choose from {', '.join(REDUCTIONS)}") from None


def apply(r, w):
    r = get_reduction(r)
    _need(w, r.source_shape, r.id)
    return r.forward(w)


def invert(r, y):
    r = get_reduction(r)
    _need(y, r.target_shape, r.id)
    return r.inverse(y)


def verify_instance(r, w) -> bool:
    """True iff the source and target oracles agree on ``w`` and ``apply(w)``.

    Raises :class:`BijectivityError` if the round trips do not return the
    original instances.
    """
    r = get_reduction(r)
    y = apply(r, w)
    if invert(r, y) != w or apply(r, invert(r, y)) != y:
        raise BijectivityError(f"{r.id}: round trip failed on {describe_instance(w)}")
    return solve(r.source, w).decision == solve(r.target, y).decision


def class_image(r, c, g: Graph):
    """Evaluate the graph map on a member of a registered source class."""
    r = get_reduction(r)
    c = ClassId(c)
    targets = [img for src, img in r.class_pairs if src is c]
    if not targets:
        raise ReductionError(f"{r.id} registers no image for class {c.label}")
    if not is_member(c, g):
        raise ReductionError(f"graph is not a member of {c.label}")
    out = r.graph_map(g)
    for img in targets:
        if not is_member(img, out):
            raise ReductionError(f"{r.id}: image is not a member of {img.label}")
    return out


# -- reports -----------------------------------------------------------------

def describe_instance(inst) -> dict:
    if isinstance(inst, GraphOnly):
        return {"graph": serialize(inst.graph)}
    if isinstance(inst, GraphInt):
        return {"graph": serialize(inst.graph), "k": inst.k}
    if isinstance(inst, GraphPair):
        return {"graph": serialize(inst.graph), "pattern": serialize(inst.pattern)}
    if isinstance(inst, WeightedBudget):
        k = inst.k
        return {"weighted": serialize(inst.weighted), "k": str(k) if k.denominator != 1 else k.numerator}
    raise TypeError(type(inst).__name__)


def _sort_key(d: dict) -> str:
    return json.dumps(d, sort_keys=True)


@dataclass
class ContainmentResult:
    source: ClassId
    image: ClassId
    budget: int
    checked: int = 0
    failures: list[str] = field(default_factory=list)


@dataclass
class VerificationReport:
    reduction: str
    seed: int
    exhaustive_count: int = 0
    sampled_count: int = 0
    violations: list[dict] = field(default_factory=list)
    bijectivity_failures: list[dict] = field(default_factory=list)
    closure: list[ClosureReport] = field(default_factory=list)
    containment: list[ContainmentResult] = field(default_factory=list)
    elapsed_ms: int | None = None

    @property
    def answer_ok(self) -> bool:
        return not self.violations and not self.bijectivity_failures

    @property
    def ok(self) -> bool:
        return (
            self.answer_ok
            and all(c.ok for c in self.closure)
            and all(not c.failures for c in self.containment)
        )

    def to_dict(self, timing: bool = False, max_witnesses: int = 10) -> dict:
        return {
            "reduction": self.reduction,
            "exhaustive_count": self.exhaustive_count,
            "sampled_count": self.sampled_count,
            "violations": sorted(self.violations, key=_sort_key),
            "bijectivity_failures": sorted(self.bijectivity_failures, key=_sort_key),
            "closure": [
                {
                    "class": c.class_id.value,
                    "budget": c.budget,
                    "members": c.members,
                    "checks": c.checks,
                    "violations": len(c.violations),
                    "witnesses": [v.to_dict() for v in c.violations[:max_witnesses]],
                }
                for c in self.closure
            ],
            "containment": [
                {
                    "source": c.source.value,
                    "image": c.image.value,
                    "budget": c.budget,
                    "checked": c.checked,
                    "failures": len(c.failures),
                }
                for c in self.containment
            ],
            "seed": self.seed,
            "elapsed_ms": self.elapsed_ms if timing else None,
        }


def _closure_budget(c: ClassId, budget: int, weighted_budget: int) -> int:
    return weighted_budget if c.weighted else budget


def _record(report: VerificationReport, r: Reduction, w) -> None:
    y = r.forward(w)
    back = r.inverse(y)
    if back != w or r.forward(back) != y:
        report.bijectivity_failures.append(describe_instance(w))
    src = solve(r.source, w).decision
    tgt = solve(r.target, y).decision
    if src != tgt:
        report.violations.append(
            {"instance": describe_instance(w), "source_decision": src, "target_decision": tgt}
        )


def verify_sweep(
    r,
    max_n: int | None = None,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    closure_budget: int = CLOSURE_BUDGET,
    weighted_closure_budget: int = WEIGHTED_CLOSURE_BUDGET,
) -> VerificationReport:
    """Exhaustive + sampled answer-preservation sweep plus class checks.

    Exhaustive part: every dedup graph with 1..min(6, max_n) vertices and
    every parameter value. Sampled part: ``samples`` seeded G(n, p) graphs with
    n drawn from the reduction's sample range clipped to ``max_n``.
    """
    r = get_reduction(r)
    lo, hi = r.sample_range
    if max_n is None:
        max_n = hi
    start = time.perf_counter()
    report = VerificationReport(r.id, seed)

    for n in range(1, min(EXHAUSTIVE_MAX_N, max_n) + 1):
        for g in enumerate_graphs(n, dedup=True):
            for w in r.source_instances(g):
                report.exhaustive_count += 1
                _record(report, r, w)

    hi = min(hi, max_n)
    lo = min(lo, hi)
    if hi >= 1:
        rng = random.Random(seed)
        for _ in range(samples):
            n = rng.randint(lo, hi)
            p = rng.uniform(0.15, 0.85)
            g = sample_graph(n, p, rng.randrange(2**32))
            report.sampled_count += 1
            _record(report, r, r.random_instance(g, rng))

    seen: list[ClassId] = []
    for pair in r.class_pairs:
        for c in pair:
            if c not in seen:
                seen.append(c)
    for c in seen:
        report.closure.append(
            check_hereditary_closure(c, _closure_budget(c, closure_budget, weighted_closure_budget), seed)
        )
    for src, img in r.class_pairs:
        budget = _closure_budget(img, closure_budget, weighted_closure_budget)
        res = ContainmentResult(src, img, budget)
        for g in generate_members(src, budget, seed):
            res.checked += 1
            out = r.graph_map(g)
            if not is_member(img, out):
                res.failures.append(serialize(g))
        report.containment.append(res)

    report.elapsed_ms = round((time.perf_counter() - start) * 1000)
    return report


def _sweep_job(args) -> VerificationReport:
    rid, kwargs = args
    return verify_sweep(rid, **kwargs)


def verify_all(seed: int = DEFAULT_SEED, jobs: int = 1, **kwargs) -> list[VerificationReport]:
    """Run every reduction's sweep; reports come back in registry order regardless of ``jobs``."""
    tasks = [(rid, dict(kwargs, seed=seed)) for rid in REDUCTIONS]
    if jobs <= 1:
        return [_sweep_job(t) for t in tasks]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_sweep_job, tasks))
