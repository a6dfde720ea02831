"""Boundary-class generators, membership recognizers, and the deletion-closure check."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterator

from .errors import ClassMismatchError, GraphError
from .graph import (
    Graph,
    WeightedGraph,
    components,
    delete_vertex,
    disjoint_union,
    is_forest,
)
from .io import serialize
from .transforms import complement, k_complete, k_extract, line_graph, line_root, r_contract, r_expand


class ClassId(str, Enum):
    T = "t"
    Q = "q"
    COT = "cot"
    LT = "lt"
    COLT = "colt"
    RQ = "rq"
    KQ = "kq"
    KRQ = "krq"

    @classmethod
    def _missing_(cls, value):
        if isinstance(value, str):
            low = value.lower()
            for member in cls:
                if member.value == low:
                    return member
        return None

    @property
    def weighted(self) -> bool:
        return self in (ClassId.KQ, ClassId.KRQ)

    @property
    def label(self) -> str:
        return _LABELS[self]


_LABELS = {
    ClassId.T: "T",
    ClassId.Q: "Q",
    ClassId.COT: "co(T)",
    ClassId.LT: "L(T)",
    ClassId.COLT: "co(L(T))",
    ClassId.RQ: "R(Q)",
    ClassId.KQ: "K(Q)",
    ClassId.KRQ: "K(R(Q))",
}


@dataclass(frozen=True)
class SpiderSpec:
    i: int
    j: int
    k: int

    def __post_init__(self):
        if min(self.i, self.j, self.k) < 0:
            raise GraphError("spider leg lengths must be non-negative")


@dataclass(frozen=True)
class CaterpillarSpec:
    """Spine of ``len(hairs)`` vertices; spine vertex ``m`` carries a hair of ``hairs[m]`` vertices."""

    hairs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "hairs", tuple(self.hairs))
        if not self.hairs:
            raise GraphError("caterpillar spine needs at least one vertex")
        if min(self.hairs) < 0:
            raise GraphError("hair lengths must be non-negative")

    @property
    def vertex_count(self) -> int:
        return len(self.hairs) + sum(self.hairs)


# -- generators -------------------------------------------------------------

def _attach_path(edges: list, start: int, fresh: int, length: int) -> int:
    prev = start
    for _ in range(length):
        edges.append((prev, fresh))
        prev = fresh
        fresh += 1
    return fresh


def gen_spider(spec: SpiderSpec | tuple[int, int, int]) -> Graph:
    """T_{i,j,k}: vertex 0 is the center, legs follow in order i, j, k."""
    if not isinstance(spec, SpiderSpec):
        spec = SpiderSpec(*spec)
    edges: list = []
    fresh = 1
    for leg in (spec.i, spec.j, spec.k):
        fresh = _attach_path(edges, 0, fresh, leg)
    return Graph(fresh, edges)


def gen_caterpillar(spec: CaterpillarSpec | tuple[int, ...]) -> Graph:
    """Spine on vertices ``0..n-1``; hair vertices are numbered after the spine."""
    if not isinstance(spec, CaterpillarSpec):
        spec = CaterpillarSpec(tuple(spec))
    n = len(spec.hairs)
    edges = [(i, i + 1) for i in range(n - 1)]
    fresh = n
    for m, h in enumerate(spec.hairs):
        fresh = _attach_path(edges, m, fresh, h)
    g = Graph(fresh, edges)
    if g.max_degree() > 3:  # unreachable with one hair per spine vertex
        raise GraphError("caterpillar spec forces a vertex of degree > 3")
    return g


def iter_spiders(max_vertices: int) -> Iterator[SpiderSpec]:
    """Leg-sorted spiders (i >= j >= k) with at most ``max_vertices`` vertices."""
    for total in range(max_vertices):
        for i in range(total, -1, -1):
            for j in range(min(i, total - i), -1, -1):
                k = total - i - j
                if k <= j:
                    yield SpiderSpec(i, j, k)


def iter_caterpillars(max_vertices: int) -> Iterator[CaterpillarSpec]:
    """Caterpillar specs up to ``max_vertices``, one per spine reversal class.

    Spine endpoints carry no hair (a hair there just lengthens the spine), so
    this covers every caterpillar with hairs up to isomorphism, with some
    remaining duplicates.
    """
    def interiors(slots: int, budget: int):
        if slots == 0:
            yield ()
            return
        for h in range(budget + 1):
            for rest in interiors(slots - 1, budget - h):
                yield (h,) + rest

    for n in range(1, max_vertices + 1):
        if n <= 2:
            yield CaterpillarSpec((0,) * n)
            continue
        for inner in interiors(n - 2, max_vertices - n):
            if inner <= inner[::-1]:
                yield CaterpillarSpec((0,) + inner + (0,))


def root_candidates(c: ClassId, edges: int) -> list[Graph]:
    """Connected members of T or Q with exactly ``edges`` edges (candidate line roots)."""
    if c is ClassId.T:
        return [gen_spider(s) for s in iter_spiders(edges + 1) if s.i + s.j + s.k == edges]
    if c is ClassId.Q:
        return [
            gen_caterpillar(s) for s in iter_caterpillars(edges + 1) if s.vertex_count == edges + 1
        ]
    raise ValueError(f"no generator-backed root candidates for {c.label}")


# -- recognizers ------------------------------------------------------------

def _subcubic_forest(g: Graph) -> bool:
    return g.max_degree() <= 3 and is_forest(g)


def _in_t(g: Graph) -> bool:
    if not _subcubic_forest(g):
        return False
    deg = g.degrees()
    return all(sum(deg[v] == 3 for v in comp) <= 1 for comp in components(g))


def _bfs_tree(g: Graph, src: int) -> tuple[dict[int, int], dict[int, int]]:
    dist = {src: 0}
    parent = {src: src}
    q = deque([src])
    while q:
        u = q.popleft()
        for w in g.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                parent[w] = u
                q.append(w)
    return dist, parent


def _in_q(g: Graph) -> bool:
    if not _subcubic_forest(g):
        return False
    deg = g.degrees()
    for comp in components(g):
        cubic = [v for v in comp if deg[v] == 3]
        if len(cubic) <= 2:
            continue
        best = (-1, None, None, None)
        for a in cubic:
            dist, parent = _bfs_tree(g, a)
            for b in cubic:
                if dist[b] > best[0]:
                    best = (dist[b], a, b, parent)
        _, a, b, parent = best
        on_path = {b}
        while b != a:
            b = parent[b]
            on_path.add(b)
        if not on_path.issuperset(cubic):
            return False
    return True


def _in_lt(g: Graph) -> bool:
    return line_root(g, ClassId.T) is not None


def _in_rq(g: Graph) -> bool:
    h = r_contract(g)
    return h is not None and _in_q(h)


_RECOGNIZERS: dict[ClassId, Callable] = {
    ClassId.T: _in_t,
    ClassId.Q: _in_q,
    ClassId.COT: lambda g: _in_t(complement(g)),
    ClassId.LT: _in_lt,
    ClassId.COLT: lambda g: _in_lt(complement(g)),
    ClassId.RQ: _in_rq,
    ClassId.KQ: lambda w: w.is_binary() and _in_q(k_extract(w)),
    ClassId.KRQ: lambda w: w.is_binary() and _in_rq(k_extract(w)),
}


def is_member(c, x: Graph | WeightedGraph) -> bool:
    c = ClassId(c)
    if c.weighted and not isinstance(x, WeightedGraph):
        raise ClassMismatchError(f"{c.label} expects a weighted graph")
    if not c.weighted and not isinstance(x, Graph):
        raise ClassMismatchError(f"{c.label} expects an unweighted graph")
    return _RECOGNIZERS[c](x)


# -- members and closure ----------------------------------------------------

_BASE = {
    ClassId.T: ("spider", lambda g: g),
    ClassId.Q: ("caterpillar", lambda g: g),
    ClassId.COT: ("spider", complement),
    ClassId.LT: ("spider", line_graph),
    ClassId.COLT: ("spider", lambda g: complement(line_graph(g))),
    ClassId.RQ: ("caterpillar", r_expand),
    ClassId.KQ: ("caterpillar", k_complete),
    ClassId.KRQ: ("caterpillar", lambda g: k_complete(r_expand(g))),
}


def base_class(c) -> ClassId:
    """The generated class (T or Q) whose transformed members populate ``c``."""
    return ClassId.T if _BASE[ClassId(c)][0] == "spider" else ClassId.Q


def transform_into(c, g: Graph):
    """Map a member of :func:`base_class` into ``c``."""
    return _BASE[ClassId(c)][1](g)


def base_members(c, max_vertices: int) -> list[Graph]:
    if _BASE[ClassId(c)][0] == "spider":
        return [gen_spider(s) for s in iter_spiders(max_vertices)]
    return [gen_caterpillar(s) for s in iter_caterpillars(max_vertices)]


def generate_members(c, size_budget: int, seed: int = 42, unions: int = 40) -> list:
    """Members of ``c`` with 1..size_budget vertices.

    Transformed connected generator outputs, plus ``unions`` seeded disjoint
    unions of two generator outputs so that forests are exercised as well.
    """
    c = ClassId(c)
    # L shrinks a tree by one vertex; every other transform only grows it
    base_cap = size_budget + 1 if c in (ClassId.LT, ClassId.COLT) else size_budget
    bases = base_members(c, base_cap)
    rng = random.Random(seed)
    pool = list(bases)
    for _ in range(unions if len(bases) > 1 else 0):
        a, b = rng.sample(bases, 2)
        if a.n + b.n <= base_cap:
            pool.append(disjoint_union(a, b))
    out = []
    seen = set()
    for g in pool:
        x = transform_into(c, g)
        if 1 <= x.n <= size_budget and x not in seen:
            seen.add(x)
            out.append(x)
    return out


@dataclass(frozen=True)
class ClosureViolation:
    member: str
    vertex: int
    result: str

    def to_dict(self) -> dict:
        return {"member": self.member, "vertex": self.vertex, "result": self.result}


@dataclass
class ClosureReport:
    class_id: ClassId
    budget: int
    seed: int
    members: int = 0
    checks: int = 0
    violations: list[ClosureViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_hereditary_closure(c, size_budget: int, seed: int = 42) -> ClosureReport:
    """Delete every vertex of every generated member and re-run the recognizer."""
    c = ClassId(c)
    report = ClosureReport(c, size_budget, seed)
    for x in generate_members(c, size_budget, seed):
        report.members += 1
        for v in range(x.n):
            report.checks += 1
            y = delete_vertex(x, v)
            if not is_member(c, y):
                report.violations.append(ClosureViolation(serialize(x), v, serialize(y)))
    return report
