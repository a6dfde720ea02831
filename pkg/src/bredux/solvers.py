"""Exact exponential-time solvers for the ten decision problems.

Every solver returns a :class:`SolveResult` with the exact optimum (where the
problem has one) and a certificate that :func:`validate_certificate` can
check independently. Decisions use thresholds: alpha >= k, omega >= k,
beta <= k, chi <= k, clique cover <= k, tour cost <= k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from .errors import ReductionError, SolverLimitError
from .graph import Graph, WeightedGraph, complete_graph, components
from .transforms import complement

MIS_CAP = 20
COLOR_CAP = 14
HAM_CAP = 18
TREE_CAP = 12
SUBISO_CAP = 14
TSP_CAP = 14


@dataclass(frozen=True)
class GraphOnly:
    graph: Graph


@dataclass(frozen=True)
class GraphInt:
    graph: Graph
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ReductionError("parameter k must be non-negative")


@dataclass(frozen=True)
class GraphPair:
    graph: Graph
    pattern: Graph


@dataclass(frozen=True)
class WeightedBudget:
    weighted: WeightedGraph
    k: Fraction

    def __post_init__(self):
        object.__setattr__(self, "k", Fraction(self.k))


Instance = GraphOnly | GraphInt | GraphPair | WeightedBudget


@dataclass(frozen=True)
class SolveResult:
    decision: bool | None
    optimum: int | Fraction | None = None
    certificate: Any = None


def _cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise SolverLimitError(f"{what}: n={n} exceeds size cap {cap}")


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# -- independent set / vertex cover / clique ---------------------------------

def _max_independent(adj: tuple[int, ...], cand: int) -> int:
    """Maximum independent subset of ``cand``: branch on a max-degree vertex."""
    best = 0

    def go(cand: int, chosen: int, size: int) -> None:
        nonlocal best
        if size + cand.bit_count() <= best.bit_count():
            return
        # degree-0 and degree-1 vertices can always be taken greedily
        changed = True
        while changed:
            changed = False
            for v in _bits(cand):
                if not cand >> v & 1:
                    continue
                if (adj[v] & cand).bit_count() <= 1:
                    chosen |= 1 << v
                    size += 1
                    cand &= ~(1 << v) & ~adj[v]
                    changed = True
        if not cand:
            if size > best.bit_count():
                best = chosen
            return
        v = max(_bits(cand), key=lambda x: (adj[x] & cand).bit_count())
        go(cand & ~(1 << v) & ~adj[v], chosen | 1 << v, size + 1)
        go(cand & ~(1 << v), chosen, size)

    go(cand, 0, 0)
    return best


def independence_number(g: Graph, k: int | None = None) -> SolveResult:
    _cap(g.n, MIS_CAP, "independent-set")
    best = _max_independent(g.adj, (1 << g.n) - 1)
    alpha = best.bit_count()
    return SolveResult(None if k is None else alpha >= k, alpha, sorted(_bits(best)))


def vertex_cover_number(g: Graph, k: int | None = None) -> SolveResult:
    """Branch: either the max-degree vertex is in the cover, or all its neighbours are."""
    _cap(g.n, MIS_CAP, "vertex-cover")
    adj = g.adj
    best_cover = (1 << g.n) - 1

    def go(alive: int, cover: int) -> None:
        nonlocal best_cover
        if cover.bit_count() >= best_cover.bit_count():
            return
        v, dv = -1, 0
        for u in _bits(alive):
            d = (adj[u] & alive).bit_count()
            if d > dv:
                v, dv = u, d
        if dv == 0:
            best_cover = cover
            return
        # each remaining edge needs a cover vertex; a matching bound prunes
        if cover.bit_count() + _greedy_matching(adj, alive) >= best_cover.bit_count():
            return
        go(alive & ~(1 << v), cover | 1 << v)
        nv = adj[v] & alive
        go(alive & ~nv & ~(1 << v), cover | nv)

    go((1 << g.n) - 1, 0)
    beta = best_cover.bit_count()
    return SolveResult(None if k is None else beta <= k, beta, sorted(_bits(best_cover)))


def _greedy_matching(adj, alive: int) -> int:
    size = 0
    free = alive
    for u in _bits(alive):
        if not free >> u & 1:
            continue
        nb = adj[u] & free & ~(1 << u)
        if nb:
            w = (nb & -nb).bit_length() - 1
            free &= ~(1 << u) & ~(1 << w)
            size += 1
    return size


def clique_number(g: Graph, k: int | None = None) -> SolveResult:
    """Maximum clique by branch and bound with a greedy-colouring bound."""
    _cap(g.n, MIS_CAP, "clique")
    adj = g.adj
    best = 0

    def color_bound(cand: int) -> list[tuple[int, int]]:
        order = []
        uncolored = cand
        color = 0
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~adj[v] & ~(1 << v)
                uncolored &= ~(1 << v)
                order.append((v, color))
        return order

    def expand(clique: int, cand: int) -> None:
        nonlocal best
        for v, c in reversed(color_bound(cand)):
            if clique.bit_count() + c <= best.bit_count():
                return
            nc = clique | 1 << v
            sub = cand & adj[v]
            if sub:
                expand(nc, sub)
            elif nc.bit_count() > best.bit_count():
                best = nc
            cand &= ~(1 << v)

    if g.n:
        expand(0, (1 << g.n) - 1)
    omega = best.bit_count()
    return SolveResult(None if k is None else omega >= k, omega, sorted(_bits(best)))


# -- colouring and clique cover ---------------------------------------------

def _k_coloring(g: Graph, k: int) -> list[int] | None:
    """DSatur-ordered backtracking for a proper k-colouring."""
    n = g.n
    colors = [-1] * n
    nbrs = [g.neighbors(v) for v in range(n)]

    def pick() -> int:
        best, key = -1, None
        for v in range(n):
            if colors[v] != -1:
                continue
            sat = len({colors[u] for u in nbrs[v] if colors[u] != -1})
            kv = (sat, len(nbrs[v]))
            if key is None or kv > key:
                best, key = v, kv
        return best

    def go(done: int, used: int) -> bool:
        if done == n:
            return True
        v = pick()
        taken = {colors[u] for u in nbrs[v]}
        # a fresh colour is symmetric to any other fresh colour: try one only
        for c in range(min(used + 1, k)):
            if c in taken:
                continue
            colors[v] = c
            if go(done + 1, max(used, c + 1)):
                return True
        colors[v] = -1
        return False

    return colors if go(0, 0) else None


def chromatic_number(g: Graph, k: int | None = None) -> SolveResult:
    _cap(g.n, COLOR_CAP, "vertex-coloring")
    chi = 0
    coloring: list[int] = []
    if g.n:
        lower = 1 if g.m == 0 else 2
        for chi in range(lower, g.n + 1):
            coloring = _k_coloring(g, chi)
            if coloring is not None:
                break
    return SolveResult(None if k is None else chi <= k, chi, coloring)


def clique_cover_number(g: Graph, k: int | None = None) -> SolveResult:
    """Clique cover number as the chromatic number of the complement."""
    _cap(g.n, COLOR_CAP, "clique-cover")
    res = chromatic_number(complement(g))
    blocks: dict[int, list[int]] = {}
    for v, c in enumerate(res.certificate):
        blocks.setdefault(c, []).append(v)
    cover = [blocks[c] for c in sorted(blocks)]
    return SolveResult(None if k is None else res.optimum <= k, res.optimum, cover)


# -- Hamiltonian path / cycle -------------------------------------------------

def _ham_order(g: Graph, cycle: bool) -> list[int] | None:
    """Subset DP: reach[mask] = bitmask of possible endpoints of a path covering mask."""
    n = g.n
    adj = g.adj
    full = (1 << n) - 1
    reach = [0] * (1 << n)
    if cycle:
        reach[1] = 1  # paths start at vertex 0
    else:
        for v in range(n):
            reach[1 << v] = 1 << v
    for mask in range(1, 1 << n):
        ends = reach[mask]
        if not ends:
            continue
        for v in _bits(ends):
            nxt = adj[v] & ~mask
            for w in _bits(nxt):
                reach[mask | 1 << w] |= 1 << w
    ends = reach[full]
    if cycle:
        ends &= adj[0]
    if not ends:
        return None
    # walk back from a valid endpoint
    v = (ends & -ends).bit_length() - 1
    order = [v]
    mask = full
    while mask.bit_count() > 1:
        mask &= ~(1 << v)
        prev = reach[mask] & adj[v]
        if cycle and mask.bit_count() > 1:
            prev &= ~1
        v = (prev & -prev).bit_length() - 1
        order.append(v)
    return order[::-1]


def has_hamiltonian_path(g: Graph) -> SolveResult:
    _cap(g.n, HAM_CAP, "hamiltonian-path")
    if g.n == 0:
        return SolveResult(False)
    order = _ham_order(g, cycle=False)
    return SolveResult(order is not None, None, order)


def has_hamiltonian_cycle(g: Graph) -> SolveResult:
    """Cycles need at least three vertices, so n <= 2 is always a no."""
    _cap(g.n, HAM_CAP, "hamiltonian-cycle")
    if g.n < 3:
        return SolveResult(False)
    order = _ham_order(g, cycle=True)
    return SolveResult(order is not None, None, order)


# -- bounded-degree spanning tree ---------------------------------------------

def has_bounded_degree_spanning_tree(g: Graph, k: int) -> SolveResult:
    """Include/exclude backtracking over edges with union-find and degree caps."""
    _cap(g.n, TREE_CAP, "bounded-degree-spanning-tree")
    if k < 1:
        raise ReductionError("degree bound must be at least 1")
    n = g.n
    if n == 0:
        return SolveResult(False)
    if len(components(g)) > 1:
        return SolveResult(False)
    edges = g.sorted_edges()
    deg = [0] * n
    parent = list(range(n))
    chosen: list[tuple[int, int]] = []
    # remaining[i]: number of edges at index >= i incident to each vertex
    remaining = [[0] * n for _ in range(len(edges) + 1)]
    for i in range(len(edges) - 1, -1, -1):
        remaining[i] = remaining[i + 1][:]
        u, v = edges[i]
        remaining[i][u] += 1
        remaining[i][v] += 1

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def go(i: int) -> bool:
        if len(chosen) == n - 1:
            return True
        if len(edges) - i < n - 1 - len(chosen):
            return False
        # every vertex still needs at least one tree edge
        for v in range(n):
            if deg[v] == 0 and remaining[i][v] == 0:
                return False
        u, v = edges[i]
        if deg[u] < k and deg[v] < k:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                deg[u] += 1
                deg[v] += 1
                chosen.append((u, v))
                if go(i + 1):
                    return True
                chosen.pop()
                deg[u] -= 1
                deg[v] -= 1
                parent[ru] = ru
        return go(i + 1)

    found = go(0)
    return SolveResult(found, None, list(chosen) if found else None)


# -- subgraph isomorphism -------------------------------------------------------

def subgraph_isomorphic(g: Graph, h: Graph) -> SolveResult:
    """Does ``g`` contain a (not necessarily induced) subgraph isomorphic to ``h``?"""
    _cap(g.n, SUBISO_CAP, "subgraph-isomorphism")
    if h.n > g.n or h.m > g.m:
        return SolveResult(False)
    gdeg = g.degrees()
    hdeg = h.degrees()
    # place high-degree, well-connected pattern vertices first
    order: list[int] = []
    placed = 0
    rest = set(range(h.n))
    while rest:
        v = max(rest, key=lambda x: ((h.adj[x] & placed).bit_count(), hdeg[x], -x))
        order.append(v)
        placed |= 1 << v
        rest.discard(v)
    emb = [-1] * h.n
    used = 0

    def go(i: int) -> bool:
        nonlocal used
        if i == len(order):
            return True
        v = order[i]
        need = 0
        for u in _bits(h.adj[v]):
            if emb[u] != -1:
                need |= 1 << emb[u]
        for w in range(g.n):
            if used >> w & 1 or gdeg[w] < hdeg[v] or (g.adj[w] & need) != need:
                continue
            emb[v] = w
            used |= 1 << w
            if go(i + 1):
                return True
            used &= ~(1 << w)
        emb[v] = -1
        return False

    found = go(0)
    return SolveResult(found, None, list(emb) if found else None)


# -- travelling salesperson ---------------------------------------------------

def tsp_decision(w: WeightedGraph, k) -> SolveResult:
    """Minimum Hamiltonian-cycle weight by Held-Karp, compared with budget ``k``.

    Weights are scaled to integers by the lcm of their denominators so the DP
    runs on ints and the optimum is still exact.
    """
    _cap(w.n, TSP_CAP, "travelling-salesperson")
    k = Fraction(k)
    n = w.n
    if n < 3:
        return SolveResult(False)
    scale = 1
    for _, x in w.items():
        scale = math.lcm(scale, x.denominator)
    cost = [[0] * n for _ in range(n)]
    for (u, v), x in w.items():
        cost[u][v] = cost[v][u] = int(x * scale)
    inf = math.inf
    # dp[mask][v]: cheapest path 0 -> v covering mask (mask always contains 0)
    size = 1 << n
    dp = [[inf] * n for _ in range(size)]
    dp[1][0] = 0
    for mask in range(1, size, 2):
        row = dp[mask]
        for v in range(n):
            cv = row[v]
            if cv == inf:
                continue
            cr = cost[v]
            for u in range(1, n):
                if mask >> u & 1:
                    continue
                nm = mask | 1 << u
                c = cv + cr[u]
                if c < dp[nm][u]:
                    dp[nm][u] = c
    full = size - 1
    best, last = min((dp[full][v] + cost[v][0], v) for v in range(1, n))
    tour = [last]
    mask = full
    v = last
    while v != 0:
        pm = mask & ~(1 << v)
        u = min(
            (x for x in range(n) if pm >> x & 1 and dp[pm][x] + cost[x][v] == dp[mask][v]),
        )
        tour.append(u)
        mask, v = pm, u
    tour.reverse()
    optimum = Fraction(best, scale)
    return SolveResult(optimum <= k, optimum, tour)


# -- certificate validation ------------------------------------------------------

def _is_independent(g: Graph, s) -> bool:
    s = list(s)
    return len(set(s)) == len(s) and all(not g.has_edge(a, b) for i, a in enumerate(s) for b in s[i + 1:])


def _is_clique(g: Graph, s) -> bool:
    s = list(s)
    return len(set(s)) == len(s) and all(g.has_edge(a, b) for i, a in enumerate(s) for b in s[i + 1:])


def _is_path_order(g: Graph, order, cycle: bool) -> bool:
    if sorted(order) != list(range(g.n)):
        return False
    if any(not g.has_edge(a, b) for a, b in zip(order, order[1:])):
        return False
    return not cycle or (g.n >= 3 and g.has_edge(order[-1], order[0]))


def validate_certificate(problem: str, instance, result: SolveResult) -> bool:
    """Independently re-check a solver's certificate against its claims."""
    cert = result.certificate
    if problem == "independent-set":
        g = instance.graph
        return _is_independent(g, cert) and len(cert) == result.optimum
    if problem == "vertex-cover":
        g = instance.graph
        cs = set(cert)
        return len(cs) == result.optimum and all(u in cs or v in cs for u, v in g.edges)
    if problem == "clique":
        return _is_clique(instance.graph, cert) and len(cert) == result.optimum
    if problem == "vertex-coloring":
        g = instance.graph
        return (
            len(cert) == g.n
            and all(cert[u] != cert[v] for u, v in g.edges)
            and len(set(cert)) == result.optimum
        )
    if problem == "clique-cover":
        g = instance.graph
        flat = sorted(v for b in cert for v in b)
        return flat == list(range(g.n)) and all(_is_clique(g, b) for b in cert) and len(cert) == result.optimum
    if problem in ("hamiltonian-path", "hamiltonian-cycle"):
        if not result.decision:
            return cert is None
        return _is_path_order(instance.graph, cert, problem == "hamiltonian-cycle")
    if problem == "bounded-degree-spanning-tree":
        if not result.decision:
            return cert is None
        g, k = instance.graph, instance.k
        if len(cert) != g.n - 1 or any(not g.has_edge(u, v) for u, v in cert):
            return False
        tree = Graph(g.n, cert)
        return len(components(tree)) == 1 and tree.max_degree() <= k
    if problem == "subgraph-isomorphism":
        if not result.decision:
            return cert is None
        g, h = instance.graph, instance.pattern
        return len(set(cert)) == h.n and all(g.has_edge(cert[u], cert[v]) for u, v in h.edges)
    if problem == "travelling-salesperson":
        w = instance.weighted
        if w.n < 3:
            return cert is None
        if sorted(cert) != list(range(w.n)):
            return False
        total = sum(w.weight(a, b) for a, b in zip(cert, cert[1:] + cert[:1]))
        return total == result.optimum
    raise ValueError(f"unknown problem {problem!r}")


# -- problem registry ------------------------------------------------------------

@dataclass(frozen=True)
class Problem:
    name: str
    shape: type
    solve: Callable[[Any], SolveResult]


def _with_k(fn):
    return lambda inst: fn(inst.graph, inst.k)


PROBLEMS: dict[str, Problem] = {
    p.name: p
    for p in [
        Problem("independent-set", GraphInt, _with_k(independence_number)),
        Problem("vertex-coloring", GraphInt, _with_k(chromatic_number)),
        Problem("hamiltonian-path", GraphOnly, lambda i: has_hamiltonian_path(i.graph)),
        Problem("hamiltonian-cycle", GraphOnly, lambda i: has_hamiltonian_cycle(i.graph)),
        Problem("clique", GraphInt, _with_k(clique_number)),
        Problem("vertex-cover", GraphInt, _with_k(vertex_cover_number)),
        Problem("bounded-degree-spanning-tree", GraphInt, _with_k(has_bounded_degree_spanning_tree)),
        Problem("clique-cover", GraphInt, _with_k(clique_cover_number)),
        Problem("subgraph-isomorphism", GraphPair, lambda i: subgraph_isomorphic(i.graph, i.pattern)),
        Problem("travelling-salesperson", WeightedBudget, lambda i: tsp_decision(i.weighted, i.k)),
    ]
}


def solve(problem: str, instance) -> SolveResult:
    p = PROBLEMS[problem]
    if not isinstance(instance, p.shape):
        raise ReductionError(f"{problem} expects a {p.shape.__name__} instance, got {type(instance).__name__}")
    return p.solve(instance)


def clique_pattern(n: int) -> Graph:
    return complete_graph(n)
