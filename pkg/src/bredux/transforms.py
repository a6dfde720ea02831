"""Graph transformations: complement, line graph, cubic-vertex expansion, weighted completion."""

from __future__ import annotations

import itertools
from typing import TYPE_CHECKING

from .errors import RootSearchBoundError, TransformError
from .graph import (
    Graph,
    WeightedGraph,
    are_isomorphic,
    components,
    disjoint_union,
    enumerate_graphs,
    induced_subgraph,
    is_connected,
)

if TYPE_CHECKING:
    from .classes import ClassId

# Largest component (in L-vertices) handled by line_root. T and Q roots come
# from their generators and reach further than the brute-force fallback.
SPIDER_ROOT_BOUND = 20
CATERPILLAR_ROOT_BOUND = 12
GENERIC_ROOT_BOUND = 5


def complement(g: Graph) -> Graph:
    n = g.n
    return Graph(n, [p for p in itertools.combinations(range(n), 2) if p not in g.edges])


def line_graph(g: Graph, with_map: bool = False):
    """Line graph of ``g``.

    Vertex ``i`` of the result is the ``i``-th edge of ``g.sorted_edges()``.
    With ``with_map=True`` returns ``(L, edge_of)`` where ``edge_of[i]`` is
    that edge.
    """
    edge_of = g.sorted_edges()
    incident: dict[int, list[int]] = {}
    for i, (u, v) in enumerate(edge_of):
        incident.setdefault(u, []).append(i)
        incident.setdefault(v, []).append(i)
    pairs = set()
    for ids in incident.values():
        pairs.update(itertools.combinations(ids, 2))
    lg = Graph(len(edge_of), pairs)
    return (lg, edge_of) if with_map else lg


def _candidate_roots(comp: Graph, cid: ClassId) -> list[Graph]:
    from .classes import ClassId, root_candidates

    m = comp.n
    bound = {ClassId.T: SPIDER_ROOT_BOUND, ClassId.Q: CATERPILLAR_ROOT_BOUND}.get(cid, GENERIC_ROOT_BOUND)
    if m > bound:
        raise RootSearchBoundError(f"root search bound exceeded ({m} > {bound} vertices)")
    if cid in (ClassId.T, ClassId.Q):
        return root_candidates(cid, m)
    out = []
    for k in range(2, m + 2):
        out.extend(h for h in enumerate_graphs(k, dedup=True) if h.m == m and is_connected(h))
    return out


def line_root(g: Graph, root_class) -> Graph | None:
    """Find H in ``root_class`` whose line graph is isomorphic to ``g``.

    Each component of ``g`` is matched against connected candidate roots with
    exactly as many edges as the component has vertices. Whitney's K3/K_{1,3}
    ambiguity is settled by the class test, not special-cased. Returns None when
    no root exists in the class.
    """
    from .classes import ClassId, is_member

    cid = ClassId(root_class)
    if g.n == 0:
        empty = Graph(0)
        return empty if is_member(cid, empty) else None
    per_comp = []
    for vs in components(g):
        comp = induced_subgraph(g, vs)
        found = []
        for h in _candidate_roots(comp, cid):
            if any(are_isomorphic(h, f) for f in found):
                continue
            if are_isomorphic(line_graph(h), comp):
                found.append(h)
        if not found:
            return None
        per_comp.append(found)
    for choice in itertools.product(*per_comp):
        root = disjoint_union(*choice)
        if is_member(cid, root):
            return root
    return None


def r_expand(g: Graph) -> Graph:
    """Replace every degree-3 vertex by a triangle.

    Vertex ``v`` keeps the corner facing its smallest neighbour; the two other
    corners get fresh ids ``n, n+1, ...`` in order of ``v``.
    """
    if g.max_degree() > 3:
        raise TransformError("R undefined for degree > 3")
    n = g.n
    corner: dict[tuple[int, int], int] = {}
    edges = []
    fresh = n
    for v in range(n):
        if g.degree(v) != 3:
            continue
        a, b, c = g.neighbors(v)
        corner[(v, a)] = v
        corner[(v, b)] = fresh
        corner[(v, c)] = fresh + 1
        edges += [(v, fresh), (v, fresh + 1), (fresh, fresh + 1)]
        fresh += 2
    for u, v in g.edges:
        edges.append((corner.get((u, v), u), corner.get((v, u), v)))
    return Graph(fresh, edges)


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for u, v in g.sorted_edges():
        common = g.adj[u] & g.adj[v] & ~((1 << (v + 1)) - 1)
        while common:
            low = common & -common
            out.append((u, v, low.bit_length() - 1))
            common ^= low
    return out


def r_contract(g: Graph) -> Graph | None:
    """Inverse of :func:`r_expand`; None if ``g`` is not an R-image."""
    rep = list(range(g.n))
    covered: set[int] = set()
    for t in triangles(g):
        if covered.intersection(t):
            return None
        covered.update(t)
        for v in t:
            rep[v] = t[0]
    reps = sorted(set(rep))
    pos = {r: i for i, r in enumerate(reps)}
    edges = set()
    for u, v in g.edges:
        a, b = pos[rep[u]], pos[rep[v]]
        if a == b:
            continue
        e = (min(a, b), max(a, b))
        if e in edges:
            return None
        edges.add(e)
    h = Graph(len(reps), edges)
    if h.max_degree() > 3:
        return None
    return h if are_isomorphic(r_expand(h), g) else None


def k_complete(g: Graph) -> WeightedGraph:
    return WeightedGraph(
        g.n, {p: 0 if p in g.edges else 1 for p in itertools.combinations(range(g.n), 2)}
    )


def k_extract(w: WeightedGraph) -> Graph:
    if not w.is_binary():
        raise TransformError("not a K-image: weights must all be 0 or 1")
    return Graph(w.n, [p for p, x in w.items() if x == 0])
