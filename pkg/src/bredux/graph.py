"""Finite simple graphs, weighted completions, isomorphism and enumeration.

Vertices are always the contiguous range ``0..n-1``. Operations that drop
vertices relabel the survivors order-preservingly, so results are canonical
and can be compared with ``==`` (labeled equality) as well as with
:func:`are_isomorphic`.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import EnumerationLimitError, GraphError

Edge = tuple[int, int]

MAX_EXHAUSTIVE_N = 6


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable finite simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        norm = set()
        adj = [0] * n
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) references a vertex not in graph")
            uv = _norm_edge(u, v)
            if uv in norm:
                raise GraphError(f"duplicate edge {uv}")
            norm.add(uv)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "adj", tuple(adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def _from_adj(cls, adj: Sequence[int]) -> Graph:
        n = len(adj)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if adj[u] >> v & 1]
        return cls(n, edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        a = self.adj[v]
        return [u for u in range(self.n) if a >> u & 1]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


class WeightedGraph:
    """Complete graph with an exact non-negative weight on every vertex pair.

    Weights are stored as :class:`fractions.Fraction`; integral values compare
    equal to plain ints, so ``W.weight(0, 1) == 0`` works as expected.
    """

    __slots__ = ("n", "_w")

    def __init__(self, n: int, weights: Mapping[Sequence[int], object]):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        w: dict[Edge, Fraction] = {}
        for key, val in weights.items():
            u, v = int(key[0]), int(key[1])
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"pair ({u}, {v}) references a vertex not in graph")
            uv = _norm_edge(u, v)
            if uv in w:
                raise GraphError(f"duplicate pair {uv}")
            fv = Fraction(val)
            if fv < 0:
                raise GraphError(f"negative weight on {uv}")
            w[uv] = fv
        if len(w) != n * (n - 1) // 2:
            missing = next((p for p in itertools.combinations(range(n), 2) if p not in w), None)
            raise GraphError(f"weighted graph must be complete; no weight for pair {missing}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_w", w)

    def __setattr__(self, name, value):
        raise AttributeError("WeightedGraph is immutable")

    def weight(self, u: int, v: int) -> Fraction:
        return self._w[_norm_edge(u, v)]

    def items(self) -> list[tuple[Edge, Fraction]]:
        return sorted(self._w.items())

    def is_binary(self) -> bool:
        return all(x in (0, 1) for x in self._w.values())

    def __eq__(self, other):
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self.n == other.n and self._w == other._w

    def __hash__(self):
        return hash((self.n, frozenset(self._w.items())))

    def __repr__(self):
        body = ", ".join(f"{u}-{v}:{w}" for (u, v), w in self.items())
        return f"WeightedGraph(n={self.n}, {{{body}}})"


# -- constructors -----------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    """P_n on ``n`` vertices."""
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least three vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves}; vertex 0 is the center."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, edges)


# -- vertex removal ------------------------------------------------------------

def _check_vertex(n: int, v: int) -> None:
    if not (0 <= v < n):
        raise GraphError(f"vertex not in graph: {v}")


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    keep = sorted(set(vertices))
    for v in keep:
        _check_vertex(g.n, v)
    pos = {v: i for i, v in enumerate(keep)}
    return Graph(len(keep), [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos])


def delete_vertex(g, v: int):
    """Remove ``v`` and relabel the rest contiguously. Accepts weighted graphs too."""
    _check_vertex(g.n, v)
    if isinstance(g, WeightedGraph):
        shift = lambda x: x - (x > v)  # noqa: E731
        return WeightedGraph(
            g.n - 1,
            {(shift(a), shift(b)): w for (a, b), w in g.items() if v not in (a, b)},
        )
    return induced_subgraph(g, (u for u in range(g.n) if u != v))


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= g.adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append([u for u in range(g.n) if comp >> u & 1])
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(components(g))


# -- isomorphism -------------------------------------------------------------

def _refine(adj: Sequence[int], colors: list[int]) -> list[int]:
    """Colour refinement to the stable partition; colours are isomorphism-invariant."""
    n = len(adj)
    nbrs = [[u for u in range(n) if adj[v] >> u & 1] for v in range(n)]
    k = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in nbrs[v]))) for v in range(n)]
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if len(palette) == k:
            return new
        colors, k = new, len(palette)


def _joint_colors(g1: Graph, g2: Graph) -> tuple[list[int], list[int]]:
    n = g1.n
    adj = list(g1.adj) + [a << n for a in g2.adj]
    colors = _refine(adj, [0] * (n + g2.n))
    return colors[:n], colors[n:]


def find_isomorphism(g1: Graph, g2: Graph) -> list[int] | None:
    """Return ``f`` with ``f[v]`` the image of ``v``, or None if not isomorphic."""
    n = g1.n
    if n != g2.n or g1.m != g2.m or sorted(g1.degrees()) != sorted(g2.degrees()):
        return None
    if n == 0:
        return []
    c1, c2 = _joint_colors(g1, g2)
    if sorted(c1) != sorted(c2):
        return None
    cls_size: dict[int, int] = {}
    for c in c1:
        cls_size[c] = cls_size.get(c, 0) + 1
    by_color: dict[int, list[int]] = {}
    for w in range(n):
        by_color.setdefault(c2[w], []).append(w)

    # connectivity-first order keeps the adjacency test tight early on
    order: list[int] = []
    placed = 0
    remaining = set(range(n))
    while remaining:
        v = max(
            remaining,
            key=lambda x: ((g1.adj[x] & placed).bit_count(), -cls_size[c1[x]], -x),
        )
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)

    f = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in by_color[c1[v]]:
            if used[w]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if (g1.adj[v] >> u & 1) != (g2.adj[w] >> f[u] & 1):
                    ok = False
                    break
            if not ok:
                continue
            f[v] = w
            used[w] = True
            if extend(i + 1):
                return True
            used[w] = False
        f[v] = -1
        return False

    return list(f) if extend(0) else None


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    return find_isomorphism(g1, g2) is not None


def _pair_index(n: int) -> list[list[int]]:
    idx = [[-1] * n for _ in range(n)]
    k = 0
    for u in range(n):
        for v in range(u + 1, n):
            idx[u][v] = idx[v][u] = k
            k += 1
    return idx


def canonical_form(g: Graph) -> tuple[int, int]:
    """Canonical ``(n, edge-bitmask)`` key; equal iff the graphs are isomorphic.

    Minimises the bitmask over all relabelings that respect the refined colour
    partition. Cost grows with the product of cell factorials, so this is only
    meant for the small graphs of the enumerator (n <= 8 or so).
    """
    n = g.n
    colors = _refine(g.adj, [0] * n)
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    ordered = [cells[c] for c in sorted(cells)]
    idx = _pair_index(n)
    edges = list(g.edges)
    best = None
    for parts in itertools.product(*(itertools.permutations(c) for c in ordered)):
        pos = [0] * n
        i = 0
        for part in parts:
            for v in part:
                pos[v] = i
                i += 1
        mask = 0
        for u, v in edges:
            mask |= 1 << idx[pos[u]][pos[v]]
        if best is None or mask < best:
            best = mask
    return (n, best or 0)


def graph_from_mask(n: int, mask: int) -> Graph:
    pairs = itertools.combinations(range(n), 2)
    return Graph(n, [p for k, p in enumerate(pairs) if mask >> k & 1])


# -- enumeration and sampling --------------------------------------------------

def extend_by_vertex(graphs: Iterable[Graph]) -> list[Graph]:
    """All non-isomorphic one-vertex extensions of ``graphs``.

    If ``graphs`` holds one representative of every class on ``n`` vertices,
    the result holds one representative of every class on ``n + 1`` vertices,
    because every graph is an extension of any of its vertex-deleted subgraphs.
    """
    seen: dict[tuple[int, int], Graph] = {}
    for g in graphs:
        n = g.n
        for nbrs in range(1 << n):
            extra = [(u, n) for u in range(n) if nbrs >> u & 1]
            h = Graph(n + 1, list(g.edges) + extra)
            key = canonical_form(h)
            if key not in seen:
                seen[key] = graph_from_mask(*key)
    return [seen[k] for k in sorted(seen, key=lambda k: (seen[k].m, k[1]))]


@lru_cache(maxsize=None)
def _dedup_graphs(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0),)
    return tuple(extend_by_vertex(_dedup_graphs(n - 1)))


def enumerate_graphs(n: int, dedup: bool = False) -> Iterator[Graph]:
    """Yield every labeled graph on ``n`` vertices, or one per isomorphism class.

    Exhaustive mode is capped at ``n = 6``; use :func:`sample_graph` beyond it.
    """
    if n < 0:
        raise EnumerationLimitError("vertex count must be non-negative")
    if n > MAX_EXHAUSTIVE_N:
        raise EnumerationLimitError(
            f"exhaustive enumeration is capped at n={MAX_EXHAUSTIVE_N}; "
            "use sample_graph for larger n"
        )
    if dedup:
        yield from _dedup_graphs(n)
        return
    for mask in range(1 << (n * (n - 1) // 2)):
        yield graph_from_mask(n, mask)


def sample_graph(n: int, edge_probability: float, seed: int) -> Graph:
    """Seeded G(n, p) graph; each pair in lexicographic order is kept with prob. p."""
    if n < 1:
        raise GraphError("sample_graph needs n >= 1")
    if not 0.0 <= edge_probability <= 1.0:
        raise GraphError(f"edge probability {edge_probability} outside [0, 1]")
    rng = random.Random(seed)
    return Graph(
        n,
        [p for p in itertools.combinations(range(n), 2) if rng.random() < edge_probability],
    )
