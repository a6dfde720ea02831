"""Text formats for graphs and weighted graphs, plus DOT export.

Plain graph::

    n m
    u v        (m lines, 0 <= u < v < n)

Weighted complete graph (the literal ``w`` marks the format)::

    n m w
    u v weight (m = n(n-1)/2 lines; weight is an integer or p/q)

Lines starting with ``#`` and blank lines are ignored. Errors carry the
physical line number.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .errors import (
    DuplicateEdgeError,
    MalformedEdgeError,
    MalformedHeaderError,
    SelfLoopError,
    VertexRangeError,
)
from .graph import Graph, WeightedGraph


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        out.append((lineno, s.split()))
    return out


def _parse_int(tok: str, lineno: int, what: str, exc=MalformedEdgeError) -> int:
    try:
        return int(tok)
    except ValueError:
        raise exc(f"{what} {tok!r} is not an integer", lineno) from None


def _parse_header(lines, weighted: bool) -> tuple[int, int]:
    if not lines:
        raise MalformedHeaderError("missing header line", 1)
    lineno, toks = lines[0]
    want = 3 if weighted else 2
    if len(toks) != want or (weighted and toks[2] != "w"):
        shape = "'n m w'" if weighted else "'n m'"
        raise MalformedHeaderError(f"header must be {shape}, got {' '.join(toks)!r}", lineno)
    n = _parse_int(toks[0], lineno, "vertex count", MalformedHeaderError)
    m = _parse_int(toks[1], lineno, "edge count", MalformedHeaderError)
    if n < 0 or m < 0:
        raise MalformedHeaderError("counts must be non-negative", lineno)
    if len(lines) - 1 != m:
        raise MalformedHeaderError(f"header announces {m} edges but {len(lines) - 1} follow", lineno)
    return n, m


def _parse_pair(toks, lineno: int, n: int, seen: set) -> tuple[int, int]:
    u = _parse_int(toks[0], lineno, "vertex")
    v = _parse_int(toks[1], lineno, "vertex")
    for x in (u, v):
        if not 0 <= x < n:
            raise VertexRangeError(f"vertex {x} out of range for n={n}", lineno)
    if u == v:
        raise SelfLoopError(f"self-loop at vertex {u}", lineno)
    uv = (min(u, v), max(u, v))
    if uv in seen:
        raise DuplicateEdgeError(f"duplicate edge {uv[0]} {uv[1]}", lineno)
    seen.add(uv)
    return uv


def parse_graph(text: str) -> Graph:
    lines = _content_lines(text)
    n, _ = _parse_header(lines, weighted=False)
    seen: set = set()
    for lineno, toks in lines[1:]:
        if len(toks) != 2:
            raise MalformedEdgeError("edge line must be 'u v'", lineno)
        _parse_pair(toks, lineno, n, seen)
    return Graph(n, seen)


def parse_weighted_graph(text: str) -> WeightedGraph:
    lines = _content_lines(text)
    n, m = _parse_header(lines, weighted=True)
    if m != n * (n - 1) // 2:
        raise MalformedHeaderError(f"weighted graph must be complete: expected {n * (n - 1) // 2} pairs, header says {m}", lines[0][0])
    seen: set = set()
    weights = {}
    for lineno, toks in lines[1:]:
        if len(toks) != 3:
            raise MalformedEdgeError("weighted line must be 'u v weight'", lineno)
        uv = _parse_pair(toks, lineno, n, seen)
        try:
            w = Fraction(toks[2])
        except (ValueError, ZeroDivisionError):
            raise MalformedEdgeError(f"weight {toks[2]!r} is not an integer or ratio p/q", lineno) from None
        if w < 0:
            raise MalformedEdgeError(f"negative weight {toks[2]}", lineno)
        weights[uv] = w
    return WeightedGraph(n, weights)


def is_weighted_text(text: str) -> bool:
    lines = _content_lines(text)
    return bool(lines) and len(lines[0][1]) == 3 and lines[0][1][2] == "w"


def parse_any(text: str) -> Graph | WeightedGraph:
    return parse_weighted_graph(text) if is_weighted_text(text) else parse_graph(text)


def _fmt_weight(w: Fraction) -> str:
    return str(w.numerator) if w.denominator == 1 else f"{w.numerator}/{w.denominator}"


def serialize_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines)


def serialize_weighted_graph(w: WeightedGraph) -> str:
    items = w.items()
    lines = [f"{w.n} {len(items)} w"]
    lines.extend(f"{u} {v} {_fmt_weight(x)}" for (u, v), x in items)
    return "\n".join(lines)


def serialize(x: Graph | WeightedGraph) -> str:
    if isinstance(x, WeightedGraph):
        return serialize_weighted_graph(x)
    return serialize_graph(x)


def read_graph_file(path: str | Path) -> Graph | WeightedGraph:
    return parse_any(Path(path).read_text())


def to_dot(x: Graph | WeightedGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(x.n))
    if isinstance(x, WeightedGraph):
        lines.extend(f'  {u} -- {v} [label="{_fmt_weight(w)}"];' for (u, v), w in x.items())
    else:
        lines.extend(f"  {u} -- {v};" for u, v in x.sorted_edges())
    lines.append("}")
    return "\n".join(lines)
