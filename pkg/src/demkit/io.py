"""Plain-text edge lists: a ``n m`` header, then m lines ``u v`` (0-based).

Lines starting with ``#`` and blank lines are skipped.
"""
from __future__ import annotations

from pathlib import Path

from .graph import Graph, GraphError, build_graph


class GraphFormatError(GraphError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


def _ints(text, lineno, count):
    parts = text.split()
    if len(parts) != count:
        raise GraphFormatError(f"expected {count} integers, got {text.strip()!r}", lineno)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise GraphFormatError(f"not an integer in {text.strip()!r}", lineno) from None


def parse_graph(text: str) -> Graph:
    header = None
    pairs = []
    seen = set()
    n = m = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            n, m = header = _ints(line, lineno, 2)
            if n < 0 or m < 0:
                raise GraphFormatError("counts must be non-negative", lineno)
            continue
        u, v = _ints(line, lineno, 2)
        if len(pairs) == m:
            raise GraphFormatError(f"more than the declared {m} edges", lineno)
        if u == v:
            raise GraphFormatError(f"loop at vertex {u}", lineno)
        for x in (u, v):
            if not 0 <= x < n:
                raise GraphFormatError(f"vertex {x} out of range 0..{n - 1}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {key[0]} {key[1]}", lineno)
        seen.add(key)
        pairs.append(key)
    if header is None:
        raise GraphFormatError("missing 'n m' header")
    if len(pairs) != m:
        raise GraphFormatError(f"header declares {m} edges but {len(pairs)} were given")
    return build_graph(n, pairs)


def write_graph(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


def read_graph_file(path) -> Graph:
    return parse_graph(Path(path).read_text())


def write_graph_file(G: Graph, path) -> None:
    Path(path).write_text(write_graph(G))
