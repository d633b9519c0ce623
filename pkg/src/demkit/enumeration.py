"""Exhaustive small-graph catalogues, one representative per isomorphism class.

Representatives are the graphs whose edge bitmask over the pairs of K_n is
smallest among all relabellings.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

import networkx as nx
import numpy as np

from . import kernels
from .graph import Graph, build_graph, graph_invariants

MAX_FULL_ORDER = 6


@lru_cache(maxsize=None)
def _pairs(n):
    return tuple(combinations(range(n), 2))


@lru_cache(maxsize=None)
def _edge_maps(n):
    pairs = _pairs(n)
    index = {p: i for i, p in enumerate(pairs)}
    maps = np.empty((max(1, _factorial(n)), len(pairs)), dtype=np.int64)
    for r, perm in enumerate(permutations(range(n))):
        for i, (a, b) in enumerate(pairs):
            x, y = perm[a], perm[b]
            maps[r, i] = index[(x, y) if x < y else (y, x)]
    return maps


def _factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def _graph(n, mask):
    return build_graph(n, [p for i, p in enumerate(_pairs(n)) if (mask >> i) & 1])


def _canonical_unique(n, masks):
    masks = np.asarray(masks, dtype=np.int64)
    if len(masks) == 0:
        return []
    canon = kernels.canonical_masks(masks, _edge_maps(n))
    return [int(c) for c in np.unique(canon)]


def _sort_key(G):
    return (G.m, G.edges)


def connected_graphs(n: int) -> list[Graph]:
    """Every connected graph on n vertices up to isomorphism (n <= 6).

    Found by testing all edge subsets of K_n for connectivity.
    """
    if not 1 <= n <= MAX_FULL_ORDER:
        raise ValueError(f"full enumeration supports 1 <= n <= {MAX_FULL_ORDER}")
    pairs = _pairs(n)
    masks = np.arange(1 << len(pairs), dtype=np.int64)
    eu = np.array([p[0] for p in pairs], dtype=np.int64)
    ev = np.array([p[1] for p in pairs], dtype=np.int64)
    keep = kernels.connected_masks(n, masks, eu, ev)
    return sorted((_graph(n, c) for c in _canonical_unique(n, masks[keep])), key=_sort_key)


def connected_graphs_fes(n: int, max_fes: int) -> list[Graph]:
    """Connected graphs on n vertices with m - n + 1 <= max_fes.

    Built from the non-isomorphic trees of order n with up to ``max_fes``
    extra edges; practical for n up to about 8.
    """
    if n < 1:
        raise ValueError("n must be positive")
    pairs = _pairs(n)
    index = {p: i for i, p in enumerate(pairs)}
    trees = [nx.empty_graph(1)] if n == 1 else nx.nonisomorphic_trees(n)
    masks = set()
    for T in trees:
        base = 0
        for a, b in T.edges():
            base |= 1 << index[(min(a, b), max(a, b))]
        free = [i for i in range(len(pairs)) if not (base >> i) & 1]
        for extra in range(max_fes + 1):
            for add in combinations(free, extra):
                mask = base
                for i in add:
                    mask |= 1 << i
                masks.add(mask)
    return sorted((_graph(n, c) for c in _canonical_unique(n, sorted(masks))), key=_sort_key)


def small_connected_graphs(max_n: int = MAX_FULL_ORDER) -> list[Graph]:
    return [G for n in range(1, max_n + 1) for G in connected_graphs(n)]


def fes(G: Graph) -> int:
    return graph_invariants(G).fes
