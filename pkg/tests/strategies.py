"""Hypothesis strategies and brute-force oracles shared by the tests."""
from itertools import combinations

from hypothesis import strategies as st

from demkit.graph import bfs_distances, build_graph


@st.composite
def graphs(draw, min_n=1, max_n=9, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = {p for p, k in zip(pairs, keep) if k}
    if connected:
        for v in range(1, n):
            u = draw(st.integers(0, v - 1))
            edges.add((u, v))
    return build_graph(n, sorted(edges))


def connected_graphs(min_n=1, max_n=9):
    return graphs(min_n=min_n, max_n=max_n, connected=True)


def brute_em(G, x):
    """EM(x) straight from the definition."""
    before = bfs_distances(G, x)
    return {e for e in range(G.m) if bfs_distances(G, x, skip_edge=e) != before}


def brute_dem(G):
    """Smallest vertex set covering all edges, first in lexicographic order."""
    em = [brute_em(G, x) for x in range(G.n)]
    everything = set(range(G.m))
    for k in range(G.n + 1):
        for S in combinations(range(G.n), k):
            if set().union(*(em[x] for x in S)) >= everything:
                return k, S
    raise AssertionError("unreachable")


def brute_beta(G):
    for k in range(G.n + 1):
        for S in combinations(range(G.n), k):
            if all(u in S or v in S for u, v in G.edges):
                return k
    raise AssertionError("unreachable")


def is_acyclic(n, pairs):
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    for u, v in pairs:
        a, b = find(u), find(v)
        if a == b:
            return False
        parent[a] = b
    return True
