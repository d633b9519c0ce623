"""Immutable simple graphs, hop distances, constructions and invariants.

Vertices are dense integers ``0..n-1``.  Edges are stored as pairs ``(u, v)``
with ``u < v`` sorted lexicographically; the position of a pair in
``Graph.edges`` is its edge id.
"""
from __future__ import annotations

import hashlib
from collections import deque
from itertools import combinations
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import kernels

#: Distance to a vertex outside the source's component.
UNREACHABLE = -1


class GraphError(ValueError):
    """Invalid graph input (loop, duplicate edge, vertex out of range)."""


class Graph:
    """Immutable simple undirected graph.

    Build through :func:`build_graph` unless the edge list is already
    canonical.  Derived arrays (CSR adjacency, distance matrix) are cached on
    first use; the graph itself never changes.
    """

    __slots__ = ("n", "edges", "adjacency", "fingerprint", "_index", "_cache")

    def __init__(self, n: int, edges: Sequence[tuple[int, int]]):
        self.n = int(n)
        self.edges = tuple((int(u), int(v)) for u, v in edges)
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adjacency = tuple(tuple(sorted(a)) for a in adj)
        self._index = {e: i for i, e in enumerate(self.edges)}
        digest = hashlib.blake2b(digest_size=10)
        digest.update(f"{self.n};".encode())
        digest.update(";".join(f"{u},{v}" for u, v in self.edges).encode())
        self.fingerprint = digest.hexdigest()
        self._cache = {}

    @property
    def m(self) -> int:
        return len(self.edges)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._index

    def edge_id(self, u: int, v: int) -> int:
        """Edge id of ``uv``; raises ``KeyError`` if absent."""
        key = (min(u, v), max(u, v))
        try:
            return self._index[key]
        except KeyError:
            raise KeyError(f"{u}-{v} is not an edge") from None

    def check_vertex(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range 0..{self.n - 1}")
        return int(v)

    def check_edge(self, e: int) -> int:
        if not 0 <= e < self.m:
            raise GraphError(f"edge id {e} out of range 0..{self.m - 1}")
        return int(e)

    # cached numeric views -------------------------------------------------

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        if "csr" not in self._cache:
            indptr = np.zeros(self.n + 1, dtype=np.int64)
            indptr[1:] = np.cumsum([len(a) for a in self.adjacency])
            indices = np.array([w for a in self.adjacency for w in a], dtype=np.int64)
            self._cache["csr"] = (indptr, indices)
        return self._cache["csr"]

    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        if "earr" not in self._cache:
            eu = np.array([u for u, _ in self.edges], dtype=np.int64)
            ev = np.array([v for _, v in self.edges], dtype=np.int64)
            self._cache["earr"] = (eu, ev)
        return self._cache["earr"]

    def distance_matrix(self) -> np.ndarray:
        """All-pairs hop distances (read-only), ``UNREACHABLE`` across components."""
        if "dist" not in self._cache:
            indptr, indices = self.csr()
            dist = kernels.all_pairs_distances(self.n, indptr, indices)
            dist.setflags(write=False)
            self._cache["dist"] = dist
        return self._cache["dist"]


@dataclass(frozen=True)
class DistVector:
    source: int
    dist: tuple[int, ...]

    def __getitem__(self, v):
        return self.dist[v]

    def __len__(self):
        return len(self.dist)


@dataclass(frozen=True)
class GraphInvariants:
    n: int
    m: int
    component_count: int
    is_tree: bool
    is_forest: bool
    beta: int
    fes: int
    min_degree: int
    max_degree: int


def build_graph(n: int, pairs: Iterable[Sequence[int]], *, allow_duplicates: bool = False) -> Graph:
    """Validate and canonicalise an edge list into a :class:`Graph`.

    Raises :class:`GraphError` on loops, out-of-range vertices, and (unless
    ``allow_duplicates``) repeated pairs.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    seen = set()
    for pair in pairs:
        u, v = (int(x) for x in pair)
        for x in (u, v):
            if not 0 <= x < n:
                raise GraphError(f"vertex {x} out of range 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen and not allow_duplicates:
            raise GraphError(f"duplicate edge {key[0]}-{key[1]}")
        seen.add(key)
    return Graph(n, sorted(seen))


def empty_graph(n: int) -> Graph:
    return Graph(n, ())


def distances_from(G: Graph, x: int) -> DistVector:
    G.check_vertex(x)
    return DistVector(x, tuple(int(d) for d in G.distance_matrix()[x]))


def bfs_distances(G: Graph, x: int, skip_edge: int | None = None) -> list[int]:
    """Plain BFS, optionally ignoring one edge.  Independent of the kernels;
    used as a reference by the naive monitoring oracle."""
    skip = G.edges[skip_edge] if skip_edge is not None else None
    dist = [UNREACHABLE] * G.n
    dist[x] = 0
    queue = deque([x])
    while queue:
        u = queue.popleft()
        for w in G.adjacency[u]:
            if dist[w] == UNREACHABLE and (min(u, w), max(u, w)) != skip:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


# derived graphs ------------------------------------------------------------


def delete_edges(G: Graph, edge_ids: Iterable[int]) -> Graph:
    drop = {G.check_edge(e) for e in edge_ids}
    return Graph(G.n, [e for i, e in enumerate(G.edges) if i not in drop])


def delete_edge(G: Graph, e: int) -> Graph:
    """``G - e``: same vertices, edge ``e`` removed, edge ids re-canonicalised."""
    return delete_edges(G, (e,))


def induced_subgraph(G: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph on ``vertices`` renumbered densely in increasing order.

    Returns the graph and the old-to-new vertex map.
    """
    keep = sorted({G.check_vertex(v) for v in vertices})
    relabel = {v: i for i, v in enumerate(keep)}
    edges = [(relabel[u], relabel[v]) for u, v in G.edges if u in relabel and v in relabel]
    return Graph(len(keep), edges), relabel


def delete_vertex(G: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    """``G \\ v`` with the remaining vertices renumbered, plus the relabel map."""
    G.check_vertex(v)
    return induced_subgraph(G, (w for w in range(G.n) if w != v))


def connected_components(G: Graph) -> list[tuple[int, ...]]:
    """Vertex blocks of the components, each sorted, ordered by smallest vertex."""
    label = [-1] * G.n
    blocks = []
    for s in range(G.n):
        if label[s] >= 0:
            continue
        label[s] = len(blocks)
        block = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.adjacency[u]:
                if label[w] < 0:
                    label[w] = label[s]
                    block.append(w)
                    queue.append(w)
        blocks.append(tuple(sorted(block)))
    return blocks


def base_graph(G: Graph) -> tuple[Graph, dict[int, int]]:
    """Strip degree-1 vertices, all current leaves per round, until none remain.

    Isolated vertices (including those created by stripping) are kept; a
    single edge loses both endpoints in one round.
    """
    alive = set(range(G.n))
    deg = [G.degree(v) for v in range(G.n)]
    while True:
        leaves = [v for v in alive if deg[v] == 1]
        if not leaves:
            break
        for v in leaves:
            alive.discard(v)
        for v in leaves:
            for w in G.adjacency[v]:
                if w in alive:
                    deg[w] -= 1
    return induced_subgraph(G, alive)


def cartesian_product(G: Graph, H: Graph) -> Graph:
    """``G □ H`` with vertex ``(u, v)`` at index ``u * |V(H)| + v``."""
    if G.n == 0 or H.n == 0:
        raise GraphError("cartesian product needs non-empty factors")
    k = H.n
    pairs = []
    for u, u2 in G.edges:
        pairs.extend((u * k + v, u2 * k + v) for v in range(k))
    for v, v2 in H.edges:
        pairs.extend((u * k + v, u * k + v2) for u in range(G.n))
    return build_graph(G.n * k, pairs)


def join_graphs(G: Graph, H: Graph) -> Graph:
    """``G ∨ H``: disjoint union (H shifted by ``G.n``) plus all cross edges."""
    off = G.n
    pairs = list(G.edges)
    pairs += [(u + off, v + off) for u, v in H.edges]
    pairs += [(u, off + v) for u in range(G.n) for v in range(H.n)]
    return build_graph(G.n + H.n, pairs)


def disjoint_union(*graphs: Graph) -> Graph:
    pairs, off = [], 0
    for g in graphs:
        pairs += [(u + off, v + off) for u, v in g.edges]
        off += g.n
    return build_graph(off, pairs)


def is_isomorphic(G: Graph, H: Graph) -> bool:
    """Backtracking isomorphism test with degree-sequence pruning.

    Meant for the small gadgets (n around 20 or less); no certificates.
    """
    if G.n != H.n or G.m != H.m:
        return False
    if sorted(map(len, G.adjacency)) != sorted(map(len, H.adjacency)):
        return False
    order = sorted(range(G.n), key=lambda v: -G.degree(v))
    gmap: dict[int, int] = {}
    used = set()

    def extend(i):
        if i == len(order):
            return True
        v = order[i]
        for w in range(H.n):
            if w in used or H.degree(w) != G.degree(v):
                continue
            if all(H.has_edge(w, gmap[u]) == G.has_edge(v, u) for u in gmap):
                gmap[v] = w
                used.add(w)
                if extend(i + 1):
                    return True
                del gmap[v]
                used.discard(w)
        return False

    return extend(0)


# invariants -----------------------------------------------------------------


def _iter_bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _cover_bits(adj, alive):
    # leaf and isolated-vertex reductions first
    cover = 0
    changed = True
    while changed:
        changed = False
        for v in _iter_bits(alive):
            if not (alive >> v) & 1:
                continue
            nb = adj[v] & alive
            if nb == 0:
                alive &= ~(1 << v)
                changed = True
            elif nb & (nb - 1) == 0:
                cover |= nb
                alive &= ~(nb | (1 << v))
                changed = True
    if not alive:
        return cover
    pivot = max(_iter_bits(alive), key=lambda v: ((adj[v] & alive).bit_count(), -v))
    nb = adj[pivot] & alive
    take_pivot = _cover_bits(adj, alive & ~(1 << pivot)) | (1 << pivot)
    take_nbrs = _cover_bits(adj, alive & ~nb & ~(1 << pivot)) | nb
    best = take_pivot if take_pivot.bit_count() <= take_nbrs.bit_count() else take_nbrs
    return cover | best


def minimum_vertex_cover(G: Graph) -> tuple[int, ...]:
    """One minimum vertex cover, by exact branching on a max-degree vertex
    (either it or its whole neighbourhood is in the cover)."""
    adj = [0] * G.n
    for u, v in G.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return tuple(_iter_bits(_cover_bits(adj, (1 << G.n) - 1)))


def vertex_cover_number(G: Graph) -> int:
    return len(minimum_vertex_cover(G))


def all_minimum_vertex_covers(G: Graph) -> list[tuple[int, ...]]:
    """Every minimum vertex cover, in lexicographic order.  Brute force over
    subsets of size beta, so only sensible for small graphs."""
    beta = vertex_cover_number(G)
    return [c for c in combinations(range(G.n), beta)
            if all(u in c or v in c for u, v in G.edges)]


def graph_invariants(G: Graph) -> GraphInvariants:
    c = len(connected_components(G))
    degrees = [G.degree(v) for v in range(G.n)] or [0]
    fes = G.m - G.n + c
    return GraphInvariants(
        n=G.n,
        m=G.m,
        component_count=c,
        is_tree=(c == 1 and G.m == G.n - 1),
        is_forest=(fes == 0),
        beta=vertex_cover_number(G),
        fes=fes,
        min_degree=min(degrees),
        max_degree=max(degrees),
    )
