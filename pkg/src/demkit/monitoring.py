"""Distance-edge monitoring: monitored-edge sets, DEM-set checks and exact /
greedy DEM numbers.

A vertex x monitors edge e when deleting e changes the hop distance from x to
some vertex (a finite distance becoming unreachable counts as a change).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .graph import (
    UNREACHABLE,
    Graph,
    GraphError,
    base_graph,
    bfs_distances,
    connected_components,
    induced_subgraph,
)

DEFAULT_BUDGET = 10**8


class MonitoringError(ValueError):
    """Bad vertex/edge ids, or an edge set taken from a different graph."""


class BudgetExceeded(RuntimeError):
    """Exact search needed more coverage tests than allowed."""

    def __init__(self, component_size, examined, budget, element=None):
        self.component_size = component_size
        self.examined = examined
        self.budget = budget
        self.element = element
        msg = (f"exact search budget of {budget} coverage tests exceeded "
               f"on a component with {component_size} vertices")
        if element is not None:
            msg += f" (while deleting {element})"
        super().__init__(msg)


# edge sets ---------------------------------------------------------------------


@dataclass(frozen=True)
class EdgeSet:
    """Edge ids of one specific graph, stored as a bitmask."""

    fingerprint: str
    bits: int = 0

    @classmethod
    def of(cls, G: Graph, ids: Iterable[int] = ()) -> "EdgeSet":
        bits = 0
        for e in ids:
            bits |= 1 << G.check_edge(e)
        return cls(G.fingerprint, bits)

    @classmethod
    def full(cls, G: Graph) -> "EdgeSet":
        return cls(G.fingerprint, (1 << G.m) - 1)

    def _same(self, other):
        if not isinstance(other, EdgeSet):
            return NotImplemented
        if other.fingerprint != self.fingerprint:
            raise MonitoringError("edge sets belong to different graphs")
        return other

    def __or__(self, other):
        other = self._same(other)
        return EdgeSet(self.fingerprint, self.bits | other.bits)

    def __and__(self, other):
        other = self._same(other)
        return EdgeSet(self.fingerprint, self.bits & other.bits)

    def __sub__(self, other):
        other = self._same(other)
        return EdgeSet(self.fingerprint, self.bits & ~other.bits)

    def __len__(self):
        return self.bits.bit_count()

    def __contains__(self, e):
        return e >= 0 and bool((self.bits >> e) & 1)

    def __iter__(self):
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def ids(self) -> tuple[int, ...]:
        return tuple(self)

    def pairs(self, G: Graph) -> list[tuple[int, int]]:
        if G.fingerprint != self.fingerprint:
            raise MonitoringError("edge set does not belong to this graph")
        return [G.edges[e] for e in self]


@dataclass(frozen=True)
class MonitorMap:
    """EM(x) for every vertex x of one graph."""

    fingerprint: str
    sets: tuple[EdgeSet, ...]

    def __getitem__(self, x):
        return self.sets[x]

    def __len__(self):
        return len(self.sets)


@dataclass(frozen=True)
class DemResult:
    value: int
    basis: tuple[int, ...] | None
    subsets_examined: int
    method: str


@dataclass(frozen=True)
class WitnessPair:
    x: int
    y: int
    d_before: int
    d_after: int


@dataclass(frozen=True)
class CoverCheck:
    """Outcome of a DEM-set test: ``ok`` plus the edges left unmonitored."""

    ok: bool
    uncovered: EdgeSet

    def __bool__(self):
        return self.ok


# monitored edges ------------------------------------------------------------------


def _n_words(m):
    return max(1, (m + 63) // 64)


def monitor_words(G: Graph) -> np.ndarray:
    """EM sets of all vertices as a read-only ``(n, words)`` uint64 array."""
    if "em" not in G._cache:
        indptr, indices = G.csr()
        eu, ev = G.edge_arrays()
        words = kernels.monitor_words(G.distance_matrix(), indptr, indices, eu, ev, _n_words(G.m))
        words.setflags(write=False)
        G._cache["em"] = words
    return G._cache["em"]


def _row_int(row):
    value = 0
    for i, w in enumerate(row):
        value |= int(w) << (64 * i)
    return value


def _check_vertices(G, M):
    try:
        return sorted({G.check_vertex(int(x)) for x in M})
    except GraphError as exc:
        raise MonitoringError(str(exc)) from None


def naive_monitored_edges(G: Graph, x: int) -> EdgeSet:
    """EM(x) by definition: re-run BFS in G - e for every edge e."""
    _check_vertices(G, [x])
    before = bfs_distances(G, x)
    hit = [e for e in range(G.m) if bfs_distances(G, x, skip_edge=e) != before]
    return EdgeSet.of(G, hit)


def monitored_edges(G: Graph, x: int, strategy: str = "fast") -> EdgeSet:
    """EM(x).

    ``fast`` uses one BFS layering: edge uv with d(v) = d(u) + 1 is monitored
    iff u is v's only neighbour at distance d(v) - 1 (otherwise v keeps its
    distance and so does everything behind it).  ``naive`` recomputes
    distances in every G - e.
    """
    if strategy == "naive":
        return naive_monitored_edges(G, x)
    if strategy != "fast":
        raise ValueError(f"unknown strategy {strategy!r}")
    (x,) = _check_vertices(G, [x])
    return EdgeSet(G.fingerprint, _row_int(monitor_words(G)[x]))


def monitor_map(G: Graph, strategy: str = "fast") -> MonitorMap:
    return MonitorMap(G.fingerprint, tuple(monitored_edges(G, x, strategy) for x in range(G.n)))


def coverage(G: Graph, M: Iterable[int]) -> EdgeSet:
    """Union of EM(x) over x in M."""
    words = monitor_words(G)
    bits = 0
    for x in _check_vertices(G, M):
        bits |= _row_int(words[x])
    return EdgeSet(G.fingerprint, bits)


def witnesses(G: Graph, M: Iterable[int], e: int, limit: int | None = None) -> list[WitnessPair]:
    """Pairs (x, y), x in M, whose distance changes when edge ``e`` is deleted."""
    M = _check_vertices(G, M)
    try:
        G.check_edge(e)
    except GraphError as exc:
        raise MonitoringError(str(exc)) from None
    out = []
    for x in M:
        before = bfs_distances(G, x)
        after = bfs_distances(G, x, skip_edge=e)
        for y in range(G.n):
            if before[y] != after[y]:
                out.append(WitnessPair(x, y, before[y], after[y]))
                if limit is not None and len(out) >= limit:
                    return out
    return out


def is_dem_set(G: Graph, M: Iterable[int]) -> CoverCheck:
    uncovered = EdgeSet.full(G) - coverage(G, M)
    return CoverCheck(len(uncovered) == 0, uncovered)


def forced_endpoint_edges(G: Graph) -> EdgeSet:
    """Edges uv whose endpoint distances, seen from every other neighbour of u
    or v, survive the deletion of uv.  Such edges are monitored only by u and v.
    """
    dist = G.distance_matrix()
    forced = []
    for e, (u, v) in enumerate(G.edges):
        du = bfs_distances(G, u, skip_edge=e)
        dv = bfs_distances(G, v, skip_edge=e)
        around = (set(G.adjacency[u]) | set(G.adjacency[v])) - {u, v}
        if all(du[w] == dist[u, w] and dv[w] == dist[v, w] for w in around):
            forced.append(e)
    return EdgeSet.of(G, forced)


# exact search -----------------------------------------------------------------------


def _search(words, candidates, target_ids, budget, size_hint):
    """Lexicographically first minimum subset of ``candidates`` whose EM sets
    cover ``target_ids``.  Returns ``(chosen vertices, coverage tests)``."""
    candidates = np.asarray(candidates, dtype=np.int64)
    target_ids = np.asarray(target_ids, dtype=np.int64)
    n_words = words.shape[1]
    if len(target_ids) == 0:
        return (), 0
    cover = np.ascontiguousarray(words[candidates])
    target = np.zeros(n_words, dtype=np.uint64)
    for e in target_ids:
        target[e >> 6] |= np.uint64(1) << np.uint64(e & 63)

    # hits[i, j]: candidate i monitors target edge j
    hits = ((cover[:, target_ids >> 6] >> (target_ids & 63).astype(np.uint64)) & np.uint64(1)).astype(bool)
    if not hits.any(axis=0).all():
        raise MonitoringError("some target edge is monitored by no candidate")
    last = np.full(int(target_ids.max()) + 1, -1, dtype=np.int64)
    last[target_ids] = len(candidates) - 1 - np.argmax(hits[::-1], axis=0)

    # lower bound: target edges with pairwise disjoint monitor sets each need
    # their own vertex; also every vertex covers at most `widest` edges
    widest = int(hits.sum(axis=1).max())
    lower = max(1, -(-len(target_ids) // widest))
    used = np.zeros(len(candidates), dtype=bool)
    disjoint = 0
    for j in np.argsort(hits.sum(axis=0), kind="stable"):
        col = hits[:, j]
        if not (col & used).any():
            used |= col
            disjoint += 1
    lower = max(lower, disjoint)

    examined = 0
    for k in range(lower, len(candidates) + 1):
        status, chosen, nodes = kernels.cover_search(cover, target, last, k, budget - examined)
        examined += int(nodes)
        if status == -1:
            raise BudgetExceeded(size_hint, examined, budget)
        if status == 1:
            return tuple(int(candidates[i]) for i in chosen), examined
    raise MonitoringError("no cover exists")  # unreachable: all candidates cover every edge


def _component_edges(G, comp):
    inside = set(comp)
    return [e for e, (u, _) in enumerate(G.edges) if u in inside]


def dem_number(G: Graph, *, budget: int = DEFAULT_BUDGET, use_base_graph: bool = False) -> DemResult:
    """Exact DEM number, summed over connected components.

    The basis is the lexicographically smallest minimum DEM set.  With
    ``use_base_graph`` the degree-1 stripping shortcut is applied to cyclic
    components; the value is the same but no basis is reported.
    """
    words = monitor_words(G)
    value, basis, examined = 0, [], 0
    for comp in connected_components(G):
        if len(comp) == 1:
            continue
        edge_ids = _component_edges(G, comp)
        if len(edge_ids) == len(comp) - 1:
            value += 1
            basis.append(comp[0])
            continue
        if use_base_graph:
            sub, _ = induced_subgraph(G, comp)
            core, _ = base_graph(sub)
            inner = dem_number(core, budget=budget - examined)
            value += inner.value
            examined += inner.subsets_examined
            continue
        chosen, tests = _search(words, comp, edge_ids, budget - examined, len(comp))
        examined += tests
        value += len(chosen)
        basis.extend(chosen)
    if use_base_graph:
        return DemResult(value, None, examined, "exact")
    return DemResult(value, tuple(sorted(basis)), examined, "exact")


def _resolve_edges(G, sub_edges):
    ids = set()
    for item in sub_edges:
        if isinstance(item, (tuple, list)):
            u, v = item
            try:
                ids.add(G.edge_id(int(u), int(v)))
            except KeyError:
                raise MonitoringError(f"{u}-{v} is not an edge of G") from None
        else:
            try:
                ids.add(G.check_edge(int(item)))
            except GraphError as exc:
                raise MonitoringError(str(exc)) from None
    return sorted(ids)


def restrict_dem(G: Graph, sub_edges: Iterable[int | Sequence[int]], *, budget: int = DEFAULT_BUDGET) -> DemResult:
    """dem(G|_H): fewest vertices of H whose EM sets, taken in G, cover E(H).

    ``sub_edges`` lists H's edges as ids of G or as vertex pairs; V(H) is the
    set of their endpoints.
    """
    ids = _resolve_edges(G, sub_edges)
    if not ids:
        return DemResult(0, (), 0, "exact")
    verts = sorted({w for e in ids for w in G.edges[e]})
    chosen, examined = _search(monitor_words(G), verts, ids, budget, len(verts))
    return DemResult(len(chosen), tuple(sorted(chosen)), examined, "exact")


def greedy_dem(G: Graph) -> DemResult:
    """Greedy set cover over the EM sets; ties go to the smallest vertex."""
    rows = [_row_int(r) for r in monitor_words(G)]
    left = (1 << G.m) - 1
    chosen, evaluations = [], 0
    while left:
        best, gain = -1, 0
        for x, r in enumerate(rows):
            evaluations += 1
            g = (r & left).bit_count()
            if g > gain:
                best, gain = x, g
        chosen.append(best)
        left &= ~rows[best]
    basis = tuple(sorted(chosen))
    assert is_dem_set(G, basis).ok
    return DemResult(len(basis), basis, evaluations, "greedy")


__all__ = [
    "DEFAULT_BUDGET",
    "UNREACHABLE",
    "BudgetExceeded",
    "CoverCheck",
    "DemResult",
    "EdgeSet",
    "MonitorMap",
    "MonitoringError",
    "WitnessPair",
    "coverage",
    "dem_number",
    "forced_endpoint_edges",
    "greedy_dem",
    "is_dem_set",
    "monitor_map",
    "monitor_words",
    "monitored_edges",
    "naive_monitored_edges",
    "restrict_dem",
    "witnesses",
]
