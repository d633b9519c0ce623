"""How dem reacts to deleting edges or vertices.

All deltas are ``after - before``.  Disconnected results are handled by
summing over components, so isolated vertices add nothing.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from itertools import combinations
from typing import Iterable

from .graph import Graph, GraphError, connected_components, delete_edge, delete_edges, delete_vertex
from .monitoring import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    CoverCheck,
    MonitoringError,
    dem_number,
    is_dem_set,
)

FIELDS = ("element", "kind", "degrees", "dem_before", "dem_after", "delta", "disconnects", "revalidation")


@dataclass(frozen=True)
class PerturbationRecord:
    element: int
    kind: str  # "edge" or "vertex"
    endpoints: tuple[int, ...]
    degrees: tuple[int, ...]
    dem_before: int
    dem_after: int
    disconnects: bool
    revalidation: bool | None = None

    @property
    def delta(self) -> int:
        return self.dem_after - self.dem_before

    def as_dict(self) -> dict:
        d = asdict(self)
        d["endpoints"] = list(self.endpoints)
        d["degrees"] = list(self.degrees)
        d["delta"] = self.delta
        return d


@dataclass(frozen=True)
class PerturbationReport:
    fingerprint: str
    mode: str
    records: tuple[PerturbationRecord, ...]

    @property
    def extremes(self) -> dict[str, tuple[PerturbationRecord, ...]]:
        if not self.records:
            return {"max": (), "min": ()}
        hi = max(r.delta for r in self.records)
        lo = min(r.delta for r in self.records)
        return {
            "max": tuple(r for r in self.records if r.delta == hi),
            "min": tuple(r for r in self.records if r.delta == lo),
        }

    def as_dict(self) -> dict:
        ext = self.extremes
        return {
            "fingerprint": self.fingerprint,
            "mode": self.mode,
            "records": [r.as_dict() for r in self.records],
            "extremes": {
                "max_delta": ext["max"][0].delta if ext["max"] else None,
                "max_elements": [r.element for r in ext["max"]],
                "min_delta": ext["min"][0].delta if ext["min"] else None,
                "min_elements": [r.element for r in ext["min"]],
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True)

    def to_tsv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, delimiter="\t", lineterminator="\n")
        w.writerow(FIELDS)
        for r in self.records:
            rv = "-" if r.revalidation is None else str(r.revalidation).lower()
            w.writerow([r.element, r.kind, ",".join(map(str, r.degrees)), r.dem_before,
                        r.dem_after, r.delta, str(r.disconnects).lower(), rv])
        return buf.getvalue()


def _components(G):
    return len(connected_components(G))


def _monitors(G, M):
    try:
        return sorted({G.check_vertex(int(x)) for x in M})
    except GraphError as exc:
        raise MonitoringError(str(exc)) from None


def revalidate_after_edge_deletion(G: Graph, M: Iterable[int], e: int) -> CoverCheck:
    """Is M still a DEM set once edge ``e`` is gone?

    Monitoring is judged in G - e itself; ``uncovered`` refers to the edge ids
    of G - e.
    """
    M = _monitors(G, M)
    try:
        H = delete_edge(G, e)
    except GraphError as exc:
        raise MonitoringError(str(exc)) from None
    return is_dem_set(H, M)


def _dem(G, budget, element=None):
    try:
        return dem_number(G, budget=budget).value
    except BudgetExceeded as exc:
        if element is None:
            raise
        raise BudgetExceeded(exc.component_size, exc.examined, exc.budget, element) from None


def edge_deletion_record(G: Graph, e: int, M: Iterable[int] | None = None, *,
                         budget: int = DEFAULT_BUDGET, dem_before: int | None = None) -> PerturbationRecord:
    u, v = G.edges[G.check_edge(e)]
    H = delete_edge(G, e)
    before = _dem(G, budget) if dem_before is None else dem_before
    after = _dem(H, budget, f"edge {e} ({u},{v})")
    verdict = None if M is None else revalidate_after_edge_deletion(G, M, e).ok
    return PerturbationRecord(
        element=e, kind="edge", endpoints=(u, v), degrees=(G.degree(u), G.degree(v)),
        dem_before=before, dem_after=after,
        disconnects=_components(H) > _components(G), revalidation=verdict,
    )


def vertex_deletion_record(G: Graph, v: int, *, budget: int = DEFAULT_BUDGET,
                           dem_before: int | None = None) -> PerturbationRecord:
    H, _ = delete_vertex(G, v)
    before = _dem(G, budget) if dem_before is None else dem_before
    after = _dem(H, budget, f"vertex {v}")
    # a lone vertex vanishing is not a disconnection
    split = _components(H) > _components(G) - (1 if G.degree(v) == 0 else 0)
    return PerturbationRecord(
        element=v, kind="vertex", endpoints=(v,), degrees=(G.degree(v),),
        dem_before=before, dem_after=after, disconnects=split,
    )


def scan(G: Graph, mode: str = "edges", M: Iterable[int] | None = None, *,
         budget: int = DEFAULT_BUDGET) -> PerturbationReport:
    """One record per edge (or vertex), in id order."""
    before = _dem(G, budget)
    if mode == "edges":
        M = None if M is None else _monitors(G, M)
        recs = [edge_deletion_record(G, e, M, budget=budget, dem_before=before) for e in range(G.m)]
    elif mode == "vertices":
        if M is not None:
            raise ValueError("a monitor set only applies to edge scans")
        recs = [vertex_deletion_record(G, v, budget=budget, dem_before=before) for v in range(G.n)]
    else:
        raise ValueError(f"mode must be 'edges' or 'vertices', not {mode!r}")
    return PerturbationReport(G.fingerprint, mode, tuple(recs))


# deletion sets that keep dem ------------------------------------------------------


@dataclass(frozen=True)
class PreservationCheck:
    ok: bool
    dem_before: int
    dem_after: int

    def __bool__(self):
        return self.ok


def _edge_ids(G, E):
    ids = set()
    for item in E:
        if isinstance(item, (tuple, list)):
            try:
                ids.add(G.edge_id(int(item[0]), int(item[1])))
            except KeyError:
                raise MonitoringError(f"{item[0]}-{item[1]} is not an edge") from None
        else:
            try:
                ids.add(G.check_edge(int(item)))
            except GraphError as exc:
                raise MonitoringError(str(exc)) from None
    return sorted(ids)


def verify_preserving_set(G: Graph, E: Iterable, *, budget: int = DEFAULT_BUDGET) -> PreservationCheck:
    """Does deleting the edges in E (ids or vertex pairs) leave dem unchanged?"""
    ids = _edge_ids(G, E)
    before = _dem(G, budget)
    after = _dem(delete_edges(G, ids), budget)
    return PreservationCheck(before == after, before, after)


@dataclass(frozen=True)
class PreservingSearch:
    edges: tuple[int, ...]
    dem: int
    optimal: bool
    examined: int

    @property
    def size(self):
        return len(self.edges)


def _one_piece(H):
    return sum(1 for c in connected_components(H) if len(c) > 1) <= 1


def max_preserving_deletion(G: Graph, cap: int = 20, *, require_connected: bool = False,
                            budget: int = DEFAULT_BUDGET) -> PreservingSearch:
    """Largest edge set E (lexicographically smallest among ties) with
    dem(G - E) = dem(G).

    Every subset is tried when m <= cap.  Beyond that only subsets of the
    first ``cap`` edges are searched and ``optimal`` is False.  With
    ``require_connected`` the non-trivial part of G - E must stay in one
    component.
    """
    target = _dem(G, budget)
    pool = range(min(G.m, cap))
    examined = 0
    for size in range(len(pool), 0, -1):
        for E in combinations(pool, size):
            examined += 1
            H = delete_edges(G, E)
            if require_connected and not _one_piece(H):
                continue
            if _dem(H, budget) == target:
                return PreservingSearch(E, target, G.m <= cap, examined)
    return PreservingSearch((), target, G.m <= cap, examined)


__all__ = [
    "PerturbationRecord",
    "PerturbationReport",
    "PreservationCheck",
    "PreservingSearch",
    "edge_deletion_record",
    "max_preserving_deletion",
    "revalidate_after_edge_deletion",
    "scan",
    "vertex_deletion_record",
    "verify_preserving_set",
]
