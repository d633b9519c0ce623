"""Named check suites that recompute known dem values and compare them with
the expected numbers.  Used by ``demkit reproduce`` and the acceptance tests.
"""
from __future__ import annotations

import csv
import io
import json
import random
import time
from dataclasses import dataclass, field
from typing import Any, Callable

import networkx as nx

from .enumeration import connected_graphs, connected_graphs_fes
from .families import (
    conical_dem_formula,
    conical_prism_ratio,
    generate,
    predicted_dem,
    standard_specs,
    vertex_names,
)
from .graph import (
    all_minimum_vertex_covers,
    build_graph,
    delete_edge,
    delete_vertex,
    graph_invariants,
    vertex_cover_number,
)
from .monitoring import dem_number, is_dem_set, monitored_edges, naive_monitored_edges, restrict_dem
from .perturbation import edge_deletion_record, revalidate_after_edge_deletion, scan, verify_preserving_set, vertex_deletion_record

SUITES = ("families", "perturbation-edge", "perturbation-vertex", "restrict", "table1", "exhaustive-small")


@dataclass
class Case:
    description: str
    expected: Any
    computed: Any
    basis: str
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.expected == self.computed


@dataclass
class ReportDocument:
    suite: str
    cases: list[Case] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def as_dict(self, timings=False) -> dict:
        rows = []
        for c in self.cases:
            row = {"description": c.description, "expected": c.expected, "computed": c.computed,
                   "basis": c.basis, "pass": c.passed}
            if timings:
                row["seconds"] = round(c.seconds, 4)
            rows.append(row)
        return {"suite": self.suite, "pass": self.passed, "cases": rows}

    def to_json(self, timings=False) -> str:
        return json.dumps(self.as_dict(timings), indent=2, default=_jsonable)

    def to_tsv(self, timings=False) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, delimiter="\t", lineterminator="\n")
        w.writerow(["suite", "description", "expected", "computed", "pass", "basis"] + (["seconds"] if timings else []))
        for c in self.cases:
            row = [self.suite, c.description, _text(c.expected), _text(c.computed),
                   "pass" if c.passed else "FAIL", c.basis]
            w.writerow(row + ([f"{c.seconds:.4f}"] if timings else []))
        return buf.getvalue()


def _jsonable(x):
    if isinstance(x, (set, frozenset)):
        return sorted(x)
    raise TypeError(type(x))


def _text(x):
    if isinstance(x, (list, tuple)):
        return "[" + ",".join(_text(y) for y in x) + "]"
    return str(x).lower() if isinstance(x, bool) else str(x)


def _case(cases, description, expected, basis, compute: Callable[[], Any]):
    t = time.perf_counter()
    computed = compute()
    cases.append(Case(description, expected, computed, basis, time.perf_counter() - t))


def _dem(G):
    return dem_number(G).value


def _pair(record):
    return [record.dem_before, record.dem_after]


def _named_edge(spec, a, b):
    G = generate(spec)
    names = vertex_names(spec)
    return G, G.edge_id(names[a], names[b])


# suites -----------------------------------------------------------------------------


def families_suite() -> list[Case]:
    cases = []
    for spec in standard_specs(20):
        cf = predicted_dem(spec)
        if cf.applicable:
            _case(cases, f"dem({spec})", cf.value, cf.condition, lambda s=spec: _dem(generate(s)))
    _case(cases, "conical(100,402) closed form", 716, "layered ceiling sum",
          lambda: conical_dem_formula(100, 402))
    _case(cases, "402/716 to 6 places", 0.561453, "prism over conical, both from closed forms",
          lambda: round(conical_prism_ratio(100, 402)["prism_over_conical"], 6))
    return cases


def table1_rows():
    """Three-vertex sets of g6_prime and the edges each leaves unmonitored."""
    return [
        (("v1", "v3", "v6"), [("v2", "v4")]),
        (("v1", "v4", "v5"), [("v2", "v6")]),
        (("v1", "v4", "v6"), [("v3", "v5")]),
        (("v2", "v3", "v5"), [("v4", "v6")]),
        (("v2", "v3", "v6"), [("v1", "v5")]),
        (("v2", "v4", "v5"), [("v1", "v3")]),
        (("v1", "v3", "v5"), [("v2", "v6"), ("v2", "v4"), ("v4", "v6")]),
        (("v2", "v4", "v6"), [("v1", "v3"), ("v1", "v5"), ("v3", "v5")]),
    ]


def table1_suite() -> list[Case]:
    G = generate("g6_prime")
    names = vertex_names("g6_prime")
    label = {i: s for s, i in names.items()}
    cases = []

    def uncovered(M):
        check = is_dem_set(G, [names[x] for x in M])
        return sorted(tuple(sorted((label[u], label[v]))) for u, v in check.uncovered.pairs(G))

    for M, missing in table1_rows():
        want = sorted(tuple(sorted(p)) for p in missing)
        _case(cases, "uncovered by {" + ",".join(M) + "}", want, "unmonitored edges of g6_prime",
              lambda M=M: uncovered(M))
    return cases


def perturbation_edge_suite() -> list[Case]:
    cases = []
    for spec, a, b, before, after, why in [
        ("g8_star", "u1", "u5", 6, 8, "edge deletion can raise dem by 2"),
        ("g6_prime", "v3", "v4", 4, 2, "edge deletion can lower dem by 2"),
    ]:
        G, e = _named_edge(spec, a, b)
        _case(cases, f"{spec} - {a}{b}: dem before, after", [before, after], why,
              lambda G=G, e=e: _pair(edge_deletion_record(G, e)))
    _case(cases, "C_5 - e", [2, 1], "cycle minus an edge is a path",
          lambda: _pair(edge_deletion_record(generate("cycle:5"), 0)))
    _case(cases, "K_{3,3} - e", 0, "dem(K_{n,n} - e) = n",
          lambda: edge_deletion_record(generate("complete_bipartite:3,3"), 0).delta)
    _case(cases, "P_5 edge deltas", [0, 1, 1, 0], "interior path edges split into two paths",
          lambda: [r.delta for r in scan(generate("path:5")).records])
    _case(cases, "C_6 edge deltas", [-1] * 6, "cycle minus an edge is a path",
          lambda: [r.delta for r in scan(generate("cycle:6")).records])
    G8, e8 = _named_edge("g8_star", "u1", "u5")
    _case(cases, "revalidate g8_star basis after u1u5", False, "no 6-set covers g8_star - u1u5",
          lambda: revalidate_after_edge_deletion(G8, dem_number(G8).basis, e8).ok)
    for n in (6, 7, 8):
        E = [(0, i - 1) for i in range(4, n + 1)] + [(1, i - 1) for i in range(4, n + 1)]
        _case(cases, f"book({n}) minus {len(E)} spoke edges keeps dem", [True, 2, 2 * n - 6],
              "deleting 2n - 6 edges can keep dem = 2",
              lambda n=n, E=E: [(c := verify_preserving_set(generate(f"book:{n}"), E)).ok, c.dem_after, len(E)])
    return cases


def perturbation_vertex_suite() -> list[Case]:
    cases = []
    for k in range(1, 5):
        _case(cases, f"kipas({2 * k + 2}) apex deletion delta", -k, "dem(kipas(2k+2)) = k + 1, path leaves 1",
              lambda k=k: vertex_deletion_record(generate(f"kipas:{2 * k + 2}"), 0).delta)
    for k in range(1, 5):
        _case(cases, f"spider({k}) center deletion delta", k, "tree splits into k + 1 edges",
              lambda k=k: vertex_deletion_record(generate(f"spider:{k}"), 0).delta)
    _case(cases, "conical(2,9) center deletion", [7, 9], "prism C_9 □ K_2 has dem 9",
          lambda: _pair(vertex_deletion_record(generate("conical:2,9"), 0)))
    _case(cases, "P_6 minus v3", 1, "path splits into two non-trivial paths",
          lambda: vertex_deletion_record(generate("path:6"), 2).delta)
    _case(cases, "K_6 minus a vertex", [5, 4], "K_n minus a vertex is K_(n-1)",
          lambda: _pair(vertex_deletion_record(generate("complete:6"), 0)))
    _case(cases, "K_4 vertex deltas", [-1] * 4, "K_n minus a vertex is K_(n-1)",
          lambda: [r.delta for r in scan(generate("complete:4"), "vertices").records])
    return cases


def random_spanning_tree(n: int, rng: random.Random) -> list[tuple[int, int]]:
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    T = nx.from_prufer_sequence([rng.randrange(n) for _ in range(n - 2)])
    return sorted((min(u, v), max(u, v)) for u, v in T.edges())


def restrict_suite(trials: int = 50, seed: int = 2024) -> list[Case]:
    cases = []
    K4 = generate("complete:4")
    _case(cases, "K_4 restricted to the star at v0", 1, "star tree inside K_4",
          lambda: restrict_dem(K4, [(0, 1), (0, 2), (0, 3)]).value)
    _case(cases, "K_4 restricted to path v0v3v1v2", 2, "path tree inside K_4",
          lambda: restrict_dem(K4, [(0, 3), (1, 3), (1, 2)]).value)
    for n in range(2, 10):
        path = [(i, i + 1) for i in range(n - 1)]
        _case(cases, f"K_{n} restricted to a Hamiltonian path", n // 2, "beta(P_n) = floor(n/2)",
              lambda n=n, path=path: restrict_dem(generate(f"complete:{n}"), path).value)
    rng = random.Random(seed)
    for t in range(trials):
        n = rng.randint(2, 9)
        tree = random_spanning_tree(n, rng)
        beta = vertex_cover_number(build_graph(n, tree))
        _case(cases, f"random spanning tree #{t} of K_{n}", [beta, True],
              "restricted dem on a spanning tree of K_n equals its vertex cover number",
              lambda n=n, tree=tree, beta=beta: [restrict_dem(generate(f"complete:{n}"), tree).value,
                                                 1 <= beta <= n // 2])
    return cases


def _forest(G, edge_ids):
    parent = list(range(G.n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in edge_ids:
        a, b = (find(w) for w in G.edges[e])
        if a == b:
            return False
        parent[a] = b
    return True


def exhaustive_counts(max_n: int = 6) -> dict[str, int]:
    """Violation counters over every connected graph with at most ``max_n``
    vertices (plus order 7 with fes <= 2 for the fes checks)."""
    v = dict.fromkeys([
        "graphs", "edge_delta_above_2", "vertex_gap_above_n_minus_2", "vertex_gap_equal_not_k3",
        "em_not_forest", "em_missing_incident", "fast_naive_mismatch",
        "vertex_cover_not_dem", "dem_above_beta", "fes_bound", "fes_equality", "fes_graphs",
    ], 0)
    for n in range(1, max_n + 1):
        for G in connected_graphs(n):
            v["graphs"] += 1
            dem = _dem(G)
            for e in range(G.m):
                if _dem(delete_edge(G, e)) - dem > 2:
                    v["edge_delta_above_2"] += 1
            for x in range(G.n):
                H, _ = delete_vertex(G, x)
                if H.m == 0:
                    continue
                gap = dem - _dem(H)
                if gap > n - 2:
                    v["vertex_gap_above_n_minus_2"] += 1
                elif gap == n - 2 and not (n == 3 and G.m == 3):
                    v["vertex_gap_equal_not_k3"] += 1
            for x in range(G.n):
                em = monitored_edges(G, x)
                if not _forest(G, em):
                    v["em_not_forest"] += 1
                if any(G.edge_id(x, y) not in em for y in G.adjacency[x]):
                    v["em_missing_incident"] += 1
                if em != naive_monitored_edges(G, x):
                    v["fast_naive_mismatch"] += 1
            for cover in all_minimum_vertex_covers(G):
                if not is_dem_set(G, cover).ok:
                    v["vertex_cover_not_dem"] += 1
            if dem > graph_invariants(G).beta:
                v["dem_above_beta"] += 1
    for n in range(1, 8):
        pool = connected_graphs_fes(n, 2)
        for G in pool:
            f = graph_invariants(G).fes
            dem = _dem(G)
            v["fes_graphs"] += 1
            if dem > f + 1:
                v["fes_bound"] += 1
            if f <= 1 and G.m > 0 and dem != f + 1:
                v["fes_equality"] += 1
    return v


def exhaustive_suite() -> list[Case]:
    t = time.perf_counter()
    counts = exhaustive_counts()
    elapsed = time.perf_counter() - t
    cases = [Case("connected graphs with n <= 6", 143, counts["graphs"], "1+1+2+6+21+112 classes", elapsed),
             Case("connected graphs with n <= 7, fes <= 2", 1 + 1 + 2 + 5 + 13 + 38 + 111, counts["fes_graphs"],
                  "trees, unicyclic and bicyclic classes")]
    basis = {
        "edge_delta_above_2": "dem(G - e) - dem(G) <= 2",
        "vertex_gap_above_n_minus_2": "dem(G) - dem(G \\ v) <= n - 2",
        "vertex_gap_equal_not_k3": "equality only at K_3",
        "em_not_forest": "EM(x) induces a forest",
        "em_missing_incident": "edges at x are in EM(x)",
        "fast_naive_mismatch": "fast EM equals re-BFS EM",
        "vertex_cover_not_dem": "every minimum vertex cover is a DEM set",
        "dem_above_beta": "dem <= beta",
        "fes_bound": "dem <= fes + 1",
        "fes_equality": "dem = fes + 1 when fes <= 1",
    }
    for key, why in basis.items():
        cases.append(Case(f"violations: {key}", 0, counts[key], why))
    return cases


_RUNNERS = {
    "families": families_suite,
    "perturbation-edge": perturbation_edge_suite,
    "perturbation-vertex": perturbation_vertex_suite,
    "restrict": restrict_suite,
    "table1": table1_suite,
    "exhaustive-small": exhaustive_suite,
}


def run_reproduce(suite: str) -> ReportDocument:
    if suite == "all":
        doc = ReportDocument("all")
        for name in SUITES:
            for c in _RUNNERS[name]():
                c.description = f"[{name}] {c.description}"
                doc.cases.append(c)
        return doc
    if suite not in _RUNNERS:
        raise KeyError(f"unknown suite {suite!r}; choose from {', '.join(SUITES + ('all',))}")
    return ReportDocument(suite, _RUNNERS[suite]())
