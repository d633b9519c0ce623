"""Distance-edge monitoring sets of graphs."""
from .graph import (
    UNREACHABLE,
    all_minimum_vertex_covers,
    DistVector,
    Graph,
    GraphError,
    GraphInvariants,
    base_graph,
    bfs_distances,
    build_graph,
    cartesian_product,
    connected_components,
    delete_edge,
    delete_edges,
    delete_vertex,
    disjoint_union,
    distances_from,
    empty_graph,
    graph_invariants,
    induced_subgraph,
    is_isomorphic,
    join_graphs,
    minimum_vertex_cover,
    vertex_cover_number,
)
from .families import FamilyError, FamilySpec, generate, parse_family, predicted_dem
from .monitoring import (
    BudgetExceeded,
    CoverCheck,
    DemResult,
    EdgeSet,
    MonitorMap,
    MonitoringError,
    WitnessPair,
    dem_number,
    forced_endpoint_edges,
    greedy_dem,
    is_dem_set,
    monitor_map,
    monitored_edges,
    restrict_dem,
    witnesses,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CoverCheck",
    "DemResult",
    "DistVector",
    "EdgeSet",
    "FamilyError",
    "FamilySpec",
    "Graph",
    "GraphError",
    "GraphInvariants",
    "MonitorMap",
    "MonitoringError",
    "UNREACHABLE",
    "WitnessPair",
    "all_minimum_vertex_covers",
    "base_graph",
    "bfs_distances",
    "build_graph",
    "cartesian_product",
    "connected_components",
    "delete_edge",
    "delete_edges",
    "delete_vertex",
    "dem_number",
    "disjoint_union",
    "distances_from",
    "empty_graph",
    "forced_endpoint_edges",
    "generate",
    "graph_invariants",
    "greedy_dem",
    "induced_subgraph",
    "is_dem_set",
    "is_isomorphic",
    "join_graphs",
    "minimum_vertex_cover",
    "monitor_map",
    "monitored_edges",
    "parse_family",
    "predicted_dem",
    "restrict_dem",
    "vertex_cover_number",
    "witnesses",
]
