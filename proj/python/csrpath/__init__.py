"""Frontier-relaxation shortest paths over CSR graphs."""

from ._csrpath import (
    INF,
    Graph,
    InconsistentCostError,
    ParseError,
    UnreachableError,
    cost_checksum,
    dijkstra_reference,
    generate_graph,
    load_graph,
    path_cost,
    recover_path,
    run_apsp,
    run_sssp,
    saturating_add,
    save_graph,
    validate_graph,
)

__all__ = [
    "INF",
    "Graph",
    "InconsistentCostError",
    "ParseError",
    "UnreachableError",
    "cost_checksum",
    "dijkstra_reference",
    "generate_graph",
    "load_graph",
    "path_cost",
    "recover_path",
    "run_apsp",
    "run_sssp",
    "saturating_add",
    "save_graph",
    "validate_graph",
]
