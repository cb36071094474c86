"""Filtrations built from a graph whose nodes or edges carry scalar data.

A vertex enters at its value, an edge as soon as both endpoints are present
(max of the endpoint values), and every 3-clique is filled as soon as its
three edges are present.  Longer cycles are never filled, so loops in the
graph survive as 1-dimensional classes.
"""

from __future__ import annotations

from typing import Mapping

from .complexes import FilteredComplex
from .errors import IsolatedNodeError, MissingValueError
from .graphs import SpatialGraph
from .wtm import InfectionTimes


def _clique_filtration(
    graph: SpatialGraph, values: Mapping[int, float]
) -> FilteredComplex:
    pairs: list[tuple[tuple[int, ...], float]] = []
    for i in sorted(graph.node_ids):
        pairs.append(((i,), values[i]))
    adj = graph.adjacency()
    for u, v in sorted(graph.edges):
        pairs.append(((u, v), max(values[u], values[v])))
        for w in sorted(adj[u] & adj[v]):
            if w > v:
                pairs.append(((u, v, w), max(values[u], values[v], values[w])))
    return FilteredComplex.from_pairs(pairs)


def node_value_filtration(graph: SpatialGraph) -> FilteredComplex:
    """Filtration driven by the graph's node values."""
    if graph.node_values is None:
        raise MissingValueError("graph has no node values")
    missing = [i for i in graph.node_ids if i not in graph.node_values]
    if missing:
        raise MissingValueError(f"nodes without values: {missing[:10]}")
    return _clique_filtration(graph, graph.node_values)


def edge_value_filtration(graph: SpatialGraph) -> FilteredComplex:
    """Filtration driven by edge values.

    Each node takes the minimum value over its incident edges and the node
    construction runs on those derived values.  Every node therefore needs
    at least one incident edge.
    """
    if graph.edge_values is None:
        raise MissingValueError("graph has no edge values")
    missing = [e for e in graph.edges if e not in graph.edge_values]
    if missing:
        raise MissingValueError(f"edges without values: {missing[:10]}")
    adj = graph.adjacency()
    derived: dict[int, float] = {}
    for i in graph.node_ids:
        if not adj[i]:
            raise IsolatedNodeError(f"node {i} has no incident edge")
        derived[i] = min(
            graph.edge_values[(i, u) if i < u else (u, i)] for u in adj[i]
        )
    return _clique_filtration(graph, derived)


def wtm_filtration(
    graph: SpatialGraph, times: "InfectionTimes | Mapping[int, int]"
) -> FilteredComplex:
    """Filtration whose step t is exactly the infection network at time t."""
    mapping = times.time if isinstance(times, InfectionTimes) else times
    missing = [i for i in graph.node_ids if i not in mapping]
    if missing:
        raise MissingValueError(f"nodes without infection times: {missing[:10]}")
    return _clique_filtration(graph, {i: float(mapping[i]) for i in graph.node_ids})
