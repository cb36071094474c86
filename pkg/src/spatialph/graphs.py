"""Planar-embedded graphs and the three synthetic families used in experiments.

A :class:`SpatialGraph` is a node list with coordinates, an undirected edge
set, and optional scalar data attached to nodes or edges.  The generators are
pure functions of their parameters and seed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field


Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass
class SpatialGraph:
    """Nodes with planar coordinates, undirected edges, optional scalar data."""

    nodes: list[tuple[int, float, float]]
    edges: set[Edge]
    node_values: dict[int, float] | None = None
    edge_values: dict[Edge, float] | None = None

    def __post_init__(self):
        ids = [n[0] for n in self.nodes]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate node ids")
        known = set(ids)
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            if u not in known or v not in known:
                raise ValueError(f"edge ({u},{v}) references unknown node")
            normalized.add(_norm_edge(u, v))
        self.edges = normalized
        if self.edge_values is not None:
            self.edge_values = {
                _norm_edge(u, v): val for (u, v), val in self.edge_values.items()
            }

    @property
    def node_ids(self) -> list[int]:
        return [n[0] for n in self.nodes]

    @property
    def coordinates(self) -> dict[int, tuple[float, float]]:
        return {i: (x, y) for i, x, y in self.nodes}

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {i: set() for i in self.node_ids}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def __len__(self) -> int:
        return len(self.nodes)


def gen_rgg(n: int, radius: float, seed: int) -> SpatialGraph:
    """Random geometric graph: n uniform points on the unit square, edges
    between pairs at Euclidean distance <= radius (closed ball)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if radius <= 0:
        raise ValueError("radius must be > 0")
    rng = random.Random(seed)
    nodes = [(i, rng.random(), rng.random()) for i in range(n)]
    r2 = radius * radius
    edges = set()
    for i in range(n):
        _, xi, yi = nodes[i]
        for j in range(i + 1, n):
            _, xj, yj = nodes[j]
            if (xi - xj) ** 2 + (yi - yj) ** 2 <= r2:
                edges.add((i, j))
    return SpatialGraph(nodes, edges)


def gen_lattice(side: int) -> SpatialGraph:
    """side x side grid spanning the unit square, 4-neighbour edges."""
    if side < 2:
        raise ValueError("side must be >= 2")
    step = 1.0 / (side - 1)
    nodes = []
    edges = set()
    for r in range(side):
        for c in range(side):
            i = r * side + c
            nodes.append((i, c * step, r * step))
            if c + 1 < side:
                edges.add((i, i + 1))
            if r + 1 < side:
                edges.add((i, i + side))
    return SpatialGraph(nodes, edges)


def gen_ws(n: int, k_each_side: int, p: float, seed: int) -> SpatialGraph:
    """Watts-Strogatz ring with remove-then-replace rewiring.

    Every node starts connected to its k_each_side nearest neighbours on each
    side of a ring.  Each original ring edge is then, with probability p,
    removed and replaced by an edge from its lower-index endpoint to a node
    chosen uniformly among non-neighbours; if no candidate exists the edge is
    kept.  Edge count is preserved.  Nodes sit on the unit circle purely for
    rendering.
    """
    if n <= 2 * k_each_side:
        raise ValueError("need n > 2*k_each_side")
    if not 0 <= p <= 1:
        raise ValueError("p must be in [0, 1]")
    rng = random.Random(seed)
    nodes = [
        (i, math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n))
        for i in range(n)
    ]
    adj: dict[int, set[int]] = {i: set() for i in range(n)}
    ring_edges = []
    for j in range(1, k_each_side + 1):
        for u in range(n):
            v = (u + j) % n
            ring_edges.append((u, v))
            adj[u].add(v)
            adj[v].add(u)
    for u, v in ring_edges:
        if rng.random() >= p:
            continue
        src = min(u, v)
        candidates = [w for w in range(n) if w != src and w not in adj[src]]
        if not candidates:
            continue  # src adjacent to everyone: keep the edge
        w = rng.choice(candidates)
        adj[u].discard(v)
        adj[v].discard(u)
        adj[src].add(w)
        adj[w].add(src)
    edges = {_norm_edge(u, v) for u in adj for v in adj[u]}
    return SpatialGraph(nodes, edges)


def write_graph(graph: SpatialGraph, path) -> None:
    """Sections ``nodes`` (id x y [value]) and ``edges`` (u v [value])."""
    with open(path, "w") as f:
        f.write("nodes\n")
        for i, x, y in graph.nodes:
            line = f"{i} {x!r} {y!r}"
            if graph.node_values is not None and i in graph.node_values:
                line += f" {graph.node_values[i]!r}"
            f.write(line + "\n")
        f.write("edges\n")
        for u, v in sorted(graph.edges):
            line = f"{u} {v}"
            if graph.edge_values is not None and (u, v) in graph.edge_values:
                line += f" {graph.edge_values[(u, v)]!r}"
            f.write(line + "\n")


def read_graph(path) -> SpatialGraph:
    nodes: list[tuple[int, float, float]] = []
    edges: set[Edge] = set()
    node_values: dict[int, float] = {}
    edge_values: dict[Edge, float] = {}
    section = None
    with open(path) as f:
        for lineno, line in enumerate(f, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if line in ("nodes", "edges"):
                section = line
                continue
            fields = line.split()
            try:
                if section == "nodes":
                    i, x, y = int(fields[0]), float(fields[1]), float(fields[2])
                    nodes.append((i, x, y))
                    if len(fields) == 4:
                        node_values[i] = float(fields[3])
                    elif len(fields) != 3:
                        raise ValueError
                elif section == "edges":
                    u, v = int(fields[0]), int(fields[1])
                    edges.add(_norm_edge(u, v))
                    if len(fields) == 3:
                        edge_values[_norm_edge(u, v)] = float(fields[2])
                    elif len(fields) != 2:
                        raise ValueError
                else:
                    raise ValueError
            except (ValueError, IndexError):
                raise ValueError(f"{path}:{lineno}: bad line {line!r}") from None
    return SpatialGraph(
        nodes,
        edges,
        node_values=node_values or None,
        edge_values=edge_values or None,
    )
