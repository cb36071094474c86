"""Watts threshold model with synchronous updates.

A fraction rho0 of nodes starts infected at time 0.  At each step every
uninfected node whose infected-neighbour fraction meets or exceeds the
threshold becomes infected, all updates applied simultaneously.  The run
stops at the first step that infects nobody; nodes that were never infected
are assigned ``max infected time + 1`` so that downstream filtrations
eventually contain every node.

The fraction test is evaluated in exact rational arithmetic: the threshold is
read as the decimal number its repr shows (0.18 means 18/100), which keeps
boundary cases like 9 infected among 50 neighbours order-exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .graphs import SpatialGraph


@dataclass(frozen=True)
class WtmConfig:
    rho0: float = 0.05
    threshold: float = 0.18
    seed: int | None = None

    def __post_init__(self):
        if not 0 < self.rho0 <= 1:
            raise ValueError("rho0 must be in (0, 1]")
        if not 0 <= self.threshold <= 1:
            raise ValueError("threshold must be in [0, 1]")


@dataclass(frozen=True)
class InfectionTimes:
    """Infection step per node; never-infected nodes share the sentinel value."""

    time: dict[int, int]
    never_infected_value: int

    def infected_nodes(self) -> list[int]:
        return [v for v, t in self.time.items() if t < self.never_infected_value]

    def never_infected(self) -> list[int]:
        return [v for v, t in self.time.items() if t == self.never_infected_value]


def run_wtm(graph: SpatialGraph, config: WtmConfig) -> InfectionTimes:
    """Simulate the threshold contagion and return per-node infection times."""
    ids = sorted(graph.node_ids)
    if not ids:
        raise ValueError("graph is empty")
    rng = random.Random(config.seed)
    n_seeds = round(config.rho0 * len(ids))
    seeds = rng.sample(ids, n_seeds)

    adj = graph.adjacency()
    threshold = Fraction(repr(config.threshold))
    time: dict[int, int] = {v: 0 for v in seeds}
    uninfected = [v for v in ids if v not in time]
    t = 0
    while True:
        t += 1
        newly = []
        for v in uninfected:
            neighbours = adj[v]
            if not neighbours:
                continue
            infected = sum(1 for u in neighbours if u in time)
            if Fraction(infected, len(neighbours)) >= threshold:
                newly.append(v)
        if not newly:
            break
        for v in newly:
            time[v] = t
        uninfected = [v for v in uninfected if v not in time]

    never_value = max(time.values(), default=0) + 1
    for v in uninfected:
        time[v] = never_value
    return InfectionTimes(time, never_value)


def infection_subgraph(
    graph: SpatialGraph, times: InfectionTimes, t: int
) -> SpatialGraph:
    """Induced subgraph on the nodes infected by step t (the infection network)."""
    if t < 0:
        raise ValueError("t must be >= 0")
    keep = {v for v, tv in times.time.items() if tv <= t}
    nodes = [n for n in graph.nodes if n[0] in keep]
    edges = {(u, v) for u, v in graph.edges if u in keep and v in keep}
    node_values = None
    if graph.node_values is not None:
        node_values = {v: val for v, val in graph.node_values.items() if v in keep}
    edge_values = None
    if graph.edge_values is not None:
        edge_values = {e: val for e, val in graph.edge_values.items() if e in edges}
    return SpatialGraph(nodes, edges, node_values=node_values, edge_values=edge_values)


def write_times(times: InfectionTimes, path) -> None:
    """Text table ``node,time`` sorted by node id."""
    with open(path, "w") as f:
        f.write("node,time\n")
        for v in sorted(times.time):
            f.write(f"{v},{times.time[v]}\n")


def read_times(path) -> dict[int, int]:
    """Read a ``node,time`` table back as a plain mapping."""
    time: dict[int, int] = {}
    with open(path) as f:
        header = f.readline().strip()
        if header != "node,time":
            raise ValueError(f"{path}: expected 'node,time' header")
        for lineno, line in enumerate(f, start=2):
            line = line.strip()
            if not line:
                continue
            try:
                node_s, t_s = line.split(",")
                time[int(node_s)] = int(t_s)
            except ValueError:
                raise ValueError(f"{path}:{lineno}: bad line {line!r}") from None
    return time
