import itertools
import math
import random

import pytest

from spatialph.adjacency import (
    edge_value_filtration,
    node_value_filtration,
    wtm_filtration,
)
from spatialph.errors import IsolatedNodeError, MissingValueError
from spatialph.graphs import SpatialGraph, gen_rgg
from spatialph.persistence import compute_persistence
from spatialph.wtm import WtmConfig, run_wtm


def graph(n, edges, node_values=None, edge_values=None):
    nodes = [(i, float(i), 0.0) for i in range(n)]
    return SpatialGraph(nodes, set(edges), node_values, edge_values)


def test_four_cycle_all_zero():
    g = graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)], {i: 0.0 for i in range(4)})
    d = compute_persistence(node_value_filtration(g))
    inf = [(f.dimension, f.birth) for f in d.features if f.is_infinite]
    assert sorted(inf) == [(0, 0.0), (1, 0.0)]
    assert len(d.features) == 2


def test_triangle_fills_at_max_value():
    g = graph(3, [(0, 1), (0, 2), (1, 2)], {0: 0.0, 1: 1.0, 2: 2.0})
    cx = node_value_filtration(g)
    assert cx.value_of((0, 1, 2)) == 2.0
    d = compute_persistence(cx)
    assert d.in_dimension(1) == ()


def test_edges_enter_at_max_of_endpoints():
    g = graph(3, [(0, 1), (1, 2)], {0: 0.0, 1: 3.0, 2: 1.0})
    cx = node_value_filtration(g)
    assert cx.value_of((0, 1)) == 3.0
    assert cx.value_of((1, 2)) == 3.0


def test_only_three_cliques_fill():
    # 4-clique: all four triangles fill, nothing higher exists.
    g = graph(4, itertools.combinations(range(4), 2), {i: 0.0 for i in range(4)})
    cx = node_value_filtration(g)
    dims = [s.dimension for s, _ in cx.simplices]
    assert dims.count(2) == 4
    assert max(dims) == 2
    d = compute_persistence(cx)
    assert d.in_dimension(1) == ()


def test_missing_node_value():
    g = graph(2, [(0, 1)], {0: 0.0})
    with pytest.raises(MissingValueError):
        node_value_filtration(g)
    with pytest.raises(MissingValueError):
        node_value_filtration(graph(2, [(0, 1)]))


class TestEdgeValueFiltration:
    def test_star_derived_values(self):
        # centre 0 with leaves 1..3, edge data 1, 2, 3
        g = graph(
            4,
            [(0, 1), (0, 2), (0, 3)],
            edge_values={(0, 1): 1.0, (0, 2): 2.0, (0, 3): 3.0},
        )
        cx = edge_value_filtration(g)
        assert cx.value_of((0,)) == 1.0
        assert [cx.value_of((i,)) for i in (1, 2, 3)] == [1.0, 2.0, 3.0]
        assert [cx.value_of((0, i)) for i in (1, 2, 3)] == [1.0, 2.0, 3.0]

    def test_single_edge(self):
        g = graph(2, [(0, 1)], edge_values={(0, 1): 5.0})
        cx = edge_value_filtration(g)
        assert cx.value_of((0,)) == 5.0
        assert cx.value_of((1,)) == 5.0
        assert cx.value_of((0, 1)) == 5.0

    def test_constant_matches_node_construction(self):
        edges = [(0, 1), (0, 2), (1, 2)]
        g_edge = graph(3, edges, edge_values={e: 7.0 for e in edges})
        g_node = graph(3, edges, node_values={i: 7.0 for i in range(3)})
        a = {s.vertices: v for s, v in edge_value_filtration(g_edge).simplices}
        b = {s.vertices: v for s, v in node_value_filtration(g_node).simplices}
        assert a == b

    def test_isolated_node_rejected(self):
        g = graph(3, [(0, 1)], edge_values={(0, 1): 1.0})
        with pytest.raises(IsolatedNodeError):
            edge_value_filtration(g)

    def test_missing_edge_value(self):
        g = graph(2, [(0, 1)], edge_values={})
        with pytest.raises(MissingValueError):
            edge_value_filtration(g)


def sublevel_oracle(g, values, eps):
    """Independent reconstruction: induced subgraph plus filled 3-cliques."""
    nodes = {v for v in g.node_ids if values[v] <= eps}
    edges = {(u, v) for u, v in g.edges if u in nodes and v in nodes}
    tris = set()
    for u, v in edges:
        for w in nodes:
            if w > v and (u, w) in edges and (v, w) in edges:
                tris.add((u, v, w))
    return {(v,) for v in nodes} | edges | tris


def test_sublevel_sets_match_bruteforce():
    rng = random.Random(17)
    for _ in range(30):
        g = gen_rgg(12, 0.35, seed=rng.randrange(2**32))
        values = {v: float(rng.randint(0, 4)) for v in g.node_ids}
        g.node_values = values
        cx = node_value_filtration(g)
        for eps in sorted(set(values.values())):
            got = {s.vertices for s, val in cx.simplices if val <= eps}
            assert got == sublevel_oracle(g, values, eps)


class TestWtmFiltration:
    def test_k5_one_component_no_loops(self):
        edges = set(itertools.combinations(range(5), 2))
        g = graph(5, edges)
        times = run_wtm(g, WtmConfig(rho0=0.2, threshold=0.18, seed=0))
        d = compute_persistence(wtm_filtration(g, times))
        assert sum(1 for f in d.in_dimension(0) if f.is_infinite) == 1
        assert d.in_dimension(1) == ()

    def test_accepts_plain_mapping(self):
        g = graph(2, [(0, 1)])
        cx = wtm_filtration(g, {0: 0, 1: 1})
        assert cx.value_of((0, 1)) == 1.0

    def test_h0_births_zero_or_last_step(self):
        rng = random.Random(23)
        for _ in range(25):
            g = gen_rgg(60, 0.12, seed=rng.randrange(2**32))
            times = run_wtm(g, WtmConfig(seed=rng.randrange(2**32)))
            d = compute_persistence(wtm_filtration(g, times))
            allowed = {0.0, float(times.never_infected_value)}
            assert {f.birth for f in d.in_dimension(0)} <= allowed

    def test_missing_time(self):
        g = graph(2, [(0, 1)])
        with pytest.raises(MissingValueError):
            wtm_filtration(g, {0: 0})
