"""Repeated contagion-plus-persistence runs over the synthetic graph families.

One run generates (or reuses) a graph, simulates the threshold contagion,
builds the infection-time filtration, and records feature counts of its
persistence diagram.  The lattice graph is deterministic, so only the
contagion seeds vary across its runs; the geometric and small-world families
get a fresh graph per run.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .adjacency import wtm_filtration
from .graphs import SpatialGraph, gen_lattice, gen_rgg, gen_ws
from .persistence import compute_persistence, feature_count
from .wtm import WtmConfig, run_wtm

MODELS = ("rgg", "lattice", "ws")


@dataclass(frozen=True)
class RunRecord:
    h0: int
    h1: int
    infinite_h0: int
    h0_births: tuple[float, ...]
    never_infected_value: int


@dataclass(frozen=True)
class ModelStats:
    model: str
    runs: tuple[RunRecord, ...]

    def _mean_std(self, counts: list[int]) -> tuple[float, float]:
        n = len(counts)
        mean = sum(counts) / n
        var = sum((c - mean) ** 2 for c in counts) / n
        return mean, math.sqrt(var)

    @property
    def h0_mean_std(self) -> tuple[float, float]:
        return self._mean_std([r.h0 for r in self.runs])

    @property
    def h1_mean_std(self) -> tuple[float, float]:
        return self._mean_std([r.h1 for r in self.runs])


def _make_graph(model: str, rng: random.Random, n: int, radius: float,
                side: int, k: int, p: float) -> SpatialGraph:
    if model == "rgg":
        return gen_rgg(n, radius, rng.randrange(2**32))
    if model == "ws":
        return gen_ws(n, k, p, rng.randrange(2**32))
    return gen_lattice(side)


def run_model_stats(
    model: str,
    runs: int,
    seed: int,
    *,
    n: int = 100,
    radius: float = 0.1,
    side: int = 10,
    k: int = 2,
    p: float = 0.1,
    rho0: float = 0.05,
    threshold: float = 0.18,
) -> ModelStats:
    """Run the full pipeline ``runs`` times and collect feature counts."""
    if model not in MODELS:
        raise ValueError(f"model must be one of {MODELS}")
    if runs < 1:
        raise ValueError("runs must be >= 1")
    rng = random.Random(seed)
    records = []
    for _ in range(runs):
        graph = _make_graph(model, rng, n, radius, side, k, p)
        config = WtmConfig(rho0=rho0, threshold=threshold, seed=rng.randrange(2**32))
        times = run_wtm(graph, config)
        diagram = compute_persistence(wtm_filtration(graph, times))
        h0_features = diagram.in_dimension(0)
        records.append(
            RunRecord(
                h0=feature_count(diagram, 0),
                h1=feature_count(diagram, 1),
                infinite_h0=sum(1 for f in h0_features if f.is_infinite),
                h0_births=tuple(f.birth for f in h0_features),
                never_infected_value=times.never_infected_value,
            )
        )
    return ModelStats(model, tuple(records))


def format_stats(stats: ModelStats) -> str:
    h0_mean, h0_std = stats.h0_mean_std
    h1_mean, h1_std = stats.h1_mean_std
    return (
        f"model={stats.model} runs={len(stats.runs)}\n"
        f"H0 mean={h0_mean:.4f} std={h0_std:.4f}\n"
        f"H1 mean={h1_mean:.4f} std={h1_std:.4f}\n"
    )
