"""Persistent homology of spatial systems.

Two filtration constructions feed one persistence engine: an adjacency
construction over value-labelled graphs (vertices enter at their value,
edges when both endpoints are present, 3-cliques fill immediately) and a
level-set construction over binary images (the foreground grows outward at
unit speed over a triangulated pixel grid).  Diagrams are compared with the
exact bottleneck distance and grouped by average-linkage clustering.
"""

from .adjacency import (
    edge_value_filtration,
    node_value_filtration,
    wtm_filtration,
)
from .clustering import Dendrogram, average_linkage, cut
from .complexes import FilteredComplex, Simplex, canonical_order
from .distance import (
    DistanceMatrix,
    bottleneck,
    cap_infinities,
    pairwise_matrix,
)
from .graphs import SpatialGraph, gen_lattice, gen_rgg, gen_ws
from .levelset import (
    BinaryImage,
    GrayImage,
    LevelSetField,
    arrival_times,
    levelset_complex,
    threshold_image,
)
from .persistence import (
    PersistenceDiagram,
    PersistenceFeature,
    betti_numbers,
    compute_persistence,
    feature_count,
)
from .wtm import InfectionTimes, WtmConfig, infection_subgraph, run_wtm

__version__ = "0.1.0"

__all__ = [
    "BinaryImage",
    "Dendrogram",
    "DistanceMatrix",
    "FilteredComplex",
    "GrayImage",
    "InfectionTimes",
    "LevelSetField",
    "PersistenceDiagram",
    "PersistenceFeature",
    "Simplex",
    "SpatialGraph",
    "WtmConfig",
    "arrival_times",
    "average_linkage",
    "betti_numbers",
    "bottleneck",
    "canonical_order",
    "cap_infinities",
    "compute_persistence",
    "cut",
    "edge_value_filtration",
    "feature_count",
    "gen_lattice",
    "gen_rgg",
    "gen_ws",
    "infection_subgraph",
    "levelset_complex",
    "node_value_filtration",
    "pairwise_matrix",
    "run_wtm",
    "threshold_image",
    "wtm_filtration",
]
