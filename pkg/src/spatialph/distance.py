"""Bottleneck distance between persistence diagrams and pairwise matrices.

The bottleneck distance is the smallest delta admitting a perfect matching
between the two point multisets, each augmented with the other's diagonal
projections, where matched points must be within sup-norm distance delta and
a point may retire to the diagonal at cost half its persistence.  The optimum
is always one of finitely many candidates (a pairwise sup-norm distance or a
half-persistence), so it is found exactly by binary search over the sorted
candidate set with a maximum-bipartite-matching feasibility test (Hopcroft-
Karp) at each probe.

Infinite deaths make every distance infinite, so diagrams are capped first:
every infinite death is replaced by a value beyond all finite activity.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import CapTooSmallError
from .persistence import PersistenceDiagram, PersistenceFeature

Point = tuple[float, float]


@dataclass
class DistanceMatrix:
    labels: list[str]
    entries: np.ndarray

    def __post_init__(self):
        self.entries = np.asarray(self.entries, dtype=float)
        n = len(self.labels)
        if self.entries.shape != (n, n):
            raise ValueError(f"matrix shape {self.entries.shape} != ({n}, {n})")
        if not np.all(np.isfinite(self.entries)):
            raise ValueError("entries must be finite")
        if not np.allclose(self.entries, self.entries.T):
            raise ValueError("matrix must be symmetric")
        if np.any(np.diag(self.entries) != 0):
            raise ValueError("diagonal must be zero")
        if np.any(self.entries < 0):
            raise ValueError("entries must be nonnegative")

    def __len__(self) -> int:
        return len(self.labels)


def cap_infinities(diagram: PersistenceDiagram, cap: float) -> PersistenceDiagram:
    """Replace every infinite death by ``cap``; finite features are unchanged.

    ``cap`` must not undercut the diagram: a finite death above it, or an
    infinite feature born at or above it, raises :class:`CapTooSmallError`.
    """
    for f in diagram.features:
        if not f.is_infinite and f.death > cap:
            raise CapTooSmallError(f"cap {cap} below finite death {f.death}")
        if f.is_infinite and f.birth >= cap:
            raise CapTooSmallError(f"cap {cap} not above birth {f.birth}")
    capped = [
        PersistenceFeature(f.dimension, f.birth, cap) if f.is_infinite else f
        for f in diagram.features
    ]
    return PersistenceDiagram.of(capped, diagram.max_filtration)


def _max_matching(adjacency: list[list[int]], n_right: int) -> int:
    """Hopcroft-Karp maximum matching size; adjacency maps left -> rights."""
    n_left = len(adjacency)
    INF = float("inf")
    match_left = [-1] * n_left
    match_right = [-1] * n_right
    dist = [0.0] * n_left

    def bfs() -> bool:
        queue = deque()
        for u in range(n_left):
            if match_left[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = INF
        found = False
        while queue:
            u = queue.popleft()
            for v in adjacency[u]:
                w = match_right[v]
                if w == -1:
                    found = True
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def dfs(u: int) -> bool:
        for v in adjacency[u]:
            w = match_right[v]
            if w == -1 or (dist[w] == dist[u] + 1 and dfs(w)):
                match_left[u] = v
                match_right[v] = u
                return True
        dist[u] = INF
        return False

    size = 0
    while bfs():
        for u in range(n_left):
            if match_left[u] == -1 and dfs(u):
                size += 1
    return size


def _sup(p: Point, q: Point) -> float:
    return max(abs(p[0] - q[0]), abs(p[1] - q[1]))


def _feasible(pts_a: list[Point], pts_b: list[Point], delta: float) -> bool:
    """Is there a perfect matching with no pair farther than delta?

    Left side: the points of A, then one diagonal slot per point of B.
    Right side: the points of B, then one diagonal slot per point of A.
    A point connects to its own diagonal slot when half its persistence is
    within delta; diagonal slots connect to each other freely.
    """
    na, nb = len(pts_a), len(pts_b)
    adjacency: list[list[int]] = []
    for i, p in enumerate(pts_a):
        row = [j for j, q in enumerate(pts_b) if _sup(p, q) <= delta]
        if (p[1] - p[0]) / 2 <= delta:
            row.append(nb + i)
        adjacency.append(row)
    diag_row = list(range(nb, nb + na))
    for j, q in enumerate(pts_b):
        row = list(diag_row)
        if (q[1] - q[0]) / 2 <= delta:
            row.append(j)
        adjacency.append(row)
    return _max_matching(adjacency, na + nb) == na + nb


def bottleneck(
    d1: PersistenceDiagram, d2: PersistenceDiagram, dimension: int
) -> float:
    """Exact bottleneck distance between the dimension-restricted diagrams.

    Both diagrams must already be capped (no infinite deaths).
    """
    for d in (d1, d2):
        if any(f.is_infinite for f in d.features):
            raise ValueError("diagrams must be capped before comparison")
    pts_a = [(f.birth, f.death) for f in d1.in_dimension(dimension)]
    pts_b = [(f.birth, f.death) for f in d2.in_dimension(dimension)]
    if not pts_a and not pts_b:
        return 0.0

    candidates = {0.0}
    for p in pts_a:
        candidates.add((p[1] - p[0]) / 2)
    for q in pts_b:
        candidates.add((q[1] - q[0]) / 2)
    for p in pts_a:
        for q in pts_b:
            candidates.add(_sup(p, q))
    ordered = sorted(candidates)

    lo, hi = 0, len(ordered) - 1
    # The largest candidate is always feasible (everything fits somewhere).
    while lo < hi:
        mid = (lo + hi) // 2
        if _feasible(pts_a, pts_b, ordered[mid]):
            hi = mid
        else:
            lo = mid + 1
    return ordered[lo]


def pairwise_matrix(
    diagrams: list[PersistenceDiagram],
    dimensions: set[int] = frozenset({0, 1}),
    labels: list[str] | None = None,
) -> DistanceMatrix:
    """Pairwise bottleneck distances, max over the requested dimensions.

    All diagrams are capped with one shared value, one past the largest
    finite death in the collection (raised to clear every infinite birth),
    so that essential classes compare consistently.
    """
    if len(diagrams) < 2:
        raise ValueError("need at least 2 diagrams")
    if not dimensions or not set(dimensions) <= {0, 1}:
        raise ValueError("dimensions must be a nonempty subset of {0, 1}")
    if labels is None:
        labels = [str(i) for i in range(len(diagrams))]
    if len(labels) != len(diagrams):
        raise ValueError("one label per diagram required")

    cap = 0.0
    for d in diagrams:
        for f in d.features:
            cap = max(cap, f.birth, f.death if not f.is_infinite else 0.0)
    cap += 1.0
    capped = [cap_infinities(d, cap) for d in diagrams]

    n = len(diagrams)
    entries = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            dist = max(bottleneck(capped[i], capped[j], dim) for dim in dimensions)
            entries[i, j] = entries[j, i] = dist
    return DistanceMatrix(list(labels), entries)


def write_matrix(matrix: DistanceMatrix, path) -> None:
    """Text table with labels in the first row and column, 9 significant digits."""
    with open(path, "w") as f:
        f.write("label," + ",".join(matrix.labels) + "\n")
        for i, label in enumerate(matrix.labels):
            row = ",".join(f"{x:.9g}" for x in matrix.entries[i])
            f.write(f"{label},{row}\n")


def read_matrix(path) -> DistanceMatrix:
    with open(path) as f:
        header = f.readline().strip()
        if not header.startswith("label,"):
            raise ValueError(f"{path}: expected 'label,...' header")
        labels = header.split(",")[1:]
        rows = []
        for lineno, line in enumerate(f, start=2):
            line = line.strip()
            if not line:
                continue
            fields = line.split(",")
            if len(fields) != len(labels) + 1:
                raise ValueError(f"{path}:{lineno}: wrong field count")
            rows.append([float(x) for x in fields[1:]])
    return DistanceMatrix(labels, np.array(rows))
