"""Average-linkage (UPGMA) hierarchical clustering of a distance matrix.

At every step the two clusters with the smallest mean leaf-pair distance are
merged and the merge is recorded at that height.  Cluster ids follow the
usual linkage convention: leaves are 0..n-1 and the i-th merge creates
cluster n+i.  Ties are broken toward the pair whose smallest leaf labels come
first, so runs are reproducible.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .distance import DistanceMatrix
from .errors import InvalidKError


@dataclass(frozen=True)
class Dendrogram:
    """Merge list (a, b, height, new_size) over n_leaves leaves."""

    merges: tuple[tuple[int, int, float, int], ...]
    n_leaves: int

    def __post_init__(self):
        if len(self.merges) != self.n_leaves - 1:
            raise ValueError("a dendrogram over n leaves has n-1 merges")


def average_linkage(matrix: DistanceMatrix) -> Dendrogram:
    """UPGMA dendrogram of the matrix."""
    n = len(matrix)
    if n < 2:
        raise ValueError("need at least 2 labels")
    size = {i: 1 for i in range(n)}
    min_leaf = {i: i for i in range(n)}
    dist = {
        (i, j): float(matrix.entries[i, j]) for i in range(n) for j in range(i + 1, n)
    }
    active = set(range(n))
    merges = []
    last_height = 0.0
    for step in range(n - 1):
        best = None
        for (i, j), d in dist.items():
            key = (d, tuple(sorted((min_leaf[i], min_leaf[j]))))
            if best is None or key < best[0]:
                best = (key, i, j)
        (height, _), a, b = best
        if height < last_height:
            warnings.warn(
                f"merge height {height} below previous {last_height}; clamping",
                stacklevel=2,
            )
            height = last_height
        last_height = height
        new = n + step
        new_size = size[a] + size[b]
        merges.append((a, b, height, new_size))
        active.discard(a)
        active.discard(b)
        for c in active:
            da = dist.pop((min(a, c), max(a, c)))
            db = dist.pop((min(b, c), max(b, c)))
            dist[(min(new, c), max(new, c))] = (da * size[a] + db * size[b]) / new_size
        del dist[(a, b)]
        size[new] = new_size
        min_leaf[new] = min(min_leaf[a], min_leaf[b])
        active.add(new)
    return Dendrogram(tuple(merges), n)


def cut(dendrogram: Dendrogram, k: int) -> list[int]:
    """Cluster assignment from undoing the last k-1 merges.

    Returns one cluster id per leaf; ids 0..k-1 are assigned in order of each
    cluster's smallest leaf label.
    """
    n = dendrogram.n_leaves
    if not 1 <= k <= n:
        raise InvalidKError(f"k must be in 1..{n}, got {k}")
    members: dict[int, list[int]] = {i: [i] for i in range(n)}
    for step in range(n - k):
        a, b, _, _ = dendrogram.merges[step]
        members[n + step] = members.pop(a) + members.pop(b)
    clusters = sorted(members.values(), key=min)
    assignment = [0] * n
    for label, leaves in enumerate(clusters):
        for leaf in leaves:
            assignment[leaf] = label
    return assignment


def write_dendrogram(dendrogram: Dendrogram, path) -> None:
    """Text table ``a,b,height,size``, one merge per row."""
    with open(path, "w") as f:
        f.write("a,b,height,size\n")
        for a, b, height, new_size in dendrogram.merges:
            f.write(f"{a},{b},{height!r},{new_size}\n")


def read_dendrogram(path) -> Dendrogram:
    merges = []
    with open(path) as f:
        header = f.readline().strip()
        if header != "a,b,height,size":
            raise ValueError(f"{path}: expected 'a,b,height,size' header")
        for lineno, line in enumerate(f, start=2):
            line = line.strip()
            if not line:
                continue
            try:
                a_s, b_s, h_s, s_s = line.split(",")
                merges.append((int(a_s), int(b_s), float(h_s), int(s_s)))
            except ValueError:
                raise ValueError(f"{path}:{lineno}: bad merge line {line!r}") from None
    return Dendrogram(tuple(merges), len(merges) + 1)


def write_assignment(labels: list[str], assignment: list[int], path) -> None:
    """Text table ``label,cluster``."""
    if len(labels) != len(assignment):
        raise ValueError("one cluster per label required")
    with open(path, "w") as f:
        f.write("label,cluster\n")
        for label, cluster in zip(labels, assignment):
            f.write(f"{label},{cluster}\n")
