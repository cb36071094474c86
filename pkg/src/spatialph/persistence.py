"""Persistent homology (H0, H1) by boundary-matrix column reduction over GF(2).

Simplices are taken in canonical filtration order and each boundary column is
reduced left to right: while the column is nonzero and its lowest row is the
pivot of an earlier reduced column, that column is added (xor).  A column that
ends up zero marks its simplex as a creator; a column that survives with
lowest row r kills the class created by simplex r, pairing the two into a
(birth, death) feature.  Creators that are never killed become features with
infinite death.  Pairs with birth == death are dropped.

Columns of d-simplices only have rows among the (d-1)-simplices, so the
matrix is block-diagonal by dimension and each block is reduced on its own.
Columns are packed into Python integers (bit i = row i) so the inner loop is
a bigint xor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .complexes import FilteredComplex, Simplex, canonical_order


@dataclass(frozen=True)
class PersistenceFeature:
    """One homology class: born at ``birth``, dead at ``death`` (may be inf)."""

    dimension: int
    birth: float
    death: float

    def __post_init__(self):
        if self.dimension not in (0, 1):
            raise ValueError(f"dimension must be 0 or 1, got {self.dimension}")
        if not self.death > self.birth:
            raise ValueError(
                f"death must exceed birth, got [{self.birth}, {self.death})"
            )

    @property
    def persistence(self) -> float:
        return self.death - self.birth

    @property
    def is_infinite(self) -> bool:
        return math.isinf(self.death)

    def sort_key(self):
        return (self.dimension, self.birth, self.death)


@dataclass(frozen=True)
class PersistenceDiagram:
    """Multiset of features plus the largest filtration value of the source."""

    features: tuple[PersistenceFeature, ...]
    max_filtration: float

    @classmethod
    def of(cls, features, max_filtration: float) -> "PersistenceDiagram":
        return cls(tuple(sorted(features, key=PersistenceFeature.sort_key)),
                   float(max_filtration))

    def in_dimension(self, dimension: int) -> tuple[PersistenceFeature, ...]:
        return tuple(f for f in self.features if f.dimension == dimension)

    def __len__(self) -> int:
        return len(self.features)


def _reduce_columns(columns: list[int]) -> tuple[dict[int, int], list[int]]:
    """Left-to-right GF(2) reduction of bit-packed columns.

    Returns (pivot row -> column index, indices of columns that reduced to
    zero).  ``columns`` is not modified.
    """
    pivot_owner: dict[int, int] = {}
    reduced: list[int] = []
    zeroed: list[int] = []
    for j, col in enumerate(columns):
        while col:
            low = col.bit_length() - 1
            k = pivot_owner.get(low)
            if k is None:
                break
            col ^= reduced[k]
        reduced.append(col)
        if col:
            pivot_owner[col.bit_length() - 1] = j
        else:
            zeroed.append(j)
    return pivot_owner, zeroed


def _pair_features(
    ordered: list[tuple[Simplex, float]],
) -> list[PersistenceFeature]:
    """Persistence pairing of an already-ordered filtration (faces first)."""
    verts = [(s, v) for s, v in ordered if s.dimension == 0]
    edges = [(s, v) for s, v in ordered if s.dimension == 1]
    tris = [(s, v) for s, v in ordered if s.dimension == 2]

    vpos = {s.vertices[0]: i for i, (s, _) in enumerate(verts)}
    epos = {s.vertices: i for i, (s, _) in enumerate(edges)}

    edge_cols = []
    for s, _ in edges:
        u, v = s.vertices
        edge_cols.append((1 << vpos[u]) | (1 << vpos[v]))
    tri_cols = []
    for s, _ in tris:
        a, b, c = s.vertices
        tri_cols.append(
            (1 << epos[(a, b)]) | (1 << epos[(a, c)]) | (1 << epos[(b, c)])
        )

    edge_pivots, edge_zeroed = _reduce_columns(edge_cols)
    tri_pivots, _ = _reduce_columns(tri_cols)
    # Triangle columns that reduce to zero would create 2-dimensional classes,
    # which are outside the H0/H1 scope and are not reported.

    features: list[PersistenceFeature] = []

    killed_vertices = set(edge_pivots)
    for row, j in edge_pivots.items():
        birth, death = verts[row][1], edges[j][1]
        if death > birth:
            features.append(PersistenceFeature(0, birth, death))
    for i, (_, birth) in enumerate(verts):
        if i not in killed_vertices:
            features.append(PersistenceFeature(0, birth, math.inf))

    killed_edges = set(tri_pivots)
    for row, j in tri_pivots.items():
        birth, death = edges[row][1], tris[j][1]
        if death > birth:
            features.append(PersistenceFeature(1, birth, death))
    for i in edge_zeroed:
        if i not in killed_edges:
            features.append(PersistenceFeature(1, edges[i][1], math.inf))

    return features


def compute_persistence(cx: FilteredComplex) -> PersistenceDiagram:
    """Persistence diagram of the sublevel-set filtration of ``cx``.

    Raises :class:`~spatialph.errors.InvalidComplexError` if ``cx`` violates
    the filtration axioms.
    """
    ordered = canonical_order(cx)
    max_filtration = max((v for _, v in ordered), default=0.0)
    return PersistenceDiagram.of(_pair_features(ordered), max_filtration)


def betti_numbers(diagram: PersistenceDiagram, t: float) -> tuple[int, int]:
    """(b0, b1) at filtration value t: features with birth <= t < death."""
    b0 = b1 = 0
    for f in diagram.features:
        if f.birth <= t < f.death:
            if f.dimension == 0:
                b0 += 1
            else:
                b1 += 1
    return b0, b1


def feature_count(diagram: PersistenceDiagram, dimension: int) -> int:
    """Number of features of one dimension, finite and infinite alike."""
    if dimension not in (0, 1):
        raise ValueError(f"dimension must be 0 or 1, got {dimension}")
    return sum(1 for f in diagram.features if f.dimension == dimension)


def write_diagram(diagram: PersistenceDiagram, path) -> None:
    """Text table ``dim,birth,death``; infinite deaths rendered as ``inf``."""
    with open(path, "w") as f:
        f.write("dim,birth,death\n")
        for feat in diagram.features:
            death = "inf" if feat.is_infinite else repr(feat.death)
            f.write(f"{feat.dimension},{feat.birth!r},{death}\n")


def read_diagram(path) -> PersistenceDiagram:
    """Read a diagram file.

    The file does not carry the source complex's maximum filtration value,
    so it is reconstructed as the largest finite birth/death present.
    """
    features = []
    max_finite = 0.0
    with open(path) as f:
        header = f.readline().strip()
        if header != "dim,birth,death":
            raise ValueError(f"{path}: expected 'dim,birth,death' header")
        for lineno, line in enumerate(f, start=2):
            line = line.strip()
            if not line:
                continue
            try:
                dim_s, birth_s, death_s = line.split(",")
                dim, birth = int(dim_s), float(birth_s)
                death = math.inf if death_s == "inf" else float(death_s)
            except ValueError:
                raise ValueError(f"{path}:{lineno}: bad feature line {line!r}") from None
            features.append(PersistenceFeature(dim, birth, death))
            max_finite = max(max_finite, birth, death if not math.isinf(death) else 0.0)
    return PersistenceDiagram.of(features, max_finite)
