"""Filtered simplicial complexes of dimension at most 2.

A complex stores vertices, edges, and triangles together with the filtration
value at which each simplex enters.  Two axioms are enforced so that the
sublevel sets ``{s : value(s) <= t}`` form a nested family of simplicial
complexes:

* closure -- every face of a stored simplex is stored;
* monotonicity -- no simplex enters before any of its faces.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import (
    DuplicateSimplexError,
    InvalidComplexError,
    MissingFaceError,
    MonotonicityError,
)

VertexTuple = tuple[int, ...]


class Simplex:
    """A vertex, edge, or triangle, stored as a strictly increasing vertex tuple."""

    __slots__ = ("vertices",)

    def __init__(self, vertices: Iterable[int]):
        verts = tuple(sorted(vertices))
        if not 1 <= len(verts) <= 3:
            raise ValueError(f"a simplex has 1 to 3 vertices, got {len(verts)}")
        for a, b in zip(verts, verts[1:]):
            if a == b:
                raise ValueError(f"repeated vertex {a} in simplex {verts}")
        self.vertices = verts

    @property
    def dimension(self) -> int:
        return len(self.vertices) - 1

    def faces(self) -> list["Simplex"]:
        """Codimension-1 faces; empty for a vertex."""
        v = self.vertices
        if len(v) == 1:
            return []
        return [Simplex(v[:i] + v[i + 1 :]) for i in range(len(v))]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Simplex) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __lt__(self, other: "Simplex") -> bool:
        return self.vertices < other.vertices

    def __repr__(self) -> str:
        return f"Simplex{self.vertices}"


@dataclass(frozen=True)
class Violation:
    """One axiom violation found by :meth:`FilteredComplex.validate`."""

    kind: str  # "missing-face" or "monotonicity"
    simplex: Simplex
    detail: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.simplex} ({self.detail})"


def _as_vertices(simplex: "Simplex | Iterable[int]") -> VertexTuple:
    if isinstance(simplex, Simplex):
        return simplex.vertices
    return Simplex(simplex).vertices


class FilteredComplex:
    """Simplices with filtration values, mutable only while being built."""

    __slots__ = ("_values",)

    def __init__(self) -> None:
        self._values: dict[VertexTuple, float] = {}

    @classmethod
    def from_pairs(
        cls,
        pairs: Iterable[tuple["Simplex | Iterable[int]", float]],
        check: bool = True,
    ) -> "FilteredComplex":
        """Build a complex from (simplex, value) pairs.

        With ``check=True`` (the default) the axioms are verified after
        insertion and an :class:`InvalidComplexError` is raised if they fail;
        duplicates raise regardless.
        """
        cx = cls()
        for simplex, value in pairs:
            verts = _as_vertices(simplex)
            if value < 0:
                raise ValueError(f"filtration value must be >= 0, got {value}")
            if verts in cx._values:
                raise DuplicateSimplexError(f"{verts} appears twice")
            cx._values[verts] = float(value)
        if check:
            violations = cx.validate()
            if violations:
                raise InvalidComplexError(
                    "; ".join(str(v) for v in violations[:5])
                    + (f" (+{len(violations) - 5} more)" if len(violations) > 5 else "")
                )
        return cx

    def add(self, simplex: "Simplex | Iterable[int]", value: float) -> None:
        """Insert one simplex, enforcing the axioms against what is present."""
        verts = _as_vertices(simplex)
        if value < 0:
            raise ValueError(f"filtration value must be >= 0, got {value}")
        if verts in self._values:
            raise DuplicateSimplexError(f"{verts} already present")
        if len(verts) > 1:
            for i in range(len(verts)):
                face = verts[:i] + verts[i + 1 :]
                face_value = self._values.get(face)
                if face_value is None:
                    raise MissingFaceError(f"face {face} of {verts} is absent")
                if face_value > value:
                    raise MonotonicityError(
                        f"face {face} enters at {face_value} > {value} of {verts}"
                    )
        self._values[verts] = float(value)

    @property
    def simplices(self) -> list[tuple[Simplex, float]]:
        return [(Simplex(v), val) for v, val in self._values.items()]

    @property
    def vertex_count(self) -> int:
        return sum(1 for v in self._values if len(v) == 1)

    def value_of(self, simplex: "Simplex | Iterable[int]") -> float:
        verts = _as_vertices(simplex)
        try:
            return self._values[verts]
        except KeyError:
            raise KeyError(f"{verts} not in complex") from None

    def __contains__(self, simplex: object) -> bool:
        if isinstance(simplex, Simplex):
            return simplex.vertices in self._values
        if isinstance(simplex, tuple):
            return simplex in self._values
        return False

    def __len__(self) -> int:
        return len(self._values)

    def validate(self) -> list[Violation]:
        """Check closure and monotonicity; return the violations found.

        An empty list means the complex is a valid filtered complex.
        """
        violations = []
        for verts, value in self._values.items():
            if len(verts) == 1:
                continue
            for i in range(len(verts)):
                face = verts[:i] + verts[i + 1 :]
                face_value = self._values.get(face)
                if face_value is None:
                    violations.append(
                        Violation("missing-face", Simplex(verts), f"face {face} absent")
                    )
                elif face_value > value:
                    violations.append(
                        Violation(
                            "monotonicity",
                            Simplex(verts),
                            f"face {face} at {face_value} > {value}",
                        )
                    )
        return violations


def canonical_order(cx: FilteredComplex) -> list[tuple[Simplex, float]]:
    """Sort simplices by (value, dimension, vertex tuple).

    The order realizes the filtration: every simplex appears after all of its
    faces.  Raises :class:`InvalidComplexError` if the complex is not valid.
    """
    violations = cx.validate()
    if violations:
        raise InvalidComplexError("; ".join(str(v) for v in violations[:5]))
    return sorted(
        cx.simplices, key=lambda sv: (sv[1], sv[0].dimension, sv[0].vertices)
    )


def write_complex(cx: FilteredComplex, path) -> None:
    """One simplex per line: ``dim v0 [v1 [v2]] value``."""
    with open(path, "w") as f:
        for simplex, value in cx.simplices:
            verts = " ".join(str(v) for v in simplex.vertices)
            f.write(f"{simplex.dimension} {verts} {value!r}\n")


def read_complex(path) -> FilteredComplex:
    pairs = []
    with open(path) as f:
        for lineno, line in enumerate(f, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            try:
                dim = int(fields[0])
                verts = tuple(int(v) for v in fields[1 : 1 + dim + 1])
                value = float(fields[1 + dim + 1])
            except (ValueError, IndexError):
                raise ValueError(f"{path}:{lineno}: bad simplex line {line!r}") from None
            if len(fields) != dim + 3:
                raise ValueError(f"{path}:{lineno}: expected {dim + 3} fields")
            pairs.append((verts, value))
    return FilteredComplex.from_pairs(pairs)
