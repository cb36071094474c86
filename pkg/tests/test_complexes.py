import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spatialph.complexes import (
    FilteredComplex,
    Simplex,
    canonical_order,
    read_complex,
    write_complex,
)
from spatialph.errors import (
    DuplicateSimplexError,
    InvalidComplexError,
    MissingFaceError,
    MonotonicityError,
)

from oracles import random_complex


def test_simplex_normalizes_and_validates():
    assert Simplex((2, 0)).vertices == (0, 2)
    assert Simplex((5,)).dimension == 0
    assert Simplex((1, 2, 3)).dimension == 2
    with pytest.raises(ValueError):
        Simplex((1, 1))
    with pytest.raises(ValueError):
        Simplex((1, 2, 3, 4))


def test_simplex_faces():
    assert Simplex((3,)).faces() == []
    assert set(s.vertices for s in Simplex((0, 1, 2)).faces()) == {
        (0, 1),
        (0, 2),
        (1, 2),
    }


class TestAdd:
    def test_vertex_into_empty(self):
        cx = FilteredComplex()
        cx.add((0,), 0.0)
        assert len(cx) == 1
        assert cx.vertex_count == 1

    def test_edge_with_both_endpoints(self):
        cx = FilteredComplex()
        cx.add((0,), 0.0)
        cx.add((1,), 0.0)
        cx.add((0, 1), 1.0)
        assert (0, 1) in cx

    def test_triangle_above_late_edge_rejected(self):
        cx = FilteredComplex()
        for v in range(3):
            cx.add((v,), 0.0)
        cx.add((0, 1), 0.0)
        cx.add((0, 2), 0.0)
        cx.add((1, 2), 0.7)
        with pytest.raises(MonotonicityError):
            cx.add((0, 1, 2), 0.5)

    def test_missing_face(self):
        cx = FilteredComplex()
        cx.add((0,), 0.0)
        with pytest.raises(MissingFaceError):
            cx.add((0, 1), 1.0)

    def test_duplicate(self):
        cx = FilteredComplex()
        cx.add((0,), 0.0)
        with pytest.raises(DuplicateSimplexError):
            cx.add((0,), 0.5)

    def test_negative_value(self):
        cx = FilteredComplex()
        with pytest.raises(ValueError):
            cx.add((0,), -1.0)


class TestValidate:
    def test_missing_vertex(self):
        cx = FilteredComplex.from_pairs([((0,), 0.0), ((0, 1), 1.0)], check=False)
        violations = cx.validate()
        assert len(violations) == 1
        assert violations[0].kind == "missing-face"
        assert violations[0].simplex == Simplex((0, 1))

    def test_valid_filled_triangle(self):
        pairs = [((v,), 0.0) for v in range(3)]
        pairs += [((0, 1), 0.0), ((0, 2), 0.0), ((1, 2), 0.0), ((0, 1, 2), 0.0)]
        assert FilteredComplex.from_pairs(pairs).validate() == []

    def test_edge_below_vertex(self):
        cx = FilteredComplex.from_pairs(
            [((0,), 0.5), ((1,), 0.0), ((0, 1), 0.2)], check=False
        )
        violations = cx.validate()
        assert len(violations) == 1
        assert violations[0].kind == "monotonicity"


class TestCanonicalOrder:
    def test_vertices_before_edge(self):
        cx = FilteredComplex.from_pairs(
            [((0,), 0.0), ((1,), 0.0), ((0, 1), 1.0)]
        )
        order = [s.vertices for s, _ in canonical_order(cx)]
        assert order == [(0,), (1,), (0, 1)]

    def test_dimension_tiebreak(self):
        pairs = [((v,), 0.0) for v in range(3)]
        pairs += [((0, 1), 0.0), ((0, 2), 0.0), ((1, 2), 0.0), ((0, 1, 2), 0.0)]
        order = [s.dimension for s, _ in canonical_order(FilteredComplex.from_pairs(pairs))]
        assert order == [0, 0, 0, 1, 1, 1, 2]

    def test_value_groups(self):
        pairs = [((0,), 0.0), ((1,), 0.0), ((0, 1), 0.0), ((2,), 2.0), ((3,), 2.0)]
        order = canonical_order(FilteredComplex.from_pairs(pairs))
        values = [v for _, v in order]
        assert values == sorted(values)
        assert values[:3] == [0.0, 0.0, 0.0]

    def test_invalid_complex_raises(self):
        cx = FilteredComplex.from_pairs([((0, 1), 0.0)], check=False)
        with pytest.raises(InvalidComplexError):
            canonical_order(cx)


def test_faces_precede_cofaces_on_random_complexes():
    rng = random.Random(7)
    for _ in range(50):
        cx = random_complex(rng)
        seen = set()
        for simplex, _ in canonical_order(cx):
            for face in simplex.faces():
                assert face.vertices in seen
            seen.add(simplex.vertices)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**31))
def test_incremental_construction_stays_valid(seed):
    # Rebuilding any random valid complex one simplex at a time (in canonical
    # order) must never trip the per-add checks nor leave violations behind.
    cx = random_complex(random.Random(seed))
    rebuilt = FilteredComplex()
    for simplex, value in canonical_order(cx):
        rebuilt.add(simplex, value)
    assert rebuilt.validate() == []
    assert len(rebuilt) == len(cx)


def test_complex_file_roundtrip(tmp_path):
    rng = random.Random(3)
    cx = random_complex(rng)
    path = tmp_path / "complex.txt"
    write_complex(cx, path)
    back = read_complex(path)
    assert dict(
        (s.vertices, v) for s, v in back.simplices
    ) == dict((s.vertices, v) for s, v in cx.simplices)


def test_read_complex_rejects_garbage(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("2 0 1 0.5\n")  # triangle with too few vertices
    with pytest.raises(ValueError):
        read_complex(path)
