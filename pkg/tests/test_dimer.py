import itertools
from fractions import Fraction

import pytest

from ppwb.core import BoxDims, PlanePartition, enumerate_box
from ppwb.dimer import (
    HexTiling,
    PlanarBipartiteGraph,
    bounded_faces,
    build_hex_graph,
    enumerate_matchings,
    format_tiling,
    hexagon_triangles,
    kasteleyn_count,
    matching_to_tiling,
    parse_tiling,
    pp_to_tiling,
    tiling_to_matching,
    tiling_to_pp,
)
from ppwb.qseries import box_count


def test_hexagon_triangle_counts():
    for dims in itertools.product((1, 2, 3), repeat=3):
        a, b, c = dims
        ups, downs = hexagon_triangles(BoxDims(*dims))
        assert len(ups) == len(downs) == a * b + b * c + c * a


def test_unit_hexagon_graph():
    g = build_hex_graph(BoxDims(1, 1, 1))
    assert len(g.ups) == len(g.downs) == 3
    assert len(g.edges) == 6
    assert sum(1 for _ in enumerate_matchings(g)) == 2
    assert kasteleyn_count(g) == 2
    faces = bounded_faces(g)
    assert len(faces) == 1 and len(faces[0]) == 6


def test_all_faces_are_hexagons():
    for dims in [(1, 1, 1), (2, 2, 2), (2, 3, 1), (3, 3, 3)]:
        g = build_hex_graph(BoxDims(*dims))
        assert all(len(f) == 6 for f in bounded_faces(g))


@pytest.mark.parametrize("dims", list(itertools.product((1, 2, 3), repeat=3)))
def test_kasteleyn_equals_enumeration(dims):
    g = build_hex_graph(BoxDims(*dims))
    assert kasteleyn_count(g) == sum(1 for _ in enumerate_matchings(g))


def test_kasteleyn_cross_method():
    for dims in itertools.product((1, 2, 3), repeat=3):
        box = BoxDims(*dims)
        assert kasteleyn_count(build_hex_graph(box)) == box_count(box)


def test_zero_pile_tiling_shape():
    box = BoxDims(2, 3, 2)
    t = pp_to_tiling(PlanePartition(), box)
    by_kind = {}
    for _, _, o in t.rhombi:
        by_kind[o] = by_kind.get(o, 0) + 1
    # three corner brick regions: tops on the floor, sides on the walls
    assert by_kind == {"A": 6, "B": 6, "C": 4}


@pytest.mark.parametrize("dims", [(2, 2, 2), (2, 2, 3)])
def test_tiling_roundtrip_exhaustive(dims):
    box = BoxDims(*dims)
    seen = set()
    for pp in enumerate_box(box):
        t = pp_to_tiling(pp, box)
        assert tiling_to_pp(t) == pp
        m = tiling_to_matching(t)
        assert matching_to_tiling(m, box) == t
        seen.add(t)
    assert len(seen) == box_count(box)


def test_matchings_biject_with_tilings():
    box = BoxDims(2, 2, 2)
    g = build_hex_graph(box)
    from_pps = {tiling_to_matching(pp_to_tiling(pp, box)) for pp in enumerate_box(box)}
    assert from_pps == set(enumerate_matchings(g))


def test_every_valid_covering_is_a_pile_projection():
    # the rhombus coverings of the hexagon are exactly the pile projections,
    # so tiling_to_pp succeeds on each and the map is onto
    box = BoxDims(2, 2, 2)
    g = build_hex_graph(box)
    for m in enumerate_matchings(g):
        t = matching_to_tiling(m, box)
        assert pp_to_tiling(tiling_to_pp(t), box) == t


def test_tiling_to_pp_rejects_incoherent():
    box = BoxDims(2, 2, 2)
    with pytest.raises(ValueError):  # non-covering rejected by validate
        HexTiling(box, frozenset({(0, -1, "A")})).validate()
    base = pp_to_tiling(PlanePartition(), box)
    # swap one rhombus for a mislabeled one, bypassing validate
    broken = set(base.rhombi)
    victim = sorted(broken)[0]
    broken.discard(victim)
    broken.add((victim[0] + 9, victim[1], victim[2]))
    with pytest.raises(ValueError):
        tiling_to_pp(HexTiling(box, frozenset(broken)))


def test_text_format_roundtrip():
    box = BoxDims(2, 2, 2)
    for pp in enumerate_box(box):
        t = pp_to_tiling(pp, box)
        assert parse_tiling(format_tiling(t), box) == t


def test_text_format_golden():
    # frozen on purpose: the format is documented as stable
    t = pp_to_tiling(PlanePartition([[2, 1], [1]]), BoxDims(2, 2, 2))
    assert format_tiling(t) == (
        "-2 0 C\n-2 1 A\n-1 -1 A\n-1 0 B\n-1 1 C\n0 -2 B\n"
        "0 -1 C\n0 0 A\n0 1 B\n1 -2 A\n1 -1 B\n1 0 C"
    )


def test_parse_tiling_rejects_garbage():
    with pytest.raises(ValueError, match="line 1"):
        parse_tiling("0 0 Z\n", BoxDims(1, 1, 1))
    with pytest.raises(ValueError):
        parse_tiling("0 0 A\n", BoxDims(1, 1, 1))  # not a full tiling


def test_isolated_vertex_graph():
    g = PlanarBipartiteGraph(
        ups=(("U", 0, 0), ("U", 5, 5)),
        downs=(("D", 0, 0), ("D", 5, 5)),
        edges=frozenset({(("U", 0, 0), ("D", 0, 0))}),
        positions={
            ("U", 0, 0): (Fraction(0), Fraction(0)),
            ("D", 0, 0): (Fraction(1), Fraction(0)),
            ("U", 5, 5): (Fraction(5), Fraction(5)),
            ("D", 5, 5): (Fraction(6), Fraction(5)),
        },
    )
    assert list(enumerate_matchings(g)) == []
    assert kasteleyn_count(g) == 0


def _grid_graph(rows, cols):
    ups, downs, pos = [], [], {}
    for i in range(rows):
        for j in range(cols):
            label = ("U", i, j) if (i + j) % 2 == 0 else ("D", i, j)
            (ups if (i + j) % 2 == 0 else downs).append(label)
            pos[label] = (Fraction(j), Fraction(-i))
    edges = set()
    for i in range(rows):
        for j in range(cols):
            for di, dj in ((0, 1), (1, 0)):
                ni, nj = i + di, j + dj
                if ni < rows and nj < cols:
                    a = ("U", i, j) if (i + j) % 2 == 0 else ("D", i, j)
                    b = ("U", ni, nj) if (ni + nj) % 2 == 0 else ("D", ni, nj)
                    edges.add((a, b) if a[0] == "U" else (b, a))
    return PlanarBipartiteGraph(tuple(sorted(ups)), tuple(sorted(downs)), frozenset(edges), pos)


@pytest.mark.parametrize(
    "rows,cols,count", [(2, 2, 2), (2, 3, 3), (3, 4, 11), (4, 4, 36), (2, 5, 8), (4, 5, 95)]
)
def test_generic_signs_on_square_grids(rows, cols, count):
    # square faces force genuinely negative signs, unlike honeycombs
    g = _grid_graph(rows, cols)
    assert kasteleyn_count(g) == count
    assert sum(1 for _ in enumerate_matchings(g)) == count


def test_non_planar_input_raises():
    from ppwb.dimer import NotSignable

    ups = tuple(("U", i, 0) for i in range(3))
    downs = tuple(("D", i, 0) for i in range(3))
    pos = {}
    for i in range(3):
        pos[("U", i, 0)] = (Fraction(i), Fraction(0))
        pos[("D", i, 0)] = (Fraction(i), Fraction(1))
    complete = PlanarBipartiteGraph(
        ups, downs, frozenset((u, d) for u in ups for d in downs), pos
    )
    with pytest.raises(NotSignable):
        kasteleyn_count(complete)


def test_square_face_needs_a_sign():
    # 4-cycle: one bounded face of length 4; the solver must flip one edge
    ups = (("U", 0, 0), ("U", 1, 1))
    downs = (("D", 0, 0), ("D", 1, 1))
    pos = {
        ("U", 0, 0): (Fraction(0), Fraction(0)),
        ("D", 0, 0): (Fraction(1), Fraction(0)),
        ("U", 1, 1): (Fraction(1), Fraction(1)),
        ("D", 1, 1): (Fraction(0), Fraction(1)),
    }
    edges = frozenset(
        {
            (("U", 0, 0), ("D", 0, 0)),
            (("U", 1, 1), ("D", 0, 0)),
            (("U", 1, 1), ("D", 1, 1)),
            (("U", 0, 0), ("D", 1, 1)),
        }
    )
    g = PlanarBipartiteGraph(ups, downs, edges, pos)
    assert [len(f) for f in bounded_faces(g)] == [4]
    assert kasteleyn_count(g) == 2 == sum(1 for _ in enumerate_matchings(g))
