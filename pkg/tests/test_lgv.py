import itertools

import pytest

from ppwb.core import BoxDims, PlanePartition, enumerate_box
from ppwb.lgv import (
    DimensionMismatch,
    LatticePath,
    box_det_count,
    det_int,
    lgv_determinant,
    nonintersecting,
    path_count,
    paths_to_pp,
    pp_to_paths,
    standard_endpoints,
)
from ppwb.qseries import box_count


def enumerate_path_families(box):
    """Oracle: backtrack over all nonintersecting standard families."""
    starts, ends = standard_endpoints(box)

    def paths_between(s, e):
        dx, dy = e[0] - s[0], e[1] - s[1]
        for rpos in itertools.combinations(range(dx + dy), dx):
            steps = ["U"] * (dx + dy)
            for r in rpos:
                steps[r] = "R"
            yield LatticePath(s, "".join(steps))

    def extend(i, chosen, used):
        if i == len(starts):
            yield tuple(chosen)
            return
        for p in paths_between(starts[i], ends[i]):
            pts = set(p.points())
            if pts & used:
                continue
            chosen.append(p)
            yield from extend(i + 1, chosen, used | pts)
            chosen.pop()

    yield from extend(0, [], set())


def test_path_count():
    assert path_count((0, 0), (0, 0)) == 1
    assert path_count((0, 0), (2, 2)) == 6
    assert path_count((0, 0), (-1, 0)) == 0


def test_det_int():
    assert det_int([]) == 1
    assert det_int([[5]]) == 5
    assert det_int([[6, 4], [4, 6]]) == 20
    assert det_int([[0, 1], [1, 0]]) == -1
    assert det_int([[1, 2], [2, 4]]) == 0
    assert det_int([[2, 0, 1], [0, 3, 0], [1, 0, 2]]) == 9


def test_lgv_determinant():
    assert lgv_determinant([(0, 0)], [(2, 2)]) == 6
    assert lgv_determinant([(-1, 1), (-2, 2)], [(1, 3), (0, 4)]) == 20
    starts, ends = standard_endpoints(BoxDims(3, 3, 3))
    assert lgv_determinant(starts, ends) == 980
    with pytest.raises(DimensionMismatch):
        lgv_determinant([(0, 0)], [(1, 1), (2, 2)])


def test_lgv_determinant_antisymmetric_in_starts():
    starts, ends = standard_endpoints(BoxDims(2, 2, 2))
    swapped = (starts[1], starts[0])
    assert lgv_determinant(swapped, ends) == -lgv_determinant(starts, ends)


@pytest.mark.parametrize(
    "dims,count", [((1, 1, 1), 2), ((2, 2, 2), 20), ((2, 3, 4), 490)]
)
def test_box_det_count(dims, count):
    assert box_det_count(BoxDims(*dims)) == count


def test_box_det_count_cross_method():
    for dims in itertools.product((1, 2, 3), repeat=3):
        box = BoxDims(*dims)
        assert box_det_count(box) == box_count(box)
        assert box_det_count(box) == box_det_count(BoxDims(dims[2], dims[1], dims[0]))


@pytest.mark.parametrize("dims", list(itertools.product((1, 2, 3), repeat=3)))
def test_family_backtracking_oracle(dims):
    box = BoxDims(*dims)
    families = sum(1 for _ in enumerate_path_families(box))
    assert families == box_det_count(box) == box_count(box)


def test_extreme_configurations():
    box = BoxDims(2, 2, 3)
    zero = pp_to_paths(PlanePartition(), box)
    assert all(p.steps == "RR" + "UUU" for p in zero)
    full = pp_to_paths(PlanePartition([[3, 3], [3, 3]]), box)
    assert all(p.steps == "UUU" + "RR" for p in full)


@pytest.mark.parametrize("dims", [(2, 2, 2), (2, 3, 2), (3, 2, 3)])
def test_bijection_roundtrip_exhaustive(dims):
    box = BoxDims(*dims)
    starts, ends = standard_endpoints(box)
    images = set()
    for pp in enumerate_box(box):
        paths = pp_to_paths(pp, box)
        assert nonintersecting(paths)
        assert tuple(p.start for p in paths) == starts
        assert tuple(p.end for p in paths) == ends
        assert paths_to_pp(paths, box) == pp
        images.add(paths)
    assert len(images) == box_count(box)


def test_bijection_is_onto_the_oracle_families():
    box = BoxDims(2, 2, 2)
    images = {pp_to_paths(pp, box) for pp in enumerate_box(box)}
    families = set(enumerate_path_families(box))
    assert images == families


def test_paths_to_pp_rejects_bad_input():
    box = BoxDims(2, 2, 2)
    good = pp_to_paths(PlanePartition([[2, 1], [1]]), box)
    with pytest.raises(ValueError, match="expected 2 paths"):
        paths_to_pp(good[:1], box)
    shifted = (LatticePath((0, 0), good[0].steps), good[1])
    with pytest.raises(ValueError, match="must run"):
        paths_to_pp(shifted, box)
    crossing = (
        LatticePath((-1, 1), "UURR"),
        LatticePath((-2, 2), "RRUU"),
    )
    with pytest.raises(ValueError, match="intersect"):
        paths_to_pp(crossing, box)
    with pytest.raises(ValueError):
        LatticePath((0, 0), "RX")
