"""Reflection, rotation, complementation, and the ten symmetry classes.

Fillings of a box are handled as cube sets: 1-based triples (i, j, k)
that are downward closed.  Class membership is tested by composing the
three operations literally; the class enumerator instead propagates
forced cells during backtracking, so the two routes check each other.
"""

from __future__ import annotations

from typing import Callable, Iterator

from .core import BoxDims, PlanePartition

CubeSet = frozenset  # of (i, j, k) triples, 1-based

CLASS_IDS = range(1, 11)


def to_cubes(pp: PlanePartition) -> CubeSet:
    """(i, j, k) is present iff entry (i, j) is at least k."""
    return frozenset(
        (i + 1, j + 1, k)
        for i, row in enumerate(pp.rows)
        for j, x in enumerate(row)
        for k in range(1, x + 1)
    )


def is_downward_closed(cubes: CubeSet) -> bool:
    for i, j, k in cubes:
        if min(i, j, k) < 1:
            return False
        if i > 1 and (i - 1, j, k) not in cubes:
            return False
        if j > 1 and (i, j - 1, k) not in cubes:
            return False
        if k > 1 and (i, j, k - 1) not in cubes:
            return False
    return True


def from_cubes(cubes: CubeSet) -> PlanePartition:
    if not is_downward_closed(cubes):
        raise ValueError("cube set is not downward closed")
    if not cubes:
        return PlanePartition()
    a = max(i for i, _, _ in cubes)
    b = max(j for _, j, _ in cubes)
    grid = [[0] * b for _ in range(a)]
    for i, j, _ in cubes:
        grid[i - 1][j - 1] += 1
    return PlanePartition(grid)


def reflect(pp: PlanePartition) -> PlanePartition:
    return pp.transpose()


def rotate(cubes: CubeSet) -> CubeSet:
    """Cycle the coordinates: (i, j, k) -> (j, k, i)."""
    return frozenset((j, k, i) for i, j, k in cubes)


def complement(cubes: CubeSet, box: BoxDims) -> CubeSet:
    a, b, c = box
    for i, j, k in cubes:
        if not (1 <= i <= a and 1 <= j <= b and 1 <= k <= c):
            raise ValueError(f"cube {(i, j, k)} outside {box}")
    return frozenset(
        (a + 1 - i, b + 1 - j, c + 1 - k)
        for i in range(1, a + 1)
        for j in range(1, b + 1)
        for k in range(1, c + 1)
        if (i, j, k) not in cubes
    )


def is_in_class(pp: PlanePartition, box: BoxDims, cls: int) -> bool:
    """Exact membership predicate for symmetry class 1..10.

    Classes with side constraints (square base for reflection, cube for
    rotation) return False on mismatched boxes.
    """
    if cls not in CLASS_IDS:
        raise ValueError(f"unknown symmetry class {cls}")
    if not pp.fits(box):
        raise ValueError(f"plane partition does not fit in {box}")
    a, b, c = box
    if cls == 1:
        return True
    square = a == b
    cube = a == b == c
    cubes = to_cubes(pp)

    def symmetric() -> bool:
        return square and reflect(pp) == pp

    def cyclic() -> bool:
        return cube and rotate(cubes) == cubes

    def self_comp() -> bool:
        return complement(cubes, box) == cubes

    def transpose_comp() -> bool:
        return square and reflect(from_cubes(complement(cubes, box))) == pp

    if cls == 2:
        return symmetric()
    if cls == 3:
        return cyclic()
    if cls == 4:
        return symmetric() and cyclic()
    if cls == 5:
        return self_comp()
    if cls == 6:
        return transpose_comp()
    if cls == 7:
        return symmetric() and self_comp()
    if cls == 8:
        return cyclic() and transpose_comp()
    if cls == 9:
        return cyclic() and self_comp()
    return symmetric() and cyclic() and self_comp()


def _class_maps(cls: int, box: BoxDims):
    """Cell maps defining a class: value-preserving and value-flipping.

    Returns None when the box shape rules the class out entirely.
    """
    a, b, c = box
    refl = lambda i, j, k: (j, i, k)
    rot = lambda i, j, k: (j, k, i)
    comp = lambda i, j, k: (a + 1 - i, b + 1 - j, c + 1 - k)
    refl_comp = lambda i, j, k: (a + 1 - j, b + 1 - i, c + 1 - k)
    pos: list[Callable] = []
    neg: list[Callable] = []
    if cls in (2, 4, 7, 10):
        if a != b:
            return None
        pos.append(refl)
    if cls in (3, 4, 8, 9, 10):
        if not (a == b == c):
            return None
        pos.append(rot)
    if cls in (5, 7, 9, 10):
        neg.append(comp)
    if cls in (6, 8):
        if a != b:
            return None
        neg.append(refl_comp)
    return pos, neg


def enumerate_class(cls: int, box: BoxDims) -> Iterator[PlanePartition]:
    """Members of the class in the box, by propagated backtracking.

    Setting a cell immediately forces every image under the class maps
    (same value for symmetries, flipped for complement-type maps) and
    the cells implied by downward closure; a contradiction prunes the
    branch.
    """
    if cls not in CLASS_IDS:
        raise ValueError(f"unknown symmetry class {cls}")
    box = BoxDims(*box).validate()
    maps = _class_maps(cls, box)
    if maps is None:
        return
    pos, neg = maps
    a, b, c = box
    if c == 0:
        yield PlanePartition()
        return
    cells = [(i, j, k) for i in range(1, a + 1) for j in range(1, b + 1) for k in range(1, c + 1)]
    index = {cell: n for n, cell in enumerate(cells)}
    ncells = len(cells)

    pos_maps = [[index[f(*cell)] for cell in cells] for f in pos]
    neg_maps = [[index[f(*cell)] for cell in cells] for f in neg]
    preds: list[list[int]] = []
    succs: list[list[int]] = []
    for (i, j, k) in cells:
        preds.append(
            [index[t] for t in ((i - 1, j, k), (i, j - 1, k), (i, j, k - 1)) if min(t) >= 1]
        )
        succs.append(
            [
                index[t]
                for t in ((i + 1, j, k), (i, j + 1, k), (i, j, k + 1))
                if t[0] <= a and t[1] <= b and t[2] <= c
            ]
        )

    UNKNOWN, IN, OUT = 0, 1, 2
    state = bytearray(ncells)

    def assign(n: int, val: int, trail: list[int]) -> bool:
        queue = [(n, val)]
        while queue:
            n, val = queue.pop()
            if state[n] != UNKNOWN:
                if state[n] != val:
                    return False
                continue
            state[n] = val
            trail.append(n)
            for pm in pos_maps:
                queue.append((pm[n], val))
            for nm in neg_maps:
                queue.append((nm[n], IN if val == OUT else OUT))
            if val == IN:
                for p in preds[n]:
                    queue.append((p, IN))
            else:
                for s in succs[n]:
                    queue.append((s, OUT))
        return True

    def undo(trail: list[int]) -> None:
        for n in trail:
            state[n] = UNKNOWN

    def build() -> PlanePartition:
        grid = [[0] * b for _ in range(a)]
        for n, (i, j, _) in enumerate(cells):
            if state[n] == IN:
                grid[i - 1][j - 1] += 1
        return PlanePartition(grid)

    def search(start: int) -> Iterator[PlanePartition]:
        n = start
        while n < ncells and state[n] != UNKNOWN:
            n += 1
        if n == ncells:
            yield build()
            return
        for val in (IN, OUT):
            trail: list[int] = []
            if assign(n, val, trail):
                yield from search(n + 1)
            undo(trail)

    yield from search(0)


def branch_cell_estimate(cls: int, box: BoxDims) -> int:
    """Upper bound on the cells the class enumerator branches on
    (one per orbit of the class maps)."""
    maps = _class_maps(cls, box)
    if maps is None:
        return 0
    pos, neg = maps
    a, b, c = box
    seen = set()
    orbits = 0
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            for k in range(1, c + 1):
                if (i, j, k) in seen:
                    continue
                orbits += 1
                stack = [(i, j, k)]
                while stack:
                    cell = stack.pop()
                    if cell in seen:
                        continue
                    seen.add(cell)
                    for f in pos + neg:
                        stack.append(f(*cell))
    return orbits


def orbit_weight(pp: PlanePartition) -> int:
    """Number of cube positions up to reordering the three coordinates."""
    return len({tuple(sorted(cube)) for cube in to_cubes(pp)})


def class_gf(cls: int, box: BoxDims, weight: str = "size"):
    """Sum of q^weight over the class members in the box (brute force)."""
    from .qseries import QPolynomial

    if weight == "size":
        wf = lambda pp: pp.size()
    elif weight == "half":
        wf = lambda pp: pp.half_size()
    elif weight == "orbit":
        wf = orbit_weight
    else:
        raise ValueError(f"unknown weight {weight!r}")
    counts: dict[int, int] = {}
    for pp in enumerate_class(cls, box):
        w = wf(pp)
        counts[w] = counts.get(w, 0) + 1
    coeffs = [0] * (max(counts, default=0) + 1)
    for w, n in counts.items():
        coeffs[w] = n
    return QPolynomial(coeffs)
