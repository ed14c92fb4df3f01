"""Nonintersecting lattice paths and determinant counting.

Paths use unit Right/Up steps in the positive direction.  For an
a x b x c box the standard family has path i running from (-i, i) to
(a - i, c + i), i = 1..b; such a family is in bijection with the
plane partitions in the box.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .core import BoxDims, PlanePartition

Point = tuple[int, int]


class DimensionMismatch(ValueError):
    """Start and end point sequences of different lengths."""


def path_count(start: Point, end: Point) -> int:
    """Number of Right/Up lattice paths from start to end."""
    dx = end[0] - start[0]
    dy = end[1] - start[1]
    if dx < 0 or dy < 0:
        return 0
    return math.comb(dx + dy, dx)


def det_int(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    m = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def lgv_determinant(starts: Sequence[Point], ends: Sequence[Point]) -> int:
    """det of the path-count matrix, entry (i, j) counting starts[j] -> ends[i]."""
    if len(starts) != len(ends):
        raise DimensionMismatch(f"{len(starts)} starts vs {len(ends)} ends")
    return det_int([[path_count(s, e) for s in starts] for e in ends])


def standard_endpoints(box: BoxDims) -> tuple[tuple[Point, ...], tuple[Point, ...]]:
    a, _, c = box
    starts = tuple((-i, i) for i in range(1, box.b + 1))
    ends = tuple((a - i, c + i) for i in range(1, box.b + 1))
    return starts, ends


def _binom(n: int, k: int) -> int:
    return math.comb(n, k) if 0 <= k <= n else 0


def box_det_count(box: BoxDims) -> int:
    """Plane partition count of the box as a b x b binomial determinant."""
    a, b, c = BoxDims(*box).validate()
    return det_int([[_binom(a + c, a - i + j) for j in range(1, b + 1)] for i in range(1, b + 1)])


@dataclass(frozen=True)
class LatticePath:
    start: Point
    steps: str  # over {"R", "U"}

    def __post_init__(self):
        if set(self.steps) - {"R", "U"}:
            raise ValueError(f"steps must be R/U, got {self.steps!r}")

    @property
    def end(self) -> Point:
        return (
            self.start[0] + self.steps.count("R"),
            self.start[1] + self.steps.count("U"),
        )

    def points(self) -> list[Point]:
        x, y = self.start
        pts = [(x, y)]
        for s in self.steps:
            if s == "R":
                x += 1
            else:
                y += 1
            pts.append((x, y))
        return pts


def nonintersecting(paths: Sequence[LatticePath]) -> bool:
    seen: set[Point] = set()
    for p in paths:
        pts = p.points()
        if seen.intersection(pts):
            return False
        seen.update(pts)
    return True


def pp_to_paths(pp: PlanePartition, box: BoxDims) -> tuple[LatticePath, ...]:
    """Encode the box filling as the standard nonintersecting family.

    Path i carries column b + 1 - i of the filling: reading the column
    bottom to top gives, for each Right step in order, the number of Up
    steps that precede it.
    """
    box = BoxDims(*box).validate()
    a, b, c = box
    grid = pp.grid(box)
    starts, _ = standard_endpoints(box)
    paths = []
    for i in range(1, b + 1):
        col = b - i  # 0-based column carried by path i
        steps = []
        prev = 0
        for k in range(1, a + 1):
            ups = grid[a - k][col]
            steps.append("U" * (ups - prev) + "R")
            prev = ups
        steps.append("U" * (c - prev))
        paths.append(LatticePath(starts[i - 1], "".join(steps)))
    return tuple(paths)


def paths_to_pp(paths: Sequence[LatticePath], box: BoxDims) -> PlanePartition:
    """Decode a standard nonintersecting family back to the box filling."""
    box = BoxDims(*box).validate()
    a, b, c = box
    starts, ends = standard_endpoints(box)
    if len(paths) != b:
        raise ValueError(f"expected {b} paths, got {len(paths)}")
    for i, p in enumerate(paths):
        if p.start != starts[i] or p.end != ends[i]:
            raise ValueError(f"path {i + 1} must run {starts[i]} -> {ends[i]}")
        if p.steps.count("R") != a:
            raise ValueError(f"path {i + 1} must take {a} Right steps")
    if not nonintersecting(paths):
        raise ValueError("paths intersect")
    grid = [[0] * b for _ in range(a)]
    for i, p in enumerate(paths, start=1):
        col = b - i
        ups = 0
        k = 0
        for s in p.steps:
            if s == "U":
                ups += 1
            else:
                k += 1
                grid[a - k][col] = ups
    return PlanePartition(grid)
