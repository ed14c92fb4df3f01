"""Alternating sign matrices, monotone triangles, and the two trapezoid
families with their refined boundary statistics.

The refined equinumerosity checker compares, for given (m, n, k), the
count of Magog trapezoids by (maxima in the first row, minima in the
last row) against the count of Gog trapezoids by (minima in the first
column, maxima in column k).  An entry can qualify as both a maximum
and a minimum only when its upper bound is 1; how to count that case
is a runtime convention ("both", "max", "min").
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Sequence

from .qseries import total_self_complementary_count

ASM = tuple[tuple[int, ...], ...]
Triangle = tuple[tuple[int, ...], ...]

CONVENTIONS = ("both", "max", "min")


class InvalidParams(ValueError):
    """Trapezoid parameters out of range."""


def _check_params(m: int, n: int, k: int) -> None:
    if m < 0 or n < 1 or not 1 <= k <= n:
        raise InvalidParams(f"need m >= 0 and 1 <= k <= n, got (m={m}, n={n}, k={k})")


def validate_asm(matrix: Sequence[Sequence[int]]) -> bool:
    """Square 0/1/-1 matrix whose nonzero entries alternate along every
    row and column, starting and ending with 1."""
    rows = [list(r) for r in matrix]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        return False
    lines = rows + [[rows[i][j] for i in range(n)] for j in range(n)]
    for line in lines:
        nonzero = [x for x in line if x]
        if any(x not in (-1, 1) for x in line if x):
            return False
        if not nonzero or nonzero[0] != 1 or nonzero[-1] != 1:
            return False
        for a, b in zip(nonzero, nonzero[1:]):
            if a == b:
                return False
    return True


def is_monotone_triangle(rows: Sequence[Sequence[int]]) -> bool:
    """First row 1..n; rows strictly increasing and shrinking by one;
    columns weakly increasing; north-east diagonals weakly increasing."""
    t = [tuple(r) for r in rows]
    n = len(t)
    if n == 0 or t[0] != tuple(range(1, n + 1)):
        return False
    for i, row in enumerate(t):
        if len(row) != n - i:
            return False
        if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
            return False
        if i:
            prev = t[i - 1]
            for j, x in enumerate(row):
                if not prev[j] <= x <= prev[j + 1]:
                    return False
    return True


def enumerate_monotone_triangles(n: int) -> Iterator[Triangle]:
    if n < 1:
        raise InvalidParams("need n >= 1")
    first = tuple(range(1, n + 1))

    def extend(rows: list[tuple[int, ...]]) -> Iterator[Triangle]:
        prev = rows[-1]
        if len(prev) == 1:
            yield tuple(rows)
            return
        choices: list[tuple[int, ...]] = [()]
        for j in range(len(prev) - 1):
            new = []
            for partial in choices:
                lo = max(prev[j], partial[-1] + 1 if partial else 0)
                for v in range(lo, prev[j + 1] + 1):
                    new.append(partial + (v,))
            choices = new
        for row in choices:
            rows.append(row)
            yield from extend(rows)
            rows.pop()

    yield from extend([first])


def asm_to_mt(matrix: Sequence[Sequence[int]]) -> Triangle:
    """Row i of the 0/1 array is the sum of matrix rows i..n; the triangle
    records the positions of its ones, full row first."""
    rows = [tuple(r) for r in matrix]
    if not validate_asm(rows):
        raise ValueError("not an alternating sign matrix")
    n = len(rows)
    triangle = []
    for i in range(n):
        sums = [sum(rows[r][j] for r in range(i, n)) for j in range(n)]
        triangle.append(tuple(j + 1 for j, s in enumerate(sums) if s == 1))
    return tuple(triangle)


def mt_to_asm(triangle: Sequence[Sequence[int]]) -> ASM:
    if not is_monotone_triangle(triangle):
        raise ValueError("not a monotone triangle")
    t = [tuple(r) for r in triangle]
    n = len(t)
    zero_one = []
    for row in t:
        indicator = [0] * n
        for x in row:
            indicator[x - 1] = 1
        zero_one.append(indicator)
    zero_one.append([0] * n)
    return tuple(
        tuple(zero_one[i][j] - zero_one[i + 1][j] for j in range(n)) for i in range(n)
    )


def enumerate_asm(n: int) -> Iterator[ASM]:
    for t in enumerate_monotone_triangles(n):
        yield mt_to_asm(t)


@dataclass(frozen=True)
class MagogTrapezoid:
    m: int
    n: int
    k: int
    rows: Triangle  # row i (0-based) has n - i entries, i < k

    def first_row_bound(self, j: int) -> int:
        """Upper bound of the j-th (0-based) entry of the first row."""
        return self.m + j + 1


@dataclass(frozen=True)
class GogTrapezoid:
    m: int
    n: int
    k: int
    rows: Triangle  # row i (0-based) has min(k, n - i) entries

    def last_column_bound(self, i: int) -> int:
        """Upper bound of the column-k entry in row i (0-based)."""
        return self.m + self.k + i


def enumerate_magog(m: int, n: int, k: int) -> Iterator[MagogTrapezoid]:
    """Rows weakly increase, columns weakly decrease, first row capped
    entrywise by m+1, m+2, ..."""
    _check_params(m, n, k)
    rows: list[list[int]] = []

    def fill_row(i: int) -> Iterator[MagogTrapezoid]:
        if i == k:
            yield MagogTrapezoid(m, n, k, tuple(tuple(r) for r in rows))
            return
        length = n - i
        row: list[int] = []

        def fill(j: int) -> Iterator[MagogTrapezoid]:
            if j == length:
                rows.append(row[:])
                yield from fill_row(i + 1)
                rows.pop()
                return
            lo = row[j - 1] if j else 1
            hi = m + j + 1 if i == 0 else rows[i - 1][j]
            for v in range(lo, hi + 1):
                row.append(v)
                yield from fill(j + 1)
                row.pop()

        yield from fill(0)

    yield from fill_row(0)


def enumerate_gog(m: int, n: int, k: int) -> Iterator[GogTrapezoid]:
    """Rows strictly increase, columns weakly increase, the diagonal
    neighbour below-left is at most the one above-right, and column k is
    capped by m+k, m+k+1, ..."""
    _check_params(m, n, k)
    lengths = [min(k, n - i) for i in range(n)]
    rows: list[list[int]] = []

    def fill_row(i: int) -> Iterator[GogTrapezoid]:
        if i == n:
            yield GogTrapezoid(m, n, k, tuple(tuple(r) for r in rows))
            return
        length = lengths[i]
        row: list[int] = []

        def fill(j: int) -> Iterator[GogTrapezoid]:
            if j == length:
                rows.append(row[:])
                yield from fill_row(i + 1)
                rows.pop()
                return
            lo = 1
            if j:
                lo = max(lo, row[j - 1] + 1)
            if i:
                lo = max(lo, rows[i - 1][j])
            if j == k - 1:
                hi = m + k + i
            else:
                # the diagonal constraint against the row above caps it
                hi = rows[i - 1][j + 1] if i else m + j + 1
            for v in range(lo, hi + 1):
                row.append(v)
                yield from fill(j + 1)
                row.pop()

        yield from fill(0)

    yield from fill_row(0)


def _count_boundary(entries: Sequence[int], bounds: Sequence[int], convention: str):
    """Count maxima (entry equals bound) and minima (entry equals 1)."""
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}")
    maxima = minima = 0
    for x, bnd in zip(entries, bounds):
        is_max = x == bnd
        is_min = x == 1
        if is_max and is_min:
            if convention in ("both", "max"):
                maxima += 1
            if convention in ("both", "min"):
                minima += 1
        elif is_max:
            maxima += 1
        elif is_min:
            minima += 1
    return maxima, minima


def magog_stats(t: MagogTrapezoid, convention: str = "both") -> tuple[int, int]:
    """(maxima in the first row, minima in the last row)."""
    first = t.rows[0]
    bounds = [t.first_row_bound(j) for j in range(len(first))]
    if t.k == 1:
        return _count_boundary(first, bounds, convention)
    maxima = sum(1 for j, x in enumerate(first) if x == bounds[j])
    minima = sum(1 for x in t.rows[t.k - 1] if x == 1)
    return maxima, minima


def gog_stats(g: GogTrapezoid, convention: str = "both") -> tuple[int, int]:
    """(maxima in column k, minima in column 1)."""
    if g.k == 1:
        column = [row[0] for row in g.rows]
        bounds = [g.last_column_bound(i) for i in range(len(column))]
        return _count_boundary(column, bounds, convention)
    maxima = sum(
        1
        for i, row in enumerate(g.rows)
        if len(row) == g.k and row[g.k - 1] == g.last_column_bound(i)
    )
    minima = sum(1 for row in g.rows if row[0] == 1)
    return maxima, minima


StatTable = dict[tuple[int, int], int]


@dataclass(frozen=True)
class ConjectureReport:
    m: int
    n: int
    k: int
    convention: str
    magog: StatTable  # keyed by (s, t)
    gog: StatTable  # keyed by (s, t) = (minima, maxima), the predicted pairing
    gog_unswapped: StatTable  # keyed by (maxima, minima), diagnostic only
    equal: bool
    equal_unswapped: bool

    def to_json(self) -> str:
        def table(d: StatTable):
            return [[s, t, str(v)] for (s, t), v in sorted(d.items())]

        return json.dumps(
            {
                "params": {"m": self.m, "n": self.n, "k": self.k},
                "convention": self.convention,
                "magog": table(self.magog),
                "gog": table(self.gog),
                "gog_unswapped": table(self.gog_unswapped),
                "equal": self.equal,
                "equal_unswapped": self.equal_unswapped,
            },
            sort_keys=True,
        )


def conjecture_tables(m: int, n: int, k: int, convention: str = "both") -> ConjectureReport:
    """Build both refined tables and compare them entrywise.

    The Gog table is re-keyed so that entrywise equality is exactly the
    predicted pairing: a Gog array with u maxima in column k and v
    minima in column 1 is booked under (s, t) = (v, u).
    """
    _check_params(m, n, k)
    magog: StatTable = {}
    for t in enumerate_magog(m, n, k):
        s, tt = magog_stats(t, convention)
        magog[(s, tt)] = magog.get((s, tt), 0) + 1
    gog: StatTable = {}
    gog_unswapped: StatTable = {}
    for g in enumerate_gog(m, n, k):
        u, v = gog_stats(g, convention)
        gog[(v, u)] = gog.get((v, u), 0) + 1
        gog_unswapped[(u, v)] = gog_unswapped.get((u, v), 0) + 1
    return ConjectureReport(
        m,
        n,
        k,
        convention,
        magog,
        gog,
        gog_unswapped,
        magog == gog,
        magog == gog_unswapped,
    )


def k1_count(m: int, n: int, s: int, t: int) -> int:
    """Closed binomial-difference count for single-column trapezoids with
    s maxima and t minima; established for m >= 1.

    Binomials with a negative top evaluate to 0, which is what makes the
    difference vanish on infeasible (s, t).
    """

    def binom(x: int, j: int) -> int:
        if j < 0 or x < 0 or j > x:
            return 0
        out = 1
        for i in range(j):
            out = out * (x - i) // (i + 1)
        return out

    top = m + 2 * n - s - t - 2
    return binom(top, m + n - 2) - binom(top, m + n - 1)


def tsscpp_magog_check(n: int) -> bool:
    """Fully symmetric self-complementary fillings of the 2n-cube are
    equinumerous with (0, n, n) Magog trapezoids."""
    from .core import BoxDims
    from .symmetry import enumerate_class

    box = BoxDims(2 * n, 2 * n, 2 * n)
    lhs = sum(1 for _ in enumerate_class(10, box))
    rhs = sum(1 for _ in enumerate_magog(0, n, n))
    return lhs == rhs and lhs == total_self_complementary_count(n)
