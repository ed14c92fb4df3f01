"""Diagonal-sum statistics: the trace bijection chain and its series.

The chain runs: conjugate every row, write each column in split
Frobenius form, collect the halves into a pair of column-strict arrays
of equal shape, and convert the pair into a finitely supported weight
matrix through row-insertion.  The two transported statistics are
  size(pp)  = sum (i + j - 1) * m[i, j]
  trace(pp) = sum m[i, j]
and the whole composite is a bijection (checked exhaustively on the
small-size corpus in the tests).
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .core import (
    Partition,
    PlanePartition,
    ReversePlanePartition,
    check_partition,
    conjugate,
    enumerate_by_size,
    frobenius_pair,
)

RowArray = tuple[tuple[int, ...], ...]
WeightMatrix = dict[tuple[int, int], int]  # 1-based (i, j) -> positive count


def row_conjugate(pp: PlanePartition) -> RowArray:
    """Replace each row by its conjugate partition."""
    out = []
    for row in pp.rows:
        parts = tuple(x for x in row if x > 0)
        out.append(conjugate(parts))
    while out and not out[-1]:
        out.pop()
    return tuple(out)


def _columns(arr: RowArray) -> list[tuple[int, ...]]:
    width = max((len(r) for r in arr), default=0)
    cols = []
    for j in range(width):
        col = tuple(r[j] for r in arr if len(r) > j)
        cols.append(col)
    return cols


def _from_columns(cols: Sequence[tuple[int, ...]]) -> RowArray:
    height = max((len(c) for c in cols), default=0)
    return tuple(
        tuple(c[i] for c in cols if len(c) > i) for i in range(height)
    )


def frobenius_split(arr: RowArray) -> tuple[RowArray, RowArray]:
    """Column k of each output is one half of column k's Frobenius pair."""
    first, second = [], []
    for col in _columns(arr):
        alpha, beta = frobenius_pair(check_partition(col))
        first.append(alpha)
        second.append(beta)
    c1 = _from_columns(first)
    c2 = _from_columns(second)
    return c1, c2


def is_column_strict(arr: RowArray) -> bool:
    """Rows weakly decreasing, columns strictly decreasing, positive parts."""
    for i, row in enumerate(arr):
        if i and len(row) > len(arr[i - 1]):
            return False
        for j, x in enumerate(row):
            if x < 1:
                return False
            if j and row[j - 1] < x:
                return False
            if i and arr[i - 1][j] <= x:
                return False
    return True


def _row_insert(tableau: list[list[int]], recording: list[list[int]], label: int, value: int):
    """Insert value by row bumping; put label at the new cell of recording."""
    r = 0
    while True:
        if r == len(tableau):
            tableau.append([value])
            recording.append([label])
            return
        row = tableau[r]
        if not row or value >= row[-1]:
            row.append(value)
            recording[r].append(label)
            return
        # bump the leftmost entry strictly greater than value
        lo, hi = 0, len(row) - 1
        while lo < hi:
            mid = (lo + hi) // 2
            if row[mid] > value:
                hi = mid
            else:
                lo = mid + 1
        row[lo], value = value, row[lo]
        r += 1


def _rsk_from_pairs(pairs: Iterator[tuple[int, int]]) -> tuple[list[list[int]], list[list[int]]]:
    p: list[list[int]] = []
    q: list[list[int]] = []
    for i, j in pairs:
        _row_insert(p, q, i, j)
    return p, q


def _rsk_to_pairs(p: list[list[int]], q: list[list[int]]) -> list[tuple[int, int]]:
    p = [list(r) for r in p]
    q = [list(r) for r in q]
    pairs: list[tuple[int, int]] = []
    while q and q[0]:
        best = None
        for r, row in enumerate(q):
            for cidx, label in enumerate(row):
                if best is None or label > best[0] or (label == best[0] and cidx > best[2]):
                    best = (label, r, cidx)
        label, r, cidx = best
        if cidx != len(q[r]) - 1:
            raise ValueError("recording array is not semistandard")
        q[r].pop()
        value = p[r].pop()
        for rr in range(r - 1, -1, -1):
            row = p[rr]
            # rightmost entry strictly below the rising value
            lo, hi = 0, len(row) - 1
            while lo < hi:
                mid = (lo + hi + 1) // 2
                if row[mid] < value:
                    lo = mid
                else:
                    hi = mid - 1
            if row[lo] >= value:
                raise ValueError("reverse insertion failed")
            row[lo], value = value, row[lo]
        pairs.append((label, value))
        if not q[-1]:
            q.pop()
            p.pop()
    return pairs[::-1]


def _flip(arr: RowArray, bound: int) -> list[list[int]]:
    """Entry e -> bound + 1 - e, turning column-strict into semistandard."""
    return [[bound + 1 - x for x in row] for row in arr]


def knuth_map(c1: RowArray, c2: RowArray) -> WeightMatrix:
    """Column-strict pair of equal shape -> finitely supported matrix.

    Transported statistics: the part count of c1 becomes the total of
    the matrix, and the combined part sum becomes sum (i + j) m[i, j].
    """
    c1 = tuple(tuple(r) for r in c1)
    c2 = tuple(tuple(r) for r in c2)
    if tuple(len(r) for r in c1) != tuple(len(r) for r in c2):
        raise ValueError("the two arrays must have the same shape")
    if not (is_column_strict(c1) and is_column_strict(c2)):
        raise ValueError("arrays must be column-strict")
    if not c1:
        return {}
    bound = max(max(row) for row in c1 + c2)
    t1 = _flip(c1, bound)  # insertion tableau
    t2 = _flip(c2, bound)  # recording tableau
    pairs = _rsk_to_pairs(t1, t2)
    matrix: WeightMatrix = {}
    for i, j in pairs:
        key = (bound + 1 - i, bound + 1 - j)
        matrix[key] = matrix.get(key, 0) + 1
    return matrix


def knuth_unmap(matrix: WeightMatrix) -> tuple[RowArray, RowArray]:
    """Inverse of knuth_map."""
    if not matrix:
        return (), ()
    for (i, j), v in matrix.items():
        if i < 1 or j < 1 or v < 1:
            raise ValueError(f"bad matrix entry m[{i},{j}] = {v}")
    bound = max(max(i for i, _ in matrix), max(j for _, j in matrix))
    biletters = []
    for (i, j), v in matrix.items():
        biletters.extend([(bound + 1 - i, bound + 1 - j)] * v)
    biletters.sort()
    t1, t2 = _rsk_from_pairs(iter(biletters))
    c1 = tuple(tuple(bound + 1 - x for x in row) for row in t1)
    c2 = tuple(tuple(bound + 1 - x for x in row) for row in t2)
    return c1, c2


def stanley_map(pp: PlanePartition) -> WeightMatrix:
    """The full chain from a plane partition to its weight matrix."""
    c1, c2 = frobenius_split(row_conjugate(pp))
    return knuth_map(c1, c2)


class BivariateSeries:
    """Coefficients of t^k q^n for n up to a fixed truncation degree."""

    __slots__ = ("bound", "coeffs")

    def __init__(self, bound: int, coeffs: dict[tuple[int, int], int] | None = None):
        self.bound = bound
        self.coeffs: dict[tuple[int, int], int] = {}
        for (k, n), v in (coeffs or {}).items():
            if v and n <= bound:
                self.coeffs[(k, n)] = v

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BivariateSeries)
            and self.bound == other.bound
            and self.coeffs == other.coeffs
        )

    def coeff(self, k: int, n: int) -> int:
        return self.coeffs.get((k, n), 0)

    def q_slice(self, n: int) -> dict[int, int]:
        return {k: v for (k, nn), v in self.coeffs.items() if nn == n}

    def at_t_one(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (_, n), v in self.coeffs.items():
            out[n] = out.get(n, 0) + v
        return out

    def __repr__(self) -> str:
        return f"BivariateSeries(bound={self.bound}, terms={len(self.coeffs)})"


def trace_gf_bruteforce(n: int) -> BivariateSeries:
    """Sum of t^trace q^size over everything of size at most n."""
    coeffs = {(0, 0): 1}
    for pp in enumerate_by_size(n):
        key = (pp.trace(), pp.size())
        coeffs[key] = coeffs.get(key, 0) + 1
    return BivariateSeries(n, coeffs)


def trace_gf_product(n: int) -> BivariateSeries:
    """Product expansion of prod over i,j >= 1 of 1/(1 - t q^(i+j-1)).

    There are d pairs (i, j) with i + j - 1 = d, so the factor for
    exponent d appears d times.
    """
    coeffs = {(0, 0): 1}
    for d in range(1, n + 1):
        for _ in range(d):
            # in-place geometric multiply by 1/(1 - t q^d), truncated at q^n
            for qdeg in range(d, n + 1):
                slice_keys = [key for key in coeffs if key[1] == qdeg - d]
                for k, m in slice_keys:
                    key = (k + 1, qdeg)
                    coeffs[key] = coeffs.get(key, 0) + coeffs[(k, m)]
    return BivariateSeries(n, coeffs)


def _enumerate_rpp(shape: Partition, bound: int) -> Iterator[ReversePlanePartition]:
    """Reverse plane partitions of the shape with entry sum at most bound."""
    cells = [(i, j) for i, L in enumerate(shape) for j in range(L)]
    grid = [[0] * L for L in shape]

    def fill(pos: int, total: int) -> Iterator[ReversePlanePartition]:
        if pos == len(cells):
            yield ReversePlanePartition(shape, [tuple(r) for r in grid])
            return
        i, j = cells[pos]
        lo = 0
        if j:
            lo = max(lo, grid[i][j - 1])
        if i and len(grid[i - 1]) > j:
            lo = max(lo, grid[i - 1][j])
        for v in range(lo, bound - total + 1):
            grid[i][j] = v
            yield from fill(pos + 1, total + v)
        grid[i][j] = 0

    yield from fill(0, 0)


def gansner_check(shape: Sequence[int], degree: int) -> bool:
    """Check the diagonal-trace product identity for reverse fillings.

    Left side: sum over reverse plane partitions of the shape of
    prod x_i^(trace_i), truncated at total degree `degree` (the traces
    sum to the size, so the truncation is a size cutoff).  Right side:
    product over the cells of 1/(1 - x(cell)) where x(cell) multiplies
    the variables indexed j - conj(shape)_j .. shape_i - i for the cell
    in row i, column j (1-based).
    """
    shape = check_partition(shape)
    if not shape:
        return True
    ell = len(shape)
    width = shape[0]
    offset = ell - 1  # variable index i is stored at slot i + offset
    nvars = width - 1 + ell
    conj = conjugate(shape)

    lhs: dict[tuple[int, ...], int] = {}
    for rpp in _enumerate_rpp(shape, degree):
        exp = tuple(rpp.i_trace(i) for i in range(1 - ell, width))
        lhs[exp] = lhs.get(exp, 0) + 1

    rhs: dict[tuple[int, ...], int] = {tuple([0] * nvars): 1}
    for i in range(1, ell + 1):
        for j in range(1, shape[i - 1] + 1):
            lo = j - conj[j - 1]
            hi = shape[i - 1] - i
            mono = [0] * nvars
            for idx in range(lo, hi + 1):
                mono[idx + offset] += 1
            step = sum(mono)
            new = dict(rhs)
            # geometric series in the cell monomial, truncated by total degree
            frontier = list(rhs.items())
            while frontier:
                nxt = []
                for exp, v in frontier:
                    total = sum(exp) + step
                    if total > degree:
                        continue
                    key = tuple(e + m for e, m in zip(exp, mono))
                    new[key] = new.get(key, 0) + v
                    nxt.append((key, v))
                frontier = nxt
            rhs = new

    rhs = {e: v for e, v in rhs.items() if sum(e) <= degree}
    return lhs == rhs
