"""Partitions, plane partitions, and the brute-force enumerators.

A plane partition is stored as a rectangular grid of non-negative
integers that weakly decrease along rows and columns.  Two grids that
differ only in trailing all-zero rows or columns denote the same
object, so the constructor trims them and equality is plain grid
equality afterwards.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple, Sequence

Partition = tuple[int, ...]


def check_partition(parts: Sequence[int]) -> Partition:
    """Validate a weakly decreasing sequence of positive integers."""
    p = tuple(int(x) for x in parts)
    for i, x in enumerate(p):
        if x <= 0:
            raise ValueError(f"partition part {i + 1} is {x}, must be positive")
        if i and p[i - 1] < x:
            raise ValueError(f"partition parts {i} and {i + 1} increase: {p[i - 1]} < {x}")
    return p


def conjugate(p: Sequence[int]) -> Partition:
    """Transpose of the Ferrers diagram."""
    p = tuple(p)
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= j) for j in range(1, p[0] + 1))


def frobenius_pair(p: Sequence[int]) -> tuple[Partition, Partition]:
    """Split a partition along its diagonal, counting the diagonal twice.

    Returns (lam_1, lam_2 - 1, ...) and the same for the conjugate,
    keeping only the positive values.  Both halves have equal length.
    """
    p = tuple(p)
    q = conjugate(p)
    alpha = tuple(x - i for i, x in enumerate(p) if x - i > 0)
    beta = tuple(x - i for i, x in enumerate(q) if x - i > 0)
    return alpha, beta


def frobenius_inverse(alpha: Sequence[int], beta: Sequence[int]) -> Partition:
    """Rebuild the partition whose frobenius_pair is (alpha, beta)."""
    alpha = tuple(alpha)
    beta = tuple(beta)
    if len(alpha) != len(beta):
        raise ValueError("frobenius halves must have equal length")
    d = len(alpha)
    rows = [alpha[i] + i for i in range(d)]
    # row lengths below the diagonal block come from the conjugate half
    col = [beta[j] + j for j in range(d)]
    for i in range(d, max(col) if col else 0):
        extra = sum(1 for j in range(d) if col[j] >= i + 1)
        if extra == 0:
            break
        rows.append(extra)
    return check_partition(rows) if rows else ()


class BoxDims(NamedTuple):
    """An a x b x c box: at most a rows, b columns, entries at most c."""

    a: int
    b: int
    c: int

    def validate(self) -> "BoxDims":
        if self.a < 1 or self.b < 1:
            raise ValueError(f"box needs a, b >= 1, got {self}")
        if self.c < 0:
            raise ValueError(f"box needs c >= 0, got {self}")
        return self

    @property
    def cells(self) -> int:
        return self.a * self.b * self.c


class PlanePartition:
    """Rectangular array, weakly decreasing along rows and columns."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[int]] = ()):
        grid = [[int(x) for x in row] for row in rows]
        width = max((len(r) for r in grid), default=0)
        for r in grid:
            r.extend([0] * (width - len(r)))
        for i, row in enumerate(grid):
            for j, x in enumerate(row):
                if x < 0:
                    raise ValueError(f"row {i + 1}, column {j + 1}: negative entry {x}")
                if j and row[j - 1] < x:
                    raise ValueError(
                        f"row {i + 1}, column {j + 1}: entry {x} exceeds left neighbour {row[j - 1]}"
                    )
                if i and grid[i - 1][j] < x:
                    raise ValueError(
                        f"row {i + 1}, column {j + 1}: entry {x} exceeds entry above {grid[i - 1][j]}"
                    )
        while grid and not any(grid[-1]):
            grid.pop()
        while grid and not any(row[-1] for row in grid):
            for row in grid:
                row.pop()
        self.rows: tuple[tuple[int, ...], ...] = tuple(tuple(r) for r in grid)

    def __eq__(self, other) -> bool:
        return isinstance(other, PlanePartition) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"PlanePartition({[list(r) for r in self.rows]})"

    def __bool__(self) -> bool:
        return bool(self.rows)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def cell(self, i: int, j: int) -> int:
        """Entry at 0-based (i, j); 0 outside the stored grid."""
        if 0 <= i < self.nrows and 0 <= j < self.ncols:
            return self.rows[i][j]
        return 0

    def size(self) -> int:
        """Sum of all entries."""
        return sum(sum(r) for r in self.rows)

    def shape(self) -> Partition:
        """Row lengths counting nonzero entries only."""
        lengths = []
        for row in self.rows:
            n = len(row)
            while n and row[n - 1] == 0:
                n -= 1
            if n == 0:
                break
            lengths.append(n)
        return tuple(lengths)

    def i_trace(self, i: int) -> int:
        """Sum of the entries on the diagonal with column - row = i."""
        return sum(row[k + i] for k, row in enumerate(self.rows) if 0 <= k + i < len(row))

    def trace(self) -> int:
        return self.i_trace(0)

    def half_size(self) -> int:
        """Sum of the entries at or below the main diagonal (column <= row)."""
        return sum(x for i, row in enumerate(self.rows) for j, x in enumerate(row) if j <= i)

    def transpose(self) -> "PlanePartition":
        if not self.rows:
            return PlanePartition()
        return PlanePartition(
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        )

    def fits(self, box: BoxDims) -> bool:
        return (
            self.nrows <= box.a
            and self.ncols <= box.b
            and all(x <= box.c for row in self.rows for x in row)
        )

    def grid(self, box: BoxDims) -> list[list[int]]:
        """The a x b zero-padded grid for the given box."""
        if not self.fits(box):
            raise ValueError(f"plane partition does not fit in {box}")
        return [[self.cell(i, j) for j in range(box.b)] for i in range(box.a)]


class ReversePlanePartition:
    """Filling of a partition shape, weakly increasing along rows and columns."""

    __slots__ = ("shape", "entries")

    def __init__(self, shape: Sequence[int], entries: Sequence[Sequence[int]]):
        self.shape = check_partition(shape) if shape else ()
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        if tuple(len(r) for r in rows) != self.shape:
            raise ValueError("entry rows do not match the shape")
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                if x < 0:
                    raise ValueError(f"row {i + 1}, column {j + 1}: negative entry {x}")
                if j and row[j - 1] > x:
                    raise ValueError(f"row {i + 1}, column {j + 1}: entries decrease along row")
                if i and len(rows[i - 1]) > j and rows[i - 1][j] > x:
                    raise ValueError(f"row {i + 1}, column {j + 1}: entries decrease along column")
        self.entries = rows

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ReversePlanePartition)
            and self.shape == other.shape
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.shape, self.entries))

    def size(self) -> int:
        return sum(sum(r) for r in self.entries)

    def i_trace(self, i: int) -> int:
        return sum(row[k + i] for k, row in enumerate(self.entries) if 0 <= k + i < len(row))


def enumerate_box(box: BoxDims) -> Iterator[PlanePartition]:
    """All plane partitions in the box, row-major, larger entries first."""
    box = BoxDims(*box).validate()
    a, b, c = box
    grid = [[0] * b for _ in range(a)]

    def fill(pos: int) -> Iterator[PlanePartition]:
        if pos == a * b:
            yield PlanePartition(grid)
            return
        i, j = divmod(pos, b)
        hi = c
        if i:
            hi = min(hi, grid[i - 1][j])
        if j:
            hi = min(hi, grid[i][j - 1])
        for v in range(hi, -1, -1):
            grid[i][j] = v
            yield from fill(pos + 1)
        grid[i][j] = 0

    return fill(0)


def count_box(box: BoxDims) -> int:
    return sum(1 for _ in enumerate_box(box))


def enumerate_by_size(n: int) -> Iterator[PlanePartition]:
    """All plane partitions with 1 <= size <= n, each exactly once.

    Any such object fits in an n x n x n box, so the search runs there
    with a running-sum cutoff.
    """
    if n < 0:
        raise ValueError("size bound must be non-negative")
    if n == 0:
        return
    grid = [[0] * n for _ in range(n)]

    def fill(pos: int, total: int) -> Iterator[PlanePartition]:
        if pos == n * n:
            if total:
                yield PlanePartition(grid)
            return
        i, j = divmod(pos, n)
        hi = n - total
        if i:
            hi = min(hi, grid[i - 1][j])
        if j:
            hi = min(hi, grid[i][j - 1])
        for v in range(hi, -1, -1):
            grid[i][j] = v
            yield from fill(pos + 1, total + v)
        grid[i][j] = 0

    yield from fill(0, 0)


def format_plane_partition(pp: PlanePartition) -> str:
    """One row per line, space-separated entries."""
    return "\n".join(" ".join(str(x) for x in row) for row in pp.rows)


def parse_plane_partition(text: str) -> PlanePartition:
    """Parse the text format; a blank line terminates the array.

    Rejects arrays whose entries increase along a row or column, naming
    the offending cell.
    """
    rows: list[list[int]] = []
    for line in text.splitlines():
        if not line.strip():
            break
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError:
            raise ValueError(f"row {len(rows) + 1}: non-integer token in {line!r}") from None
    return PlanePartition(rows)


def parse_int_rows(text: str) -> list[list[int]]:
    """Rows of integers without plane-partition validation."""
    rows: list[list[int]] = []
    for line in text.splitlines():
        if not line.strip():
            break
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError:
            raise ValueError(f"row {len(rows) + 1}: non-integer token in {line!r}") from None
    return rows
