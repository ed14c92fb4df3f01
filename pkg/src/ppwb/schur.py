"""Semistandard tableaux, Schur polynomials, and their specializations.

Multivariate polynomials are dicts mapping exponent tuples (one slot
per variable) to integer coefficients, with zero coefficients removed.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Iterator, Sequence

from .core import BoxDims, Partition, PlanePartition, check_partition
from .qseries import NonPolynomialQuotient, QPolynomial
from . import qseries

Tableau = tuple[tuple[int, ...], ...]
MultivariatePolynomial = dict[tuple[int, ...], int]


def is_ssyt(t: Sequence[Sequence[int]]) -> bool:
    """Rows weakly increasing, columns strictly increasing, entries >= 1."""
    for i, row in enumerate(t):
        if i and len(row) > len(t[i - 1]):
            return False
        for j, x in enumerate(row):
            if x < 1:
                return False
            if j and row[j - 1] > x:
                return False
            if i and t[i - 1][j] >= x:
                return False
    return True


def enumerate_ssyt(shape: Sequence[int], n: int) -> Iterator[Tableau]:
    """All semistandard tableaux of the shape with entries in 1..n."""
    shape = check_partition(shape) if shape else ()
    if not shape:
        yield ()
        return
    if n < 1:
        return
    cells = [(i, j) for i, L in enumerate(shape) for j in range(L)]
    grid = [[0] * L for L in shape]

    def fill(pos: int) -> Iterator[Tableau]:
        if pos == len(cells):
            yield tuple(tuple(r) for r in grid)
            return
        i, j = cells[pos]
        lo = 1
        if j:
            lo = max(lo, grid[i][j - 1])
        if i:
            lo = max(lo, grid[i - 1][j] + 1)
        for v in range(lo, n + 1):
            grid[i][j] = v
            yield from fill(pos + 1)
        grid[i][j] = 0

    yield from fill(0)


def schur_sum(shape: Sequence[int], n: int) -> MultivariatePolynomial:
    """Schur polynomial in n variables as the tableau content sum."""
    out: MultivariatePolynomial = {}
    for t in enumerate_ssyt(shape, n):
        exp = [0] * n
        for row in t:
            for x in row:
                exp[x - 1] += 1
        key = tuple(exp)
        out[key] = out.get(key, 0) + 1
    return out


def mv_mul(p: MultivariatePolynomial, q: MultivariatePolynomial) -> MultivariatePolynomial:
    out: MultivariatePolynomial = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            key = tuple(a + b for a, b in zip(e1, e2))
            v = out.get(key, 0) + c1 * c2
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return out


def mv_add(p: MultivariatePolynomial, q: MultivariatePolynomial) -> MultivariatePolynomial:
    out = dict(p)
    for e, c in q.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def mv_substitute_q_powers(p: MultivariatePolynomial) -> QPolynomial:
    """Set variable i (1-based) to q^i."""
    coeffs: dict[int, int] = {}
    for exp, c in p.items():
        d = sum((i + 1) * e for i, e in enumerate(exp))
        coeffs[d] = coeffs.get(d, 0) + c
    out = [0] * (max(coeffs, default=0) + 1)
    for d, c in coeffs.items():
        out[d] = c
    return QPolynomial(out)


def _alternant_det(exponents: Sequence[int], n: int) -> QPolynomial:
    """det over 1<=i,j<=n of q^(i * exponents[j]), by permutation sum."""
    coeffs: dict[int, int] = {}
    for sigma in permutations(range(n)):
        sign = _perm_sign(sigma)
        d = sum((i + 1) * exponents[sigma[i]] for i in range(n))
        coeffs[d] = coeffs.get(d, 0) + sign
    out = [0] * (max(coeffs, default=0) + 1)
    for d, c in coeffs.items():
        out[d] = c
    return QPolynomial(out)


def _perm_sign(sigma: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(sigma)
    for i in range(len(sigma)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = sigma[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def schur_principal_bialternant(shape: Sequence[int], n: int) -> QPolynomial:
    """Schur polynomial at x_i = q^i as a ratio of two alternant determinants."""
    shape = check_partition(shape) if shape else ()
    if len(shape) > n:
        return QPolynomial()
    lam = list(shape) + [0] * (n - len(shape))
    num = _alternant_det([lam[j] + n - 1 - j for j in range(n)], n)
    den = _alternant_det([n - 1 - j for j in range(n)], n)
    try:
        return num.divexact(den)
    except NonPolynomialQuotient as exc:  # the ratio always divides exactly
        raise NonPolynomialQuotient(f"bialternant ratio failed for {shape}, n={n}") from exc


def ssyt_count(shape: Sequence[int], n: int) -> int:
    """Number of semistandard tableaux with entries in 1..n, as the exact
    rational product ((lam_i - lam_j + j - i) / (j - i) over i < j)."""
    shape = check_partition(shape) if shape else ()
    if len(shape) > n:
        return 0
    lam = list(shape) + [0] * (n - len(shape))
    total = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            total *= Fraction(lam[i] - lam[j] + j - i, j - i)
    assert total.denominator == 1
    return total.numerator


def pp_box_to_ssyt(pp: PlanePartition, box: BoxDims) -> Tableau:
    """Rotate the padded grid by 180 degrees and add i to row i.

    The result has rectangular shape (b repeated a times) with entries
    in 1..a+c.
    """
    box = BoxDims(*box).validate()
    a, b, _ = box
    grid = pp.grid(box)
    return tuple(
        tuple(grid[a - 1 - i][b - 1 - j] + i + 1 for j in range(b)) for i in range(a)
    )


def ssyt_to_pp_box(t: Sequence[Sequence[int]], box: BoxDims) -> PlanePartition:
    """Inverse of pp_box_to_ssyt; rejects wrong shapes or entry ranges."""
    box = BoxDims(*box).validate()
    a, b, c = box
    rows = tuple(tuple(int(x) for x in row) for row in t)
    if len(rows) != a or any(len(r) != b for r in rows):
        raise ValueError(f"tableau must have {a} rows of length {b}")
    if not is_ssyt(rows):
        raise ValueError("not a semistandard tableau")
    grid = [[0] * b for _ in range(a)]
    for i in range(a):
        for j in range(b):
            v = rows[i][j] - (i + 1)
            if not 0 <= v <= c:
                raise ValueError(f"row {i + 1}, column {j + 1}: entry {rows[i][j]} out of range")
            grid[a - 1 - i][b - 1 - j] = v
    return PlanePartition(grid)


def verify_mmschur(box: BoxDims) -> bool:
    """Check that the rectangular Schur polynomial at x_i = q^i equals the
    box generating function shifted by q^(b * a(a+1)/2)."""
    box = BoxDims(*box).validate()
    a, b, c = box
    shape = (b,) * a
    lhs = schur_principal_bialternant(shape, a + c)
    shift = b * (a * (a + 1) // 2)
    rhs = qseries.box_gf(box) * QPolynomial.monomial(shift)
    return lhs == rhs


def sc_shapes(a1: int, b1: int) -> Iterator[Partition]:
    """Shapes (b1 + d_1, ..., b1 + d_a1, b1 - d_a1, ..., b1 - d_1) over all
    weakly decreasing 0 <= d_i <= b1, zero parts trimmed."""
    if a1 < 1 or b1 < 1:
        raise ValueError("need positive arguments")

    def deltas(pos: int, hi: int, cur: list[int]) -> Iterator[tuple[int, ...]]:
        if pos == a1:
            yield tuple(cur)
            return
        for d in range(hi, -1, -1):
            cur.append(d)
            yield from deltas(pos + 1, d, cur)
            cur.pop()

    for ds in deltas(0, b1, []):
        parts = [b1 + d for d in ds] + [b1 - d for d in reversed(ds)]
        yield tuple(p for p in parts if p > 0)


def verify_s2(a1: int, b1: int, m: int) -> bool:
    """Check sum of Schur polynomials over the paired shapes equals the
    square of the rectangular one, in m variables."""
    total: MultivariatePolynomial = {}
    for lam in sc_shapes(a1, b1):
        total = mv_add(total, schur_sum(lam, m))
    rect = schur_sum((b1,) * a1, m)
    return total == mv_mul(rect, rect)


def verify_sc_sum(a1: int, b1: int, c1: int) -> bool:
    """Check the tableau-count sum against the self-complementary count,
    both from the closed formula and from constrained enumeration."""
    from .symmetry import enumerate_class

    m = a1 + c1
    total = sum(ssyt_count(lam, m) for lam in sc_shapes(a1, b1))
    box = BoxDims(2 * a1, 2 * b1, 2 * c1)
    formula = qseries.self_complementary_count(*box)
    brute = sum(1 for _ in enumerate_class(5, box))
    return total == formula == brute
