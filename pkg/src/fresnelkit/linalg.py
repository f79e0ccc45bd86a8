"""Small dense exact-rational matrix routines.

Matrices are lists of rows.  Entries are ``int`` or ``Fraction``; every
routine is exact.  Rank and determinant clear denominators row by row and
run Bareiss' fraction-free elimination on integers.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .errors import NoInverse


def zeros(n: int, m: int | None = None) -> list[list]:
    return [[0] * (n if m is None else m) for _ in range(n)]


def identity(n: int) -> list[list]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(a):
    return [list(r) for r in zip(*a)]


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col) if x and y) for col in bt] for row in a]


def matvec(a, v):
    return [sum(x * y for x, y in zip(row, v) if x and y) for row in a]


def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def _integer_rows(a):
    rows = []
    for row in a:
        den = lcm(*(Fraction(x).denominator for x in row)) if row else 1
        rows.append([int(Fraction(x) * den) for x in row])
    return rows


def _bareiss(rows):
    """Fraction-free forward elimination in place; returns (rank, sign, last pivot)."""
    n, m = len(rows), len(rows[0]) if rows else 0
    prev, r, sign = 1, 0, 1
    for c in range(m):
        piv = next((i for i in range(r, n) if rows[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            sign = -sign
        p = rows[r][c]
        for i in range(r + 1, n):
            f = rows[i][c]
            row_i, row_r = rows[i], rows[r]
            for j in range(c, m):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
        prev = p
        r += 1
        if r == n:
            break
    return r, sign, prev


def rank(a) -> int:
    if not a or not a[0]:
        return 0
    return _bareiss(_integer_rows(a))[0]


def det(a):
    n = len(a)
    if n == 0:
        return 1
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    scale = Fraction(1)
    for row in a:
        scale *= lcm(*(Fraction(x).denominator for x in row))
    rows = _integer_rows(a)
    r, sign, last = _bareiss(rows)
    if r < n:
        return 0
    return _norm(Fraction(sign * last) / scale)


def rref(a):
    """Reduced row echelon form over the rationals; returns (rows, pivot columns)."""
    rows = [[Fraction(x) for x in row] for row in a]
    n, m = len(rows), len(rows[0]) if rows else 0
    pivots, r = [], 0
    for c in range(m):
        piv = next((i for i in range(r, n) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        rows[r] = [x / p for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    return [[_norm(x) for x in row] for row in rows], pivots


def nullspace(a) -> list[list]:
    """Basis of the right null space, one generator per free column, in column order."""
    m = len(a[0])
    rows, pivots = rref(a)
    basis = []
    for f in (c for c in range(m) if c not in pivots):
        v = [0] * m
        v[f] = 1
        for i, p in enumerate(pivots):
            v[p] = _norm(-rows[i][f])
        basis.append(v)
    return basis


def inverse(a):
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("inverse of a non-square matrix")
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(a)]
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise NoInverse(f"singular {n}x{n} matrix", rank=rank(a))
    return [row[n:] for row in rows]


def solve(a, b):
    """One exact solution of ``a x = b`` (free variables set to 0), or None."""
    m = len(a[0])
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    rows, pivots = rref(aug)
    if m in pivots:
        return None
    x = [0] * m
    for i, p in enumerate(pivots):
        x[p] = rows[i][m]
    return x
