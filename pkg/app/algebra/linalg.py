# app/algebra/linalg.py

"""
Exact integer linear algebra: ranks over Q and F_p, Hermite normal form,
primitive kernel vectors.
"""

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Sequence

from sympy import Matrix

Row = tuple[int, ...]


def rank_rational(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for i in range(rank + 1, len(m)):
            a = m[i][col]
            row_i, row_r = m[i], m[rank]
            m[i] = [(p * row_i[j] - a * row_r[j]) // prev for j in range(ncols)]
        prev = p
        rank += 1
        if rank == len(m):
            break
    return rank


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    m = [[a % p for a in r] for r in rows]
    m = [r for r in m if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col], -1, p)
        m[rank] = [(a * inv) % p for a in m[rank]]
        for i in range(rank + 1, len(m)):
            a = m[i][col]
            if a:
                m[i] = [(x - a * y) % p for x, y in zip(m[i], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def rank_over(rows: Sequence[Sequence[int]], characteristic: int) -> int:
    if characteristic == 0:
        return rank_rational(rows)
    return rank_mod_p(rows, characteristic)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    # x * a + y * b == g
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def hermite_normal_form(rows: Sequence[Sequence[int]], ncols: int) -> list[Row]:
    """
    Row-style HNF of the integer row span: echelon shape, positive pivots,
    entries above each pivot reduced into [0, pivot).
    """
    work = [list(r) for r in rows if any(r)]
    basis: list[list[int]] = []
    pivots: list[int] = []
    for col in range(ncols):
        live = [r for r in work if r[col]]
        if not live:
            continue
        rest = [r for r in work if not r[col]]
        head = live[0]
        for other in live[1:]:
            a, b = head[col], other[col]
            x, y, g = _xgcd(a, b)
            new_head = [x * u + y * v for u, v in zip(head, other)]
            new_other = [(a // g) * v - (b // g) * u for u, v in zip(head, other)]
            head = new_head
            if any(new_other):
                rest.append(new_other)
        if head[col] < 0:
            head = [-u for u in head]
        basis.append(head)
        pivots.append(col)
        work = rest

    for i, (row, col) in enumerate(zip(basis, pivots)):
        p = row[col]
        for k in range(i):
            q = basis[k][col] // p
            if q:
                basis[k] = [u - q * v for u, v in zip(basis[k], row)]
    return [tuple(r) for r in basis]


def _to_fraction(x) -> Fraction:
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    # sympy Rational / Integer
    return Fraction(int(x.p), int(x.q))


def primitive(vec: Sequence) -> Row:
    """Scale a rational vector to the primitive integer vector on the same ray."""
    fracs = [_to_fraction(x) for x in vec]
    den = reduce(lcm, (f.denominator for f in fracs), 1)
    ints = [int(f * den) for f in fracs]
    g = reduce(gcd, ints, 0)
    if g == 0:
        return tuple(ints)
    return tuple(a // g for a in ints)


def kernel_vectors(rows: Sequence[Sequence[int]], ncols: int) -> list[Row]:
    """Primitive integer vectors spanning the rational nullspace (right kernel)."""
    if not rows:
        return [tuple(1 if i == j else 0 for i in range(ncols)) for j in range(ncols)]
    space = Matrix([list(r) for r in rows]).nullspace()
    return [primitive(list(v)) for v in space]


def inverse_rational(rows: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    inv = Matrix([list(r) for r in rows]).inv()
    return [[_to_fraction(inv[i, j]) for j in range(inv.cols)] for i in range(inv.rows)]


def determinant(rows: Sequence[Sequence[int]]) -> int:
    return int(Matrix([list(r) for r in rows]).det())
