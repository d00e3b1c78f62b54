"""Exact rank and kernel computations over the rationals.

Entries may be ints or :class:`fractions.Fraction`.  Integer inputs are
reduced fraction-free (row operations followed by division by the row gcd), so
small 0/1 matrices never leave the integers.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Number = int | Fraction


def _integer_rows(rows: Sequence[Sequence[Number]]) -> list[list[int]]:
    out = []
    for r in rows:
        den = 1
        for x in r:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        out.append([int(x * den) for x in r])
    return out


def _normalize(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        g = gcd(g, x)
        if g == 1:
            return row
    return [x // g for x in row] if g > 1 else row


def echelon(rows: Sequence[Sequence[Number]]) -> tuple[list[list[int]], list[int]]:
    """Reduced echelon form (scaled to integers) and the pivot columns."""
    m = _integer_rows(rows)
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pr = m[r]
        a = pr[c]
        for i in range(len(m)):
            if i != r and m[i][c]:
                b = m[i][c]
                m[i] = _normalize([a * x - b * y for x, y in zip(m[i], pr)])
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence[Number]]) -> int:
    return len(echelon(rows)[1])


def affine_rank(points: Sequence[Sequence[Number]]) -> int:
    """Dimension of the affine hull of a nonempty point list."""
    if not points:
        raise ValueError("no points")
    p0 = points[0]
    return rank([[a - b for a, b in zip(p, p0)] for p in points[1:]])


def kernel_vector(rows: Sequence[Sequence[Number]]) -> list[int] | None:
    """Integer generator of the right kernel when it is one-dimensional.

    Returns ``None`` if the kernel has any other dimension.
    """
    if not rows:
        return None
    ncols = len(rows[0])
    red, pivots = echelon(rows)
    free = [c for c in range(ncols) if c not in set(pivots)]
    if len(free) != 1:
        return None
    f = free[0]
    # each pivot row reads a_i * x_{p_i} + row[f] * x_f = 0
    den = 1
    for row, p in zip(red, pivots):
        den = lcm(den, row[p])
    vec = [0] * ncols
    vec[f] = den
    for row, p in zip(red, pivots):
        vec[p] = -row[f] * den // row[p]
    return _normalize(vec)
