"""Exact rational LP feasibility: phase-one simplex with Bland's rule.

Bland's smallest-index rule for both the entering and the leaving variable
guarantees termination without any tolerance, so feasibility answers are
certificates rather than numerical guesses.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Number = int | Fraction


def _phase_one(A: list[list[Fraction]], b: list[Fraction]) -> list[Fraction] | None:
    """Solve ``A x = b, x >= 0`` for a feasible ``x``, or return None."""
    m = len(A)
    n = len(A[0]) if m else 0
    if m == 0:
        return [Fraction(0)] * n
    A = [row[:] for row in A]
    b = b[:]
    for i in range(m):
        if b[i] < 0:
            A[i] = [-x for x in A[i]]
            b[i] = -b[i]
    # columns 0..n-1 original, n..n+m-1 artificial
    T = [A[i] + [Fraction(int(i == j)) for j in range(m)] + [b[i]] for i in range(m)]
    basis = list(range(n, n + m))
    width = n + m
    # reduced costs of phase-one objective sum(artificials)
    cost = [-sum(T[i][j] for i in range(m)) for j in range(n)] + [Fraction(0)] * m
    obj = -sum(b)

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            # cannot happen in phase one: the objective is bounded below by 0
            raise RuntimeError("phase-one LP reported unbounded")
        prow = T[leave]
        piv = prow[enter]
        if piv != 1:
            prow = [x / piv for x in prow]
            T[leave] = prow
        for i in range(m):
            if i != leave:
                f = T[i][enter]
                if f:
                    T[i] = [x - f * y for x, y in zip(T[i], prow)]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, prow[:-1])]
        obj -= f * prow[-1]
        basis[leave] = enter

    if obj != 0:
        return None
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = T[i][-1]
    return x


def find_feasible(
    A_eq: Sequence[Sequence[Number]] = (),
    b_eq: Sequence[Number] = (),
    A_ub: Sequence[Sequence[Number]] = (),
    b_ub: Sequence[Number] = (),
    *,
    n_vars: int | None = None,
    free: Sequence[int] = (),
) -> list[Fraction] | None:
    """A point with ``A_eq x = b_eq``, ``A_ub x <= b_ub`` and ``x_j >= 0``
    for every ``j`` not listed in ``free``; None if the system is infeasible.
    """
    if n_vars is None:
        rows = list(A_eq) + list(A_ub)
        if not rows:
            raise ValueError("n_vars is required when there are no constraints")
        n_vars = len(rows[0])
    if len(A_eq) != len(b_eq) or len(A_ub) != len(b_ub):
        raise ValueError("constraint matrix and right-hand side lengths differ")
    free = sorted(set(free))
    free_pos = {j: n_vars + t for t, j in enumerate(free)}
    n_split = n_vars + len(free)
    n_slack = len(A_ub)
    ncols = n_split + n_slack

    def expand(row: Sequence[Number]) -> list[Fraction]:
        if len(row) != n_vars:
            raise ValueError("constraint row has wrong length")
        out = [Fraction(x) for x in row] + [Fraction(0)] * (ncols - n_vars)
        for j, pos in free_pos.items():
            out[pos] = -out[j]
        return out

    A: list[list[Fraction]] = []
    b: list[Fraction] = []
    for row, rhs in zip(A_eq, b_eq):
        A.append(expand(row))
        b.append(Fraction(rhs))
    for t, (row, rhs) in enumerate(zip(A_ub, b_ub)):
        r = expand(row)
        r[n_split + t] = Fraction(1)
        A.append(r)
        b.append(Fraction(rhs))
    if not A:
        return [Fraction(0)] * n_vars
    sol = _phase_one(A, b)
    if sol is None:
        return None
    x = sol[:n_vars]
    for j, pos in free_pos.items():
        x[j] -= sol[pos]
    return x
