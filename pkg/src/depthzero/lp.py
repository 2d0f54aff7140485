"""
Exact rational linear programming in small dimension.

``maximize`` is a dense-tableau simplex with Bland's rule over Fractions.
``vertex_maximize`` enumerates basic feasible points directly and is kept
as an independent check on the simplex.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .linalg import solve


class Unbounded(ArithmeticError):
    pass


class Infeasible(ArithmeticError):
    pass


def maximize(c, A, b):
    """max c.u subject to A u <= b with u free.  Requires b >= 0 so u = 0 is feasible.

    Returns (value, argmax).
    """
    n = len(c)
    m = len(A)
    if any(Fraction(bi) < 0 for bi in b):
        raise Infeasible("origin must be feasible (b >= 0)")
    # variables: u+ (n), u- (n), slacks (m)
    nv = 2 * n + m
    T = []
    for i in range(m):
        row = [Fraction(a) for a in A[i]] + [-Fraction(a) for a in A[i]]
        row += [Fraction(int(i == k)) for k in range(m)]
        row.append(Fraction(b[i]))
        T.append(row)
    obj = [-Fraction(ci) for ci in c] + [Fraction(ci) for ci in c] + [Fraction(0)] * m + [Fraction(0)]
    basis = [2 * n + i for i in range(m)]

    while True:
        enter = next((j for j in range(nv) if obj[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            if T[i][enter] > 0:
                ratio = T[i][-1] / T[i][enter]
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            raise Unbounded("objective unbounded")
        r = best[1]
        piv = T[r][enter]
        T[r] = [v / piv for v in T[r]]
        for i in range(m):
            if i != r and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [a - f * p for a, p in zip(T[i], T[r])]
        f = obj[enter]
        obj = [a - f * p for a, p in zip(obj, T[r])]
        basis[r] = enter

    v = [Fraction(0)] * nv
    for i, j in enumerate(basis):
        v[j] = T[i][-1]
    u = tuple(v[j] - v[n + j] for j in range(n))
    return obj[-1], u


def vertex_maximize(c, A, b):
    """Same problem by brute force over all n-subsets of tight constraints."""
    n = len(c)
    best = None
    for rows in itertools.combinations(range(len(A)), n):
        u = solve([A[i] for i in rows], [b[i] for i in rows])
        if u is None:
            continue
        if all(sum(a * x for a, x in zip(A[i], u)) <= b[i] for i in range(len(A))):
            val = sum(ci * x for ci, x in zip(c, u))
            if best is None or val > best:
                best = val
    if best is None:
        raise Infeasible("no vertex found")
    return best
