"""
The Coxeter torus of SL(3, q): norm-one elements of F_{q^3}^x acting on
F_{q^3} = F_q^3 by multiplication, and its intersections with parabolics.
"""

from __future__ import annotations

import itertools

from .fields import ExtensionField, field
from .groups import identity_matrix, is_scalar, mat_det, mat_mul

TORUS_Q = (2, 3, 4)


def coxeter_torus(q: int):
    F = field(q)
    E = ExtensionField(F, 3)
    T = []
    for a in E.elements():
        if not any(a):
            continue
        M = E.multiplication_matrix(a)
        flat = tuple(x for row in M for x in row)
        if mat_det(F, 3, flat) == 1:
            T.append(flat)
    return F, T


def _in_standard_parabolic(A, blocks):
    bi = []
    for b, size in enumerate(blocks):
        bi += [b] * size
    return all(A[i * 3 + j] == 0 for i in range(3) for j in range(3) if bi[i] > bi[j])


def _has_invariant_subspace(F, A):
    """Some line or plane of F_q^3 is stable under A (so A lies in a conjugate of a parabolic)."""
    vecs = [v for v in itertools.product(range(F.q), repeat=3) if any(v)]

    def apply(M, v):
        return tuple(_dot(F, M[i * 3 : i * 3 + 3], v) for i in range(3))

    # a line is stable iff it is spanned by an eigenvector
    for v in vecs:
        w = apply(A, v)
        if _parallel(F, v, w):
            return True
    # a plane is stable iff the transpose has a stable line
    At = tuple(A[j * 3 + i] for i in range(3) for j in range(3))
    for v in vecs:
        if _parallel(F, v, apply(At, v)):
            return True
    return False


def _dot(F, row, v):
    s = 0
    for a, b in zip(row, v):
        s = F.add[s][F.mul[a][b]]
    return s


def _parallel(F, v, w):
    if not any(w):
        return True
    i = next(k for k in range(3) if v[k])
    lam = F.mul[w[i]][F.inv[v[i]]]
    return all(F.mul[lam][v[k]] == w[k] for k in range(3))


def torus_parabolic_report(q: int) -> dict:
    if q not in TORUS_Q:
        raise ValueError("q must be one of %s" % (TORUS_Q,))
    F, T = coxeter_torus(q)
    expected = q * q + q + 1
    if len(T) != expected:
        raise AssertionError("|T| = %d, expected %d" % (len(T), expected))
    members = set(T)
    if any(mat_mul(F, 3, s, t) not in members for s in T for t in T):
        raise AssertionError("torus is not closed")
    center = [t for t in T if is_scalar(3, t)]
    shapes = {"P(1,2)": (1, 2), "P(2,1)": (2, 1), "B": (1, 1, 1)}
    meets = {name: [t for t in T if _in_standard_parabolic(t, b)] for name, b in shapes.items()}
    non_central_stable = [t for t in T if not is_scalar(3, t) and _has_invariant_subspace(F, t)]
    return {
        "q": q,
        "torus_order": len(T),
        "expected_order": expected,
        "center_order": len(center),
        "intersection_orders": {k: len(v) for k, v in meets.items()},
        "intersections_central": all(is_scalar(3, t) for v in meets.values() for t in v),
        "no_conjugate_parabolic_meets": not non_central_stable,
        "identity_in_torus": identity_matrix(3) in T,
        "finite_level_only": q % 2 == 0,
    }
