"""
Double cosets at level two in SL(3, Z/p^2).

The subgroup H = G_{abc} is given by generators.  For abc = (1, 1, 2) it is
the stabiliser of the submodule M = span(e1, p e2) of (Z/p^2)^3, so G/H is
the G-orbit of M, labelled by the set of vectors in each image module; the
ambient group is never enumerated.
"""

from __future__ import annotations

import math


class IndexMismatch(AssertionError):
    pass


def _mul(n, m, A, B):
    if n == 3:
        a, b, c, d, e, f, g, h, i = A
        j, k, l, o, r, s, t, u, v = B
        return (
            (a * j + b * o + c * t) % m, (a * k + b * r + c * u) % m, (a * l + b * s + c * v) % m,
            (d * j + e * o + f * t) % m, (d * k + e * r + f * u) % m, (d * l + e * s + f * v) % m,
            (g * j + h * o + i * t) % m, (g * k + h * r + i * u) % m, (g * l + h * s + i * v) % m,
        )
    return tuple(sum(A[i * n + k] * B[k * n + j] for k in range(n)) % m for i in range(n) for j in range(n))


def _elem(n, i, j, t, m):
    M = [int(a == b) for a in range(n) for b in range(n)]
    M[(i - 1) * n + (j - 1)] = t % m
    return tuple(M)


def _diag(entries, m):
    n = len(entries)
    M = [0] * (n * n)
    for k, t in enumerate(entries):
        M[k * n + k] = t % m
    return tuple(M)


class ResidueRingMatrixGroup:
    """SL(n, Z/p^2) through its elementary generators."""

    def __init__(self, n: int, p: int):
        if p % 2 == 0:
            raise ValueError("p must be odd")
        self.n = n
        self.p = p
        self.modulus = p * p
        self.generators = [
            _elem(n, i, j, 1, self.modulus) for i in range(1, n + 1) for j in range(1, n + 1) if i != j
        ]

    def mul(self, A, B):
        return _mul(self.n, self.modulus, A, B)

    def identity(self):
        return _diag([1] * self.n, self.modulus)

    def order(self):
        n, p = self.n, self.p
        sl_p = p ** (n * (n - 1) // 2) * math.prod(p**i - 1 for i in range(2, n + 1))
        return sl_p * p ** (n * n - 1)

    def reduce(self, A):
        return tuple(a % self.p for a in A)

    def reduction_is_surjective(self) -> bool:
        """The reduced generators generate SL(n, p)."""
        n, p = self.n, self.p
        gens = [self.reduce(g) for g in self.generators]
        e = tuple(int(i == j) for i in range(n) for j in range(n))
        seen = {e}
        frontier = [e]
        while frontier:
            nxt = []
            for g in frontier:
                for s in gens:
                    h = _mul(n, p, g, s)
                    if h not in seen:
                        seen.add(h)
                        nxt.append(h)
            frontier = nxt
        sl_p = p ** (n * (n - 1) // 2) * math.prod(p**i - 1 for i in range(2, n + 1))
        return len(seen) == sl_p


def g_abc_generators(p: int, abc=(1, 1, 2)):
    """Upper elementaries, e21(p^a), e32(p^b), e31(p^c) and the diagonal units of determinant one."""
    a, b, c = abc
    m = p * p
    gens = [_elem(3, i, j, 1, m) for (i, j) in ((1, 2), (1, 3), (2, 3))]
    for (i, j), k in (((2, 1), a), ((3, 2), b), ((3, 1), c)):
        t = p**k % m
        if t:
            gens.append(_elem(3, i, j, t, m))
    units = [u for u in range(1, m) if u % p]
    gen_unit = next(u for u in units if len({pow(u, k, m) for k in range(len(units))}) == len(units))
    inv = pow(gen_unit, -1, m)
    gens.append(_diag((gen_unit, inv, 1), m))
    gens.append(_diag((1, gen_unit, inv), m))
    return gens


def span_module(vectors, m):
    """The Z-submodule of (Z/m)^n spanned by ``vectors``, as a frozenset."""
    n = len(vectors[0])
    zero = (0,) * n
    out = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for v in frontier:
            for w in vectors:
                u = tuple((x + y) % m for x, y in zip(v, w))
                if u not in out:
                    out.add(u)
                    nxt.append(u)
        frontier = nxt
    return frozenset(out)


def act_on_module(g, M, n, m):
    return frozenset(tuple(sum(g[i * n + k] * v[k] for k in range(n)) % m for i in range(n)) for v in M)


def orbit(point, gens, act):
    seen = {point}
    frontier = [point]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = act(s, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def count_orbits(points, gens, act):
    remaining = set(points)
    count = 0
    sizes = []
    while remaining:
        x = next(iter(remaining))
        o = orbit(x, gens, act)
        if not o <= remaining:
            raise AssertionError("generators do not preserve the point set")
        remaining -= o
        count += 1
        sizes.append(len(o))
    return count, sorted(sizes)


def base_module(p):
    m = p * p
    return span_module([(1, 0, 0), (0, p, 0)], m)


def enumerate_subgroup_order(gens, n, m, limit=10**6):
    """|<gens>| by closure, with matrices packed into integers."""
    def pack(A):
        v = 0
        for x in A:
            v = v * m + x
        return v

    e = tuple(int(i == j) for i in range(n) for j in range(n))
    seen = {pack(e)}
    frontier = [e]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = _mul(n, m, g, s)
                k = pack(h)
                if k not in seen:
                    seen.add(k)
                    nxt.append(h)
                    if len(seen) > limit:
                        raise ValueError("subgroup exceeds %d elements" % limit)
        frontier = nxt
    return len(seen)


def sl3_level2_double_cosets(p: int = 3, verify_subgroup_order: bool = False) -> dict:
    if p % 2 == 0 or (p - 1) % 3 == 0:
        raise ValueError("p must be odd with 3 not dividing p - 1")
    m = p * p
    G = ResidueRingMatrixGroup(3, p)
    H_gens = g_abc_generators(p, (1, 1, 2))
    M = base_module(p)

    def act(g, X):
        return act_on_module(g, X, 3, m)

    for h in H_gens:
        if act(h, M) != M:
            raise IndexMismatch("a generator of H moves the base module")
    cosets = orbit(M, G.generators, act)
    expected = p * (p + 1) * (p * p + p + 1)
    if len(cosets) != expected:
        raise IndexMismatch("index %d, expected %d" % (len(cosets), expected))
    n_double, sizes = count_orbits(cosets, H_gens, act)
    report = {
        "p": p,
        "index": len(cosets),
        "expected_index": expected,
        "double_cosets": n_double,
        "orbit_sizes": sizes,
        "reduction_surjective": G.reduction_is_surjective(),
    }
    if verify_subgroup_order:
        h = enumerate_subgroup_order(H_gens, 3, m)
        report["subgroup_order"] = h
        report["stabiliser_equals_subgroup"] = h * len(cosets) == G.order()
    return report


def degenerate_double_cosets(p: int = 3) -> int:
    """G_{000} = G acting on the same coset space: a single double coset."""
    m = p * p
    G = ResidueRingMatrixGroup(3, p)

    def act(g, X):
        return act_on_module(g, X, 3, m)

    cosets = orbit(base_module(p), G.generators, act)
    return count_orbits(cosets, g_abc_generators(p, (0, 0, 0)), act)[0]
