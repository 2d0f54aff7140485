"""
Concrete finite groups: SL(n, q) for n = 2, 3 and its standard subgroups,
enumerated as flat tuples of field elements, plus conjugacy classes.
"""

from __future__ import annotations

import math
from functools import reduce

from .fields import GF, field


class GuardExceeded(ValueError):
    pass


class FiniteGroup:
    """An explicitly enumerated group closed under ``mul``."""

    def __init__(self, elements, mul, identity, inv=None, generators=(), name="G"):
        self.elements = list(elements)
        self.index = {g: i for i, g in enumerate(self.elements)}
        self.mul = mul
        self.identity = identity
        self._inv = inv
        self.generators = list(generators)
        self.name = name
        self._classes = None

    @classmethod
    def generate(cls, generators, mul, identity, inv=None, name="G", limit=10**6):
        seen = {identity}
        elements = [identity]
        frontier = [identity]
        while frontier:
            nxt = []
            for g in frontier:
                for s in generators:
                    h = mul(g, s)
                    if h not in seen:
                        seen.add(h)
                        elements.append(h)
                        nxt.append(h)
                        if len(elements) > limit:
                            raise GuardExceeded("closure exceeds %d elements" % limit)
            frontier = nxt
        return cls(elements, mul, identity, inv, generators, name)

    @property
    def order(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, g):
        return g in self.index

    def __iter__(self):
        return iter(self.elements)

    def inv(self, g):
        if self._inv is not None:
            return self._inv(g)
        e = self.identity
        h = g
        prev = e
        while h != e:
            prev = h
            h = self.mul(h, g)
        return prev

    def element_order(self, g):
        n, h = 1, g
        while h != self.identity:
            h = self.mul(h, g)
            n += 1
        return n

    def power(self, g, k):
        r, b = self.identity, g
        while k:
            if k & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            k >>= 1
        return r

    def conj(self, g, x):
        return self.mul(self.mul(g, x), self.inv(g))

    def check_closure(self):
        gens = self.generators or self.elements
        return all(self.mul(g, s) in self.index for g in self.elements for s in gens)

    @property
    def classes(self) -> "ConjugacyClasses":
        if self._classes is None:
            self._classes = ConjugacyClasses(self)
        return self._classes


def greedy_generators(elements, mul, identity):
    """A small generating set: keep any element outside the span of the previous ones."""
    gens = []
    span = {identity}
    for g in elements:
        if g in span:
            continue
        gens.append(g)
        frontier = list(span)
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = mul(x, s)
                    if y not in span:
                        span.add(y)
                        nxt.append(y)
            frontier = nxt
    if len(span) != len(set(elements)):
        raise AssertionError("elements do not form a group")
    return gens


class ConjugacyClasses:
    def __init__(self, G: FiniteGroup):
        self.group = G
        conj_by = G.generators if G.generators else G.elements
        pairs = [(s, G.inv(s)) for s in conj_by]
        class_of = {}
        reps, members = [], []
        for g in G.elements:
            if g in class_of:
                continue
            k = len(reps)
            orbit = [g]
            class_of[g] = k
            i = 0
            while i < len(orbit):
                x = orbit[i]
                i += 1
                for s, si in pairs:
                    y = G.mul(G.mul(s, x), si)
                    if y not in class_of:
                        class_of[y] = k
                        orbit.append(y)
            reps.append(g)
            members.append(orbit)
        # identity first
        self.class_of = class_of
        self.reps = reps
        self.members = members
        self.sizes = [len(m) for m in members]
        self.orders = [G.element_order(r) for r in reps]
        self.inverse = [class_of[G.inv(r)] for r in reps]
        self._power = {}
        if sum(self.sizes) != G.order or any(G.order % s for s in self.sizes):
            raise AssertionError("class sizes inconsistent")

    def __len__(self):
        return len(self.reps)

    def power_class(self, i, k):
        key = (i, k % self.orders[i])
        if key not in self._power:
            self._power[key] = self.class_of[self.group.power(self.reps[i], key[1])]
        return self._power[key]

    @property
    def exponent(self):
        return reduce(lambda a, b: a * b // math.gcd(a, b), self.orders, 1)


# ---------------------------------------------------------------------------
# matrices over GF(q), stored row-major as flat tuples


def mat_mul(F: GF, n, A, B):
    add, mul = F.add, F.mul
    out = []
    for i in range(n):
        row = A[i * n : (i + 1) * n]
        for j in range(n):
            s = 0
            for k in range(n):
                a = row[k]
                if a:
                    b = B[k * n + j]
                    if b:
                        s = add[s][mul[a][b]]
            out.append(s)
    return tuple(out)


def mat_det(F: GF, n, A):
    add, mul, sub = F.add, F.mul, F.sub
    if n == 1:
        return A[0]
    if n == 2:
        return sub[mul[A[0]][A[3]]][mul[A[1]][A[2]]]
    if n == 3:
        a, b, c, d, e, f, g, h, i = A
        t1 = mul[a][sub[mul[e][i]][mul[f][h]]]
        t2 = mul[b][sub[mul[d][i]][mul[f][g]]]
        t3 = mul[c][sub[mul[d][h]][mul[e][g]]]
        return add[sub[t1][t2]][t3]
    raise ValueError("n must be at most 3")


def mat_inv_sl(F: GF, n, A):
    """Inverse of a determinant-one matrix via the adjugate."""
    mul, sub, neg = F.mul, F.sub, F.neg
    if n == 2:
        a, b, c, d = A
        return (d, neg[b], neg[c], a)
    if n == 3:
        a, b, c, d, e, f, g, h, i = A

        def m(x, y, z, w):
            return sub[mul[x][y]][mul[z][w]]

        return (
            m(e, i, f, h), m(c, h, b, i), m(b, f, c, e),
            m(f, g, d, i), m(a, i, c, g), m(c, d, a, f),
            m(d, h, e, g), m(b, g, a, h), m(a, e, b, d),
        )
    raise ValueError("n must be 2 or 3")


def identity_matrix(n):
    return tuple(int(i == j) for i in range(n) for j in range(n))


def elementary(n, i, j, t):
    """1 + t E_{ij}, indices from 1."""
    M = list(identity_matrix(n))
    M[(i - 1) * n + (j - 1)] = t
    return tuple(M)


def diagonal(n, entries):
    M = [0] * (n * n)
    for k, t in enumerate(entries):
        M[k * n + k] = t
    return tuple(M)


def is_scalar(n, A):
    return all(A[i * n + j] == 0 for i in range(n) for j in range(n) if i != j) and len({A[i * n + i] for i in range(n)}) == 1


SL_GUARD = {2: 11, 3: 4}


class MatrixGroup(FiniteGroup):
    def __init__(self, elements, n, F, generators, name):
        mul = lambda A, B: mat_mul(F, n, A, B)  # noqa: E731
        inv = lambda A: mat_inv_sl(F, n, A)  # noqa: E731
        super().__init__(elements, mul, identity_matrix(n), inv, generators, name)
        self.n = n
        self.F = F
        self.q = F.q

    @classmethod
    def from_generators(cls, n, F, generators, name, limit=10**6):
        G = FiniteGroup.generate(generators, lambda A, B: mat_mul(F, n, A, B), identity_matrix(n), limit=limit)
        return cls(G.elements, n, F, generators, name)

    def subgroup(self, predicate, name, generators=None):
        """The elements satisfying ``predicate``; closure is checked."""
        els = [g for g in self.elements if predicate(g)]
        if generators is None:
            generators = greedy_generators(els, self.mul, self.identity)
        H = MatrixGroup(els, self.n, self.F, generators, name)
        if not H.check_closure():
            raise AssertionError("%s is not closed" % name)
        return H

    def center(self):
        return [g for g in self.elements if is_scalar(self.n, g)]


def sl_order(n, q):
    return q ** (n * (n - 1) // 2) * math.prod(q**i - 1 for i in range(2, n + 1))


def build_sl(n: int, q: int, enable_big_q: bool = False) -> MatrixGroup:
    if n not in SL_GUARD:
        raise GuardExceeded("only n = 2 or 3 are supported")
    limit = SL_GUARD[n] + (1 if n == 3 and enable_big_q else 0)
    if q > limit:
        raise GuardExceeded("SL(%d,%d) exceeds the enumeration guard q <= %d" % (n, q, limit))
    F = field(q)
    scalars = sorted({1, F.generator})
    gens = [elementary(n, i, j, t) for i in range(1, n + 1) for j in range(1, n + 1) if i != j for t in scalars]
    G = MatrixGroup.from_generators(n, F, gens, "SL(%d,%d)" % (n, q), limit=sl_order(n, q) + 1)
    if G.order != sl_order(n, q):
        raise AssertionError("|SL(%d,%d)| = %d, expected %d" % (n, q, G.order, sl_order(n, q)))
    if any(mat_det(F, n, g) != 1 for g in G.elements):
        raise AssertionError("element with determinant != 1")
    return G


# standard subgroups, all as predicates on flat matrices


def upper_unitriangular(G: MatrixGroup) -> MatrixGroup:
    n = G.n
    return G.subgroup(
        lambda A: all(A[i * n + i] == 1 for i in range(n)) and all(A[i * n + j] == 0 for i in range(n) for j in range(i)),
        "U",
    )


def lower_unitriangular(G: MatrixGroup) -> MatrixGroup:
    n = G.n
    return G.subgroup(
        lambda A: all(A[i * n + i] == 1 for i in range(n))
        and all(A[i * n + j] == 0 for i in range(n) for j in range(i + 1, n)),
        "U_op",
    )


def upper_borel(G: MatrixGroup) -> MatrixGroup:
    n = G.n
    return G.subgroup(lambda A: all(A[i * n + j] == 0 for i in range(n) for j in range(i)), "B")


def lower_borel(G: MatrixGroup) -> MatrixGroup:
    n = G.n
    return G.subgroup(lambda A: all(A[i * n + j] == 0 for i in range(n) for j in range(i + 1, n)), "B_op")


def parabolic_blocks(n):
    """Block shapes of the proper standard parabolics: compositions of n."""
    if n == 2:
        return [(1, 1)]
    if n == 3:
        return [(1, 2), (2, 1), (1, 1, 1)]
    raise ValueError(n)


def _block_index(blocks):
    idx = []
    for b, size in enumerate(blocks):
        idx += [b] * size
    return idx


def standard_parabolic(G: MatrixGroup, blocks) -> MatrixGroup:
    n, bi = G.n, _block_index(blocks)
    return G.subgroup(lambda A: all(A[i * n + j] == 0 for i in range(n) for j in range(n) if bi[i] > bi[j]), "P%s" % (blocks,))


def unipotent_radical(G: MatrixGroup, blocks) -> MatrixGroup:
    n, bi = G.n, _block_index(blocks)

    def pred(A):
        for i in range(n):
            for j in range(n):
                if bi[i] == bi[j]:
                    if A[i * n + j] != int(i == j):
                        return False
                elif bi[i] > bi[j] and A[i * n + j] != 0:
                    return False
        return True

    return G.subgroup(pred, "U%s" % (blocks,))


def maximal_unipotent_radicals(G: MatrixGroup):
    return [unipotent_radical(G, b) for b in parabolic_blocks(G.n) if len(b) == 2]


def cyclic_group(n: int) -> FiniteGroup:
    return FiniteGroup.generate([1 % n], lambda a, b: (a + b) % n, 0, lambda a: (-a) % n, name="C%d" % n)
