"""
Root systems, finite Weyl groups and the q-polynomials attached to them.

Conventions: simple roots are indexed 0..n-1 with Bourbaki numbering inside
each irreducible component; ``cartan[i][j] = <alpha_j, alpha_i^vee>``.
Roots are integer coefficient tuples over the simple roots.  Cocharacters and
apartment points use coordinates in the simple coroot basis, so a root ``a``
takes the value ``sum_{i,j} a_j * cartan[i][j] * x_i`` on ``x``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .qpoly import Q, QPolynomial, qprod


class RootDataError(ValueError):
    pass


_RANK_OK = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


@dataclass(frozen=True)
class CartanSpec:
    components: tuple[tuple[str, int], ...]

    def __post_init__(self):
        if not self.components:
            raise RootDataError("empty Cartan type")
        for letter, n in self.components:
            if letter not in _RANK_OK or not isinstance(n, int) or not _RANK_OK[letter](n):
                raise RootDataError("invalid Cartan type %s%s" % (letter, n))

    @classmethod
    def parse(cls, text: str) -> "CartanSpec":
        comps = []
        pos = 0
        for part in text.split("+"):
            m = re.fullmatch(r"\s*([A-Z])(\d+)\s*", part)
            if m is None:
                raise RootDataError("cannot parse Cartan type %r (column %d)" % (text, pos + 1))
            comps.append((m.group(1), int(m.group(2))))
            pos += len(part) + 1
        return cls(tuple(comps))

    @property
    def rank(self):
        return sum(n for _, n in self.components)

    def __str__(self):
        return "+".join("%s%d" % c for c in self.components)


def _cartan_block(letter, n):
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, a_ij=-1, a_ji=-1):
        C[i][j] = a_ij
        C[j][i] = a_ji

    if letter in "ABCD":
        chain = n - 1 if letter != "D" else n - 2
        for i in range(chain):
            link(i, i + 1)
        if letter == "B":
            link(n - 2, n - 1, -1, -2)  # alpha_n short
        elif letter == "C":
            link(n - 2, n - 1, -2, -1)  # alpha_n long
        elif letter == "D":
            link(n - 3, n - 1)
    elif letter == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif letter == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif letter == "G":
        link(0, 1, -3, -1)  # alpha_1 short
    return C


def cartan_matrix(spec: CartanSpec):
    n = spec.rank
    C = [[0] * n for _ in range(n)]
    off = 0
    for letter, r in spec.components:
        block = _cartan_block(letter, r)
        for i in range(r):
            for j in range(r):
                C[off + i][off + j] = block[i][j]
        off += r
    return C


def _classical_root_count(letter, n):
    return {
        "A": n * (n + 1),
        "B": 2 * n * n,
        "C": 2 * n * n,
        "D": 2 * n * (n - 1),
        "E": {6: 72, 7: 126, 8: 240}.get(n),
        "F": 48,
        "G": 12,
    }[letter]


def _classical_weyl_order(letter, n):
    return {
        "A": math.factorial(n + 1),
        "B": 2**n * math.factorial(n),
        "C": 2**n * math.factorial(n),
        "D": 2 ** (n - 1) * math.factorial(n),
        "E": {6: 51840, 7: 2903040, 8: 696729600}.get(n),
        "F": 1152,
        "G": 12,
    }[letter]


def classical_root_count(spec):
    return sum(_classical_root_count(*c) for c in spec.components)


def classical_weyl_order(spec):
    return math.prod(_classical_weyl_order(*c) for c in spec.components)


_DEGREES = {
    "E": {6: [2, 5, 6, 8, 9, 12], 7: [2, 6, 8, 10, 12, 14, 18], 8: [2, 8, 12, 14, 18, 20, 24, 30]},
    "F": {4: [2, 6, 8, 12]},
    "G": {2: [2, 6]},
}


def _component_degrees(letter, n):
    if letter == "A":
        return list(range(2, n + 2))
    if letter in "BC":
        return list(range(2, 2 * n + 1, 2))
    if letter == "D":
        return sorted(list(range(2, 2 * n - 1, 2)) + [n])
    return list(_DEGREES[letter][n])


def weyl_degrees(spec: CartanSpec) -> list[int]:
    """Invariant degrees, checked against |W| and |Phi^+| for every component."""
    out = []
    for letter, n in spec.components:
        ds = _component_degrees(letter, n)
        if math.prod(ds) != _classical_weyl_order(letter, n):
            raise RootDataError("degree table for %s%d disagrees with |W|" % (letter, n))
        if sum(d - 1 for d in ds) != _classical_root_count(letter, n) // 2:
            raise RootDataError("degree table for %s%d disagrees with |Phi+|" % (letter, n))
        out.extend(ds)
    return out


def group_order_poly(spec: CartanSpec) -> QPolynomial:
    """|G(F_q)| = q^N prod (q^d - 1) for split semisimple G of this type."""
    N = classical_root_count(spec) // 2
    return Q**N * qprod(Q**d - 1 for d in weyl_degrees(spec))


# ---------------------------------------------------------------------------


def _squared_lengths(C):
    """Squared root lengths of the simple roots, shortest root of each component = 1."""
    n = len(C)
    norms = [None] * n
    comps = []
    for start in range(n):
        if norms[start] is not None:
            continue
        norms[start] = Fraction(1)
        comp = [start]
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and C[i][j] != 0 and norms[j] is None:
                    # a_ij n_i = a_ji n_j
                    norms[j] = norms[i] * C[i][j] / C[j][i]
                    comp.append(j)
                    stack.append(j)
        low = min(norms[i] for i in comp)
        for i in comp:
            norms[i] = norms[i] / low
        comps.append(sorted(comp))
    return norms, comps


class RootDatum:
    """All roots, coroots and length data for a Cartan matrix."""

    def __init__(self, C, spec: CartanSpec | None = None):
        self.spec = spec
        self.cartan = tuple(tuple(row) for row in C)
        self.rank = n = len(C)
        self.simple_norms, comps = _squared_lengths(C)
        self.components = [tuple(c) for c in comps]
        self._comp_of = {i: k for k, comp in enumerate(self.components) for i in comp}

        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        seen = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for a in frontier:
                for i in range(n):
                    b = self.reflect_root(i, a)
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
            frontier = nxt
        self.roots = sorted(seen, key=lambda a: (-self.is_positive(a), sum(abs(c) for c in a), [-c for c in a]))
        self.simple_roots = simple
        self.positive_roots = [a for a in self.roots if self.is_positive(a)]
        self.root_set = frozenset(self.roots)
        self.norm = {a: self._norm(a) for a in self.roots}
        self.coroot = {a: self._coroot(a) for a in self.roots}
        self.functional = {a: tuple(sum(a[j] * C[i][j] for j in range(n)) for i in range(n)) for a in self.roots}

        self.long_roots = []
        self.short_roots = []
        self.highest_root = []
        self.highest_short_root = []
        for comp in self.components:
            croots = [a for a in self.roots if self.component_of(a) == comp]
            top = max(self.norm[a] for a in croots)
            bottom = min(self.norm[a] for a in croots)
            longs = [a for a in croots if self.norm[a] == top]
            shorts = croots if top == bottom else [a for a in croots if self.norm[a] != top]
            self.long_roots.extend(longs)
            self.short_roots.extend(shorts)
            self.highest_root.append(max(croots, key=sum))
            self.highest_short_root.append(max(shorts, key=sum))
        for a in self.roots:
            if not (self.is_positive(a) or self.is_positive(tuple(-c for c in a))):
                raise RootDataError("root %s has mixed signs" % (a,))

    # evaluation and basic maps

    @staticmethod
    def is_positive(a):
        return all(c >= 0 for c in a) and any(a)

    @staticmethod
    def neg(a):
        return tuple(-c for c in a)

    def height(self, a):
        return sum(a)

    def component_of(self, a):
        k = {self._comp_of[i] for i, c in enumerate(a) if c}
        assert len(k) == 1
        return self.components[k.pop()]

    def pair(self, a, x):
        """alpha(x) for a root (or any root-lattice vector) ``a`` and coroot-basis point ``x``."""
        lam = self.functional.get(a)
        if lam is None:
            lam = [sum(a[j] * self.cartan[i][j] for j in range(self.rank)) for i in range(self.rank)]
        return sum(l * xi for l, xi in zip(lam, x))

    def reflect_root(self, i, a):
        c = sum(a[j] * self.cartan[i][j] for j in range(self.rank))
        b = list(a)
        b[i] -= c
        return tuple(b)

    def _norm(self, a):
        C, nm = self.cartan, self.simple_norms
        return sum(a[i] * a[j] * C[i][j] * nm[i] for i in range(self.rank) for j in range(self.rank)) / 2

    def _coroot(self, a):
        na = self.norm[a]
        out = []
        for j in range(self.rank):
            v = a[j] * self.simple_norms[j] / na
            assert v.denominator == 1
            out.append(int(v))
        return tuple(out)

    @cached_property
    def rho_functional(self):
        """2*rho as a functional on coroot coordinates."""
        two_rho = tuple(sum(a[j] for a in self.positive_roots) for j in range(self.rank))
        return two_rho

    def two_rho(self, x):
        return self.pair(self.rho_functional, x)

    def fundamental_coweight(self, i):
        """omega_i^vee in coroot coordinates: alpha_j(omega_i^vee) = delta_ij."""
        from .linalg import solve

        CT = [[self.cartan[k][j] for k in range(self.rank)] for j in range(self.rank)]
        return tuple(solve(CT, [int(j == i) for j in range(self.rank)]))

    # Weyl group pieces

    def simple_reflection(self, i) -> "WeylElement":
        n = self.rank
        M = [[int(r == c) for c in range(n)] for r in range(n)]
        R = [[int(r == c) for c in range(n)] for r in range(n)]
        for k in range(n):
            M[i][k] -= self.cartan[k][i]
            R[i][k] -= self.cartan[i][k]
        return WeylElement(self, _freeze(M), _freeze(R), (i,))

    def reflection(self, a) -> "WeylElement":
        """s_a: x -> x - a(x) a^vee on coweights, b -> b - <b, a^vee> a on roots."""
        n = self.rank
        lam = self.functional[a]
        cv = self.coroot[a]
        M = [[int(r == c) - cv[r] * lam[c] for c in range(n)] for r in range(n)]
        # <e_j, a^vee> = sum_i C[i][j] cv_i
        pair_e = [sum(self.cartan[i][j] * cv[i] for i in range(n)) for j in range(n)]
        R = [[int(r == c) - a[r] * pair_e[c] for c in range(n)] for r in range(n)]
        return WeylElement(self, _freeze(M), _freeze(R), None)

    def identity(self) -> "WeylElement":
        I = _freeze([[int(r == c) for c in range(self.rank)] for r in range(self.rank)])
        return WeylElement(self, I, I, ())

    def __repr__(self):
        return "RootDatum(%s)" % (self.spec if self.spec else "rank %d" % self.rank)


def _freeze(M):
    return tuple(tuple(row) for row in M)


def _mat_mul(A, B):
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in zip(*B)) for row in A)


@dataclass(frozen=True, eq=False)
class WeylElement:
    datum: RootDatum = field(repr=False)
    matrix: tuple  # action on coroot coordinates
    root_matrix: tuple  # action on root coefficients
    word: tuple | None = None

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __mul__(self, other):
        word = None
        if self.word is not None and other.word is not None:
            word = self.word + other.word
        return WeylElement(
            self.datum,
            _mat_mul(self.matrix, other.matrix),
            _mat_mul(self.root_matrix, other.root_matrix),
            word,
        )

    def act(self, x):
        return tuple(sum(m * xi for m, xi in zip(row, x)) for row in self.matrix)

    def act_root(self, a):
        return tuple(sum(m * ai for m, ai in zip(row, a)) for row in self.root_matrix)

    def inverse(self):
        from .linalg import inverse

        Mi = _freeze([[int(v) for v in row] for row in inverse(self.matrix)])
        Ri = _freeze([[int(v) for v in row] for row in inverse(self.root_matrix)])
        word = tuple(reversed(self.word)) if self.word is not None else None
        return WeylElement(self.datum, Mi, Ri, word)

    @cached_property
    def length(self):
        return sum(1 for a in self.datum.positive_roots if not RootDatum.is_positive(self.act_root(a)))

    def is_identity(self):
        return self == self.datum.identity()

    def __repr__(self):
        return "WeylElement(word=%s)" % (self.word,)


def build_root_system(spec: CartanSpec | str) -> RootDatum:
    if isinstance(spec, str):
        spec = CartanSpec.parse(spec)
    datum = RootDatum(cartan_matrix(spec), spec)
    if len(datum.roots) != classical_root_count(spec):
        raise RootDataError("reflection closure produced %d roots for %s" % (len(datum.roots), spec))
    return datum


def weyl_group(datum: RootDatum, max_rank: int = 6) -> list[WeylElement]:
    """All of W_0 by breadth-first closure; the stored words are reduced."""
    if datum.rank > max_rank:
        raise RootDataError("rank %d exceeds enumeration guard %d" % (datum.rank, max_rank))
    cached = getattr(datum, "_weyl_cache", None)
    if cached is not None:
        return cached
    gens = [datum.simple_reflection(i) for i in range(datum.rank)]
    e = datum.identity()
    seen = {e.matrix: e}
    frontier = [e]
    while frontier:
        nxt = []
        for w in frontier:
            for s in gens:
                v = w * s
                if v.matrix not in seen:
                    seen[v.matrix] = v
                    nxt.append(v)
        frontier = nxt
    elements = list(seen.values())
    datum._weyl_cache = elements
    return elements


def poincare_poly(datum: RootDatum) -> QPolynomial:
    counts = {}
    for w in weyl_group(datum):
        counts[w.length] = counts.get(w.length, 0) + 1
    return QPolynomial([counts.get(k, 0) for k in range(max(counts) + 1)])


def coxeter_element(datum: RootDatum) -> WeylElement:
    w = datum.identity()
    for i in range(datum.rank):
        w = w * datum.simple_reflection(i)
    return w


def charpoly(M: Sequence[Sequence[int]]) -> QPolynomial:
    """det(q I - M) by Faddeev-LeVerrier; every division is exact over Z."""
    n = len(M)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    Mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # Mk = M (Mk_prev + c_{n-k+1} I)
        prev = [[Mk[i][j] + (coeffs[n - k + 1] if i == j else 0) for j in range(n)] for i in range(n)]
        Mk = [[sum(M[i][t] * prev[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        tr = sum(Mk[i][i] for i in range(n))
        assert tr % k == 0
        coeffs[n - k] = -tr // k
    return QPolynomial(coeffs)


def torus_order_poly(w: WeylElement) -> QPolynomial:
    return charpoly(w.matrix)


def dl_cuspidal_degree_poly(spec: CartanSpec | RootDatum, w: WeylElement) -> QPolynomial:
    """prod (q^d - 1) / |T_w|; raises InexactDivision when the quotient is not a polynomial."""
    if isinstance(spec, RootDatum):
        spec = spec.spec if spec.spec is not None else classify_cartan(spec.cartan)
    return qprod(Q**d - 1 for d in weyl_degrees(spec)).exact_div(torus_order_poly(w))


def conjugacy_classes(elements: list[WeylElement]) -> list[list[WeylElement]]:
    remaining = set(elements)
    classes = []
    inverses = {w: w.inverse() for w in elements}
    for w in elements:
        if w not in remaining:
            continue
        cls = {g * w * inverses[g] for g in elements}
        remaining -= cls
        classes.append(sorted(cls, key=lambda v: v.length))
    return classes


def classify_cartan(C) -> CartanSpec:
    """Cartan type of an arbitrary Cartan matrix, one letter per connected component."""
    norms, comps = _squared_lengths(C)
    parts = []
    for comp in comps:
        sub = [[C[i][j] for j in comp] for i in comp]
        n = len(comp)
        datum = RootDatum(sub)
        nroots = len(datum.roots)
        nlong = len(datum.long_roots)
        simply_laced = nlong == nroots
        if simply_laced:
            if nroots == n * (n + 1):
                parts.append(("A", n))
            elif n >= 4 and nroots == 2 * n * (n - 1):
                parts.append(("D", n))
            elif n in (6, 7, 8) and nroots == _classical_root_count("E", n):
                parts.append(("E", n))
            else:
                raise RootDataError("unrecognised simply-laced Cartan matrix")
        elif n == 2 and nroots == 12:
            parts.append(("G", 2))
        elif n == 4 and nroots == 48:
            parts.append(("F", 4))
        elif nroots == 2 * n * n:
            parts.append(("C" if nlong == 2 * n else "B", n))
        else:
            raise RootDataError("unrecognised Cartan matrix")
    parts.sort()
    return CartanSpec(tuple(parts))
