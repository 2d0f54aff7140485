"""
Character tables by Dixon's modular method.

Class algebra structure constants c_{jik}, simultaneous eigenvectors of the
class matrices over F_l with l = 1 mod exp(G) and l > 2 sqrt|G|, degrees from
the norm of the eigenvector, then values lifted to Z[zeta_e] through the
eigenvalue multiplicities of each cyclic subgroup.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction

from .cyclotomic import Cyclotomic
from .groups import ConjugacyClasses, FiniteGroup


class DixonError(ArithmeticError):
    pass


def _is_prime(n):
    if n < 2:
        return False
    for d in range(2, int(n**0.5) + 1):
        if n % d == 0:
            return False
    return True


def dixon_primes(exponent, order):
    """Primes l = 1 mod exponent with l > 2 sqrt(order), in increasing order."""
    l = 1
    while True:
        l += exponent
        if l * l > 4 * order and _is_prime(l):
            yield l


def _prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def primitive_root_of_unity(order, l):
    """An element of exact multiplicative order ``order`` in F_l."""
    if (l - 1) % order:
        raise DixonError("%d does not divide %d - 1" % (order, l))
    for g in range(2, l):
        if all(pow(g, (l - 1) // r, l) != 1 for r in _prime_factors(l - 1)):
            return pow(g, (l - 1) // order, l)
    if l == 2:
        return 1
    raise DixonError("no primitive root mod %d" % l)


# ---------------------------------------------------------------------------
# linear algebra over F_l


def _nullspace(M, l):
    """Basis of {v : M v = 0} for an m x n matrix over F_l."""
    m = len(M)
    n = len(M[0]) if m else 0
    A = [list(r) for r in M]
    pivots = []
    row = 0
    for col in range(n):
        piv = next((i for i in range(row, m) if A[i][col] % l), None)
        if piv is None:
            continue
        A[row], A[piv] = A[piv], A[row]
        inv = pow(A[row][col], l - 2, l)
        A[row] = [x * inv % l for x in A[row]]
        for i in range(m):
            if i != row and A[i][col]:
                f = A[i][col]
                A[i] = [(x - f * y) % l for x, y in zip(A[i], A[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = -A[r][fc] % l
        basis.append(v)
    return basis


def _solve_in_basis(basis, vecs, l):
    """Coordinates of each vector in ``vecs`` with respect to ``basis`` (rows)."""
    d = len(basis)
    n = len(basis[0])
    # solve basis^T c = v for each v, by eliminating the augmented system
    A = [[basis[k][i] for k in range(d)] + [v[i] for v in vecs] for i in range(n)]
    row = 0
    piv_cols = []
    for col in range(d):
        piv = next((i for i in range(row, n) if A[i][col] % l), None)
        if piv is None:
            raise DixonError("basis is not independent")
        A[row], A[piv] = A[piv], A[row]
        inv = pow(A[row][col], l - 2, l)
        A[row] = [x * inv % l for x in A[row]]
        for i in range(n):
            if i != row and A[i][col]:
                f = A[i][col]
                A[i] = [(x - f * y) % l for x, y in zip(A[i], A[row])]
        piv_cols.append(col)
        row += 1
    if any(A[i][d + j] % l for i in range(d, n) for j in range(len(vecs))):
        raise DixonError("subspace is not invariant")
    return [[A[k][d + j] for k in range(d)] for j in range(len(vecs))]


def _det_mod(M, l):
    A = [list(r) for r in M]
    n = len(A)
    det = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if A[i][c] % l), None)
        if piv is None:
            return 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = -det
        det = det * A[c][c] % l
        inv = pow(A[c][c], l - 2, l)
        for i in range(c + 1, n):
            if A[i][c]:
                f = A[i][c] * inv % l
                A[i] = [(x - f * y) % l for x, y in zip(A[i], A[c])]
    return det % l


def _eigenvalues(R, l):
    """Distinct eigenvalues in F_l of a small square matrix."""
    d = len(R)
    if d == 1:
        return [R[0][0] % l]
    # characteristic polynomial by interpolation through d+1 determinants
    xs = list(range(d + 1))
    ys = [_det_mod([[(R[i][j] - (x if i == j else 0)) % l for j in range(d)] for i in range(d)], l) for x in xs]
    coeffs = _interpolate(xs, ys, l)
    roots = []
    for t in range(l):
        v = 0
        for c in reversed(coeffs):
            v = (v * t + c) % l
        if v == 0:
            roots.append(t)
    return roots


def _interpolate(xs, ys, l):
    n = len(xs)
    coeffs = [0] * n
    for i in range(n):
        num = [1]
        den = 1
        for j in range(n):
            if j != i:
                num = [(a - xs[j] * b) % l for a, b in zip([0] + num, num + [0])]
                den = den * (xs[i] - xs[j]) % l
        f = ys[i] * pow(den, l - 2, l) % l
        coeffs = [(c + f * a) % l for c, a in zip(coeffs, num)]
    return coeffs


# ---------------------------------------------------------------------------


def structure_constants(G: FiniteGroup, C: ConjugacyClasses):
    """c[j][i][k] = #{x in C_j : x^{-1} z_k in C_i} for the representative z_k of C_k."""
    r = len(C)
    c = [[[0] * r for _ in range(r)] for _ in range(r)]
    cls = C.class_of
    for k, z in enumerate(C.reps):
        for x in G.elements:
            i = cls[G.mul(G.inv(x), z)]
            c[cls[x]][i][k] += 1
    return c


class CharacterTable:
    """Irreducible characters of G as exact values on class representatives."""

    def __init__(self, G: FiniteGroup, characters, prime, modular=None):
        self.group = G
        self.classes = G.classes
        self.N = self.classes.exponent
        self.characters = characters
        self.prime = prime
        self.modular = modular

    def __len__(self):
        return len(self.characters)

    def degrees(self):
        return [chi[0].rational_integer() for chi in self.characters]

    def value(self, chi, g):
        return chi[self.classes.class_of[g]]

    def inner(self, chi, psi) -> Fraction:
        """<chi, psi>_G; exact, must be rational."""
        s = Cyclotomic(self.N, {})
        for i, size in enumerate(self.classes.sizes):
            s = s + chi[i] * psi[i].conjugate() * size
        v = s.rational_integer()
        if v is None:
            raise DixonError("inner product is not rational")
        return Fraction(v, self.group.order)

    def check(self):
        """Row orthogonality, degree sum and square shape."""
        r = len(self.classes)
        if len(self.characters) != r:
            return False
        if sum(d * d for d in self.degrees()) != self.group.order:
            return False
        for a in range(r):
            for b in range(a, r):
                if self.inner(self.characters[a], self.characters[b]) != int(a == b):
                    return False
        return True

    def column_check(self):
        """Column orthogonality: sum_chi chi(g_i) conj chi(g_j) = delta_ij |C_G(g_i)|."""
        r = len(self.classes)
        for i in range(r):
            for j in range(r):
                s = Cyclotomic(self.N, {})
                for chi in self.characters:
                    s = s + chi[i] * chi[j].conjugate()
                want = self.group.order // self.classes.sizes[i] if i == j else 0
                if not s == want:
                    return False
        return True

    # serialisation: values as {exponent of zeta_N: coefficient}

    def to_json(self):
        return {
            "group": self.group.name,
            "order": self.group.order,
            "N": self.N,
            "prime": self.prime,
            "class_sizes": self.classes.sizes,
            "class_orders": self.classes.orders,
            "characters": [[{str(k): c for k, c in sorted(v.lift(self.N).terms.items())} for v in chi] for chi in self.characters],
        }

    @classmethod
    def from_json(cls, G: FiniteGroup, data):
        C = G.classes
        if data["order"] != G.order or data["class_sizes"] != C.sizes or data["class_orders"] != C.orders:
            raise ValueError("cached table does not match the group's class enumeration")
        N = data["N"]
        chars = [[Cyclotomic(N, {int(k): c for k, c in v.items()}) for v in row] for row in data["characters"]]
        return cls(G, chars, data["prime"])


def _split_common_eigenspaces(mats, r, l):
    spaces = [[[int(i == j) for j in range(r)] for i in range(r)]]
    for M in mats:
        if all(len(V) == 1 for V in spaces):
            break
        new = []
        for V in spaces:
            if len(V) == 1:
                new.append(V)
                continue
            images = [[sum(M[i][k] * v[k] for k in range(r)) % l for i in range(r)] for v in V]
            R = _solve_in_basis(V, images, l)
            # R[j] = coordinates of M v_j; the restriction matrix has columns R[j]
            Rt = [[R[j][i] for j in range(len(V))] for i in range(len(V))]
            for lam in _eigenvalues(Rt, l):
                ker = _nullspace([[(Rt[i][j] - (lam if i == j else 0)) % l for j in range(len(V))] for i in range(len(V))], l)
                new.append([[sum(c[j] * V[j][t] for j in range(len(V))) % l for t in range(r)] for c in ker])
        spaces = new
    if any(len(V) != 1 for V in spaces):
        raise DixonError("class matrices do not split the space")
    return [V[0] for V in spaces]


def character_table(G: FiniteGroup, max_classes: int = 64, primes_to_try: int = 4) -> CharacterTable:
    C = G.classes
    r = len(C)
    if r > max_classes:
        raise DixonError("%d classes exceed the guard %d" % (r, max_classes))
    if C.reps[0] != G.identity:
        raise DixonError("identity must be the first class representative")
    e = C.exponent
    consts = structure_constants(G, C)
    last = None
    for attempt, l in enumerate(dixon_primes(e, G.order)):
        if attempt >= primes_to_try:
            break
        try:
            return _dixon_with_prime(G, C, consts, e, l)
        except DixonError as err:
            last = err
    raise DixonError("lifting failed for every prime tried: %s" % last)


def _dixon_with_prime(G, C, consts, e, l):
    r = len(C)
    order = G.order
    mats = [consts[j] for j in range(r)]
    vecs = _split_common_eigenspaces(mats, r, l)
    z = primitive_root_of_unity(e, l)
    chars = []
    modular = []
    for v in vecs:
        if v[0] % l == 0:
            raise DixonError("eigenvector vanishes on the identity class")
        inv0 = pow(v[0], l - 2, l)
        w = [x * inv0 % l for x in v]
        # sum_i w_i w_{i*} / |C_i| = |G| / chi(1)^2
        s = sum(w[i] * w[C.inverse[i]] * pow(C.sizes[i], l - 2, l) for i in range(r)) % l
        if s == 0:
            raise DixonError("degenerate norm")
        d2 = order * pow(s, l - 2, l) % l
        deg = next((d for d in range(1, math.isqrt(order) + 1) if order % d == 0 and d * d % l == d2), None)
        if deg is None:
            raise DixonError("no degree matches")
        vals = [w[i] * deg * pow(C.sizes[i], l - 2, l) % l for i in range(r)]
        modular.append(vals)
        chars.append([_lift_value(C, i, vals, e, z, l, deg) for i in range(r)])
    table = CharacterTable(G, chars, l, modular)
    order_key = sorted(range(r), key=lambda a: (table.degrees()[a], a))
    table.characters = [chars[a] for a in order_key]
    table.modular = [modular[a] for a in order_key]
    if any(x.rational_integer() != 1 for x in table.characters[0]):
        raise DixonError("first character is not trivial")
    return table


def _lift_value(C, i, vals, e, z, l, deg):
    """chi(g_i) = sum_k m_k zeta_o^k with eigenvalue multiplicities m_k recovered mod l."""
    o = C.orders[i]
    zo = pow(z, e // o, l)
    inv_o = pow(o, l - 2, l)
    terms = {}
    total = 0
    for k in range(o):
        s = 0
        for t in range(o):
            s += vals[C.power_class(i, t)] * pow(zo, (-k * t) % o, l)
        m = s * inv_o % l
        if m > deg:
            raise DixonError("multiplicity %d exceeds degree %d" % (m, deg))
        if m:
            terms[k * (e // o)] = m
            total += m
    if total != deg:
        raise DixonError("multiplicities sum to %d, not %d" % (total, deg))
    return Cyclotomic(e, terms)


# ---------------------------------------------------------------------------
# on-disk cache keyed by group name


def load_cached_table(G: FiniteGroup, path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except FileNotFoundError:
        return None
    entry = data.get(G.name)
    if entry is None:
        return None
    return CharacterTable.from_json(G, entry)


def store_cached_table(table: CharacterTable, path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except FileNotFoundError:
        data = {}
    data[table.group.name] = table.to_json()
    with open(path, "w") as fh:
        json.dump(data, fh, indent=1, sort_keys=True)


def cached_character_table(G: FiniteGroup, path=None) -> CharacterTable:
    if path is not None:
        t = load_cached_table(G, path)
        if t is not None:
            return t
    t = character_table(G)
    if path is not None:
        store_cached_table(t, path)
    return t
