"""
Finite fields GF(p^f) by addition and multiplication tables.

Elements are the integers 0 .. q-1; for f > 1 the integer c_0 + c_1 p + ...
encodes the residue class of c_0 + c_1 x + ... modulo a fixed monic
irreducible polynomial.  Table construction checks the field axioms.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


def factor_prime_power(q):
    if q < 2:
        raise ValueError("q = %d is not a prime power" % q)
    p = next(d for d in range(2, q + 1) if q % d == 0)
    f, m = 0, q
    while m % p == 0:
        m //= p
        f += 1
    if m != 1:
        raise ValueError("q = %d is not a prime power" % q)
    return p, f


def _poly_mulmod(a, b, modulus, p):
    """a, b coefficient lists of length f; modulus monic of length f+1."""
    f = len(modulus) - 1
    prod = [0] * (2 * f - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(len(prod) - 1, f - 1, -1):
        c = prod[k]
        if c:
            for j in range(f + 1):
                prod[k - f + j] = (prod[k - f + j] - c * modulus[j]) % p
    return prod[:f]


def _has_root_free_factorisation(modulus, p):
    """Irreducibility for degree <= 3 is absence of roots; higher degrees by trial division."""
    f = len(modulus) - 1
    for d in range(1, f // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            g = list(tail) + [1]
            r = list(modulus)
            for k in range(len(r) - 1, d - 1, -1):
                c = r[k]
                if c:
                    for j in range(d + 1):
                        r[k - d + j] = (r[k - d + j] - c * g[j]) % p
            if not any(r[:d]):
                return False
    return True


def conway_like_modulus(p, f):
    """Lexicographically first monic irreducible of degree f over F_p."""
    if f == 1:
        return (0, 1)
    for tail in itertools.product(range(p), repeat=f):
        m = tail + (1,)
        if m[0] and _has_root_free_factorisation(m, p):
            return m
    raise AssertionError("no irreducible polynomial found")


class GF:
    def __init__(self, q: int):
        self.q = q
        self.p, self.f = factor_prime_power(q)
        p, f = self.p, self.f
        self.modulus = conway_like_modulus(p, f)
        digits = [self._digits(a) for a in range(q)]
        self.add = [[self._number([(x + y) % p for x, y in zip(digits[a], digits[b])]) for b in range(q)] for a in range(q)]
        if f == 1:
            self.mul = [[a * b % p for b in range(q)] for a in range(q)]
        else:
            self.mul = [[self._number(_poly_mulmod(digits[a], digits[b], self.modulus, p)) for b in range(q)] for a in range(q)]
        self.neg = [self.add[a].index(0) for a in range(q)]
        self.inv = [None] + [self.mul[a].index(1) for a in range(1, q)]
        self.sub = [[self.add[a][self.neg[b]] for b in range(q)] for a in range(q)]
        self._check()
        self.generator = self._find_generator()

    def _digits(self, a):
        out = []
        for _ in range(self.f):
            out.append(a % self.p)
            a //= self.p
        return out

    def _number(self, digits):
        return sum(c * self.p**i for i, c in enumerate(digits))

    def _check(self):
        q = self.q
        R = range(q)
        for a in R:
            if self.add[0][a] != a or self.mul[1][a] != a:
                raise AssertionError("identity laws fail")
            if a and self.mul[a][self.inv[a]] != 1:
                raise AssertionError("inverse law fails")
        if q <= 16:
            for a, b, c in itertools.product(R, R, R):
                if self.mul[a][self.add[b][c]] != self.add[self.mul[a][b]][self.mul[a][c]]:
                    raise AssertionError("distributivity fails")
                if self.mul[self.mul[a][b]][c] != self.mul[a][self.mul[b][c]]:
                    raise AssertionError("associativity fails")

    def _find_generator(self):
        for g in range(2 if self.q > 2 else 1, self.q):
            seen, x = set(), 1
            for _ in range(self.q - 1):
                x = self.mul[x][g]
                seen.add(x)
            if len(seen) == self.q - 1:
                return g
        raise AssertionError("no primitive element")

    def elements(self):
        return range(self.q)

    def units(self):
        return range(1, self.q)

    def power(self, a, n):
        if a == 0:
            return 1 if n == 0 else 0
        r = 1
        for _ in range(n % (self.q - 1)):
            r = self.mul[r][a]
        return r

    def trace(self, a):
        """Absolute trace to F_p, as an integer 0 .. p-1."""
        t, x = 0, a
        for _ in range(self.f):
            t = self.add[t][x]
            x = self.power(x, self.p)
        assert t < self.p
        return t

    def __repr__(self):
        return "GF(%d)" % self.q


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    return GF(q)


class ExtensionField:
    """F_{q^n} = F_q[x]/(m) as coordinate tuples over a table field F_q."""

    def __init__(self, base: GF, n: int):
        self.base = base
        self.n = n
        self.modulus = self._find_modulus()

    def _find_modulus(self):
        F, n = self.base, self.n
        for tail in itertools.product(range(F.q), repeat=n):
            if tail[0] == 0:
                continue
            m = tail + (1,)
            if n <= 3:
                if all(self._eval(m, t) != 0 for t in range(F.q)):
                    return m
            else:
                raise NotImplementedError("only degrees up to 3 are needed")
        raise AssertionError("no irreducible modulus")

    def _eval(self, m, t):
        F = self.base
        v = 0
        for c in reversed(m):
            v = F.add[F.mul[v][t]][c]
        return v

    def mul(self, a, b):
        F, n, m = self.base, self.n, self.modulus
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = F.add[prod[i + j]][F.mul[x][y]]
        for k in range(len(prod) - 1, n - 1, -1):
            c = prod[k]
            if c:
                for j in range(n + 1):
                    prod[k - n + j] = F.sub[prod[k - n + j]][F.mul[c][m[j]]]
        return tuple(prod[:n])

    def elements(self):
        return itertools.product(range(self.base.q), repeat=self.n)

    def multiplication_matrix(self, a):
        """Matrix of z -> a z on the basis 1, x, ..., x^{n-1}; columns are images."""
        cols = []
        for k in range(self.n):
            e = tuple(int(i == k) for i in range(self.n))
            cols.append(self.mul(a, e))
        return tuple(tuple(cols[j][i] for j in range(self.n)) for i in range(self.n))
