"""
Exact elements of Z[zeta_N], stored as sparse sums  sum_k c_k zeta_N^k.

The sparse form is not unique; reduction modulo the cyclotomic polynomial
Phi_N gives the normal form used for equality and integrality tests.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache

from ..qpoly import QPolynomial


@lru_cache(maxsize=None)
def _phi(n):
    return QPolynomial.cyclotomic(n)


class Cyclotomic:
    __slots__ = ("N", "terms")

    def __init__(self, N: int, terms=None):
        self.N = N
        t = {}
        for k, c in (terms or {}).items():
            k %= N
            t[k] = t.get(k, 0) + c
        self.terms = {k: c for k, c in t.items() if c}

    @classmethod
    def integer(cls, n, N=1):
        return cls(N, {0: n})

    @classmethod
    def root(cls, k, N):
        return cls(N, {k: 1})

    def lift(self, M):
        """Same number viewed in Z[zeta_M] for a multiple M of N."""
        if M % self.N:
            raise ValueError("%d is not a multiple of %d" % (M, self.N))
        s = M // self.N
        return Cyclotomic(M, {k * s: c for k, c in self.terms.items()})

    def _common(self, other):
        if isinstance(other, int):
            return self, Cyclotomic(self.N, {0: other})
        if other.N == self.N:
            return self, other
        M = self.N * other.N // math.gcd(self.N, other.N)
        return self.lift(M), other.lift(M)

    def __add__(self, other):
        a, b = self._common(other)
        t = dict(a.terms)
        for k, c in b.terms.items():
            t[k] = t.get(k, 0) + c
        return Cyclotomic(a.N, t)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.N, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Cyclotomic(self.N, {k: c * other for k, c in self.terms.items()})
        a, b = self._common(other)
        t = {}
        for i, x in a.terms.items():
            for j, y in b.terms.items():
                k = (i + j) % a.N
                t[k] = t.get(k, 0) + x * y
        return Cyclotomic(a.N, t)

    __rmul__ = __mul__

    def conjugate(self):
        return Cyclotomic(self.N, {-k: c for k, c in self.terms.items()})

    def galois(self, a):
        if math.gcd(a, self.N) != 1:
            raise ValueError("not a unit")
        return Cyclotomic(self.N, {a * k: c for k, c in self.terms.items()})

    def canonical(self) -> tuple:
        """Coefficients of the reduction mod Phi_N; a normal form for fixed N."""
        return tuple(_reduce_poly(self, self.N))

    def _is_zero(self):
        return not any(_reduce_poly(self, self.N))

    def __eq__(self, other):
        if isinstance(other, int):
            other = Cyclotomic(self.N, {0: other})
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._common(other)
        return (a - b)._is_zero()

    __hash__ = None

    def is_zero(self):
        return self._is_zero()

    def rational_integer(self):
        """The value as an int, or None when it is not a rational integer."""
        red = _reduce_poly(self, self.N)
        if any(red[1:]):
            return None
        return red[0] if red else 0

    def __complex__(self):
        return sum((c * cmath.exp(2j * math.pi * k / self.N) for k, c in self.terms.items()), 0j)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms):
            c = self.terms[k]
            parts.append(("%d" % c) if k == 0 else "%d*z%d^%d" % (c, self.N, k))
        return " + ".join(parts)


def _reduce_poly(x: Cyclotomic, N: int):
    coeffs = [0] * N
    for k, c in x.terms.items():
        coeffs[k % N] += c
    _, rem = QPolynomial(coeffs).divmod(_phi(N))
    return list(rem.coeffs)
