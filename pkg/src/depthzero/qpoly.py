"""
Integer polynomials in the residue-field cardinality q.

Every degree, index and group order in the package is one of these.
Coefficients are stored in ascending degree with no trailing zeros.
"""

from __future__ import annotations

import re
from functools import reduce
from itertools import zip_longest


class InexactDivision(ArithmeticError):
    pass


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class QPolynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = (coeffs,) if isinstance(coeffs, int) else tuple(coeffs)
        for c in coeffs:
            if not isinstance(c, int):
                raise TypeError("coefficients must be integers, got %r" % (c,))
        self.coeffs = _trim(coeffs)

    @classmethod
    def q(cls):
        return cls((0, 1))

    @classmethod
    def monomial(cls, n, c=1):
        if n < 0:
            raise ValueError("negative exponent")
        return cls((0,) * n + (c,))

    @classmethod
    def cyclotomic(cls, n):
        """Phi_n, by dividing q^n - 1 by Phi_d for the proper divisors d."""
        num = cls.monomial(n) - 1
        for d in range(1, n):
            if n % d == 0:
                num = num.exact_div(cls.cyclotomic(d))
        return num

    # ring structure

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return QPolynomial(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return QPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = QPolynomial(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other):
        """Long division over Z; requires each step's quotient to be integral."""
        other = _coerce(other)
        if other is NotImplemented or not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        dq = len(other.coeffs) - 1
        quot = [0] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            if c % lead:
                raise InexactDivision("leading coefficient %d does not divide %d" % (lead, c))
            t = c // lead
            quot[k - dq] = t
            for j, b in enumerate(other.coeffs):
                rem[k - dq + j] -= t * b
        return QPolynomial(quot), QPolynomial(rem)

    def exact_div(self, other):
        try:
            quot, rem = self.divmod(other)
        except InexactDivision as err:
            raise InexactDivision("%s does not divide %s: %s" % (other, self, err)) from None
        if rem:
            raise InexactDivision("%s does not divide %s (remainder %s)" % (other, self, rem))
        return quot

    def __floordiv__(self, other):
        return self.exact_div(other)

    # comparison and evaluation

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, q):
        value = 0
        for c in reversed(self.coeffs):
            value = value * q + c
        return value

    evaluate = __call__

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else -1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_monomial(self):
        return sum(1 for c in self.coeffs if c) == 1

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for n in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[n]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if n == 0:
                body = str(a)
            else:
                var = "q" if n == 1 else "q^%d" % n
                body = var if a == 1 else "%d*%s" % (a, var)
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += " %s %s" % (sign, body)
        return out

    def __repr__(self):
        return "QPolynomial(%s)" % (list(self.coeffs),)

    @classmethod
    def parse(cls, text):
        """Inverse of ``str``: accepts sums of terms like ``-3*q^2``, ``q``, ``7``."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial")
        if s[0] not in "+-":
            s = "+" + s
        pos = 0
        total = cls()
        term = re.compile(r"([+-])(?:(\d+)(?:\*q(?:\^(\d+))?)?|q(?:\^(\d+))?)")
        while pos < len(s):
            m = term.match(s, pos)
            if m is None or m.end() == pos:
                raise ValueError("cannot parse %r at column %d" % (text, pos))
            sign, coef, e1, e2 = m.groups()
            c = int(coef) if coef is not None else 1
            if coef is not None and "q" not in m.group(0):
                n = 0
            else:
                n = int(e1 or e2 or 1)
            total = total + cls.monomial(n, -c if sign == "-" else c)
            pos = m.end()
        return total


def _coerce(other):
    if isinstance(other, QPolynomial):
        return other
    if isinstance(other, int):
        return QPolynomial(other)
    return NotImplemented


def qprod(polys):
    return reduce(lambda a, b: a * b, polys, QPolynomial(1))


Q = QPolynomial.q()
