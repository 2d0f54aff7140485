"""
Structured reports: JSON with exact values only.

Fractions become {"fraction": "a/b"}, q-polynomials {"qpoly": [c0, c1, ...]}
and tuples {"tuple": [...]}; ``loads(dumps(r)) == r`` for every report built
from dicts, lists, tuples, str, int, bool, None, Fraction and QPolynomial.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .qpoly import QPolynomial


def encode(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return {"fraction": "%d/%d" % (obj.numerator, obj.denominator)}
    if isinstance(obj, QPolynomial):
        return {"qpoly": list(obj.coeffs)}
    if isinstance(obj, tuple):
        return {"tuple": [encode(v) for v in obj]}
    if isinstance(obj, list):
        return [encode(v) for v in obj]
    if isinstance(obj, dict):
        for k in obj:
            if not isinstance(k, str):
                raise TypeError("report keys must be strings, got %r" % (k,))
        return {k: encode(v) for k, v in obj.items()}
    if isinstance(obj, float):
        raise TypeError("floating point values are not allowed in reports")
    raise TypeError("cannot encode %r" % (obj,))


def decode(obj):
    if isinstance(obj, list):
        return [decode(v) for v in obj]
    if isinstance(obj, dict):
        if len(obj) == 1:
            (k, v), = obj.items()
            if k == "fraction":
                return Fraction(v)
            if k == "qpoly":
                return QPolynomial(v)
            if k == "tuple":
                return tuple(decode(x) for x in v)
        return {k: decode(v) for k, v in obj.items()}
    return obj


def dumps(report) -> str:
    return json.dumps(encode(report), indent=1, sort_keys=True)


def loads(text: str):
    return decode(json.loads(text))
