"""
Subgroups S_lvl * prod_alpha G_alpha(P^f(alpha)) encoded by their exponent
functions: pointwise stabilizers of subsets of the apartment, Moy-Prasad
filtration subgroups, inclusion and index between them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import lp
from .qpoly import QPolynomial
from .rootdata import RootDatum


@dataclass(frozen=True)
class ExponentFunction:
    datum: RootDatum = field(repr=False, compare=False)
    exponents: dict
    torus_level: int = 0

    def __getitem__(self, a):
        return self.exponents[a]

    def root_part(self):
        return ExponentFunction(self.datum, dict(self.exponents), 0)

    def with_torus(self, level):
        return ExponentFunction(self.datum, dict(self.exponents), level)

    def items(self):
        return [(a, self.exponents[a]) for a in self.datum.roots]


@dataclass(frozen=True)
class PolytopeOmega:
    """{z : |alpha(z - x)| <= r for alpha in the flavor set}."""

    center: tuple
    radius: Fraction
    flavor: str = "all"

    def __post_init__(self):
        if self.flavor not in ("all", "long", "short"):
            raise ValueError("flavor must be all, long or short")
        if Fraction(self.radius) < 0:
            raise ValueError("negative radius")


def flavor_roots(datum: RootDatum, flavor: str):
    if flavor == "all":
        return list(datum.roots)
    if flavor == "long":
        return list(datum.long_roots)
    if flavor == "short":
        return list(datum.short_roots)
    raise ValueError(flavor)


def f_omega_points(datum: RootDatum, points) -> ExponentFunction:
    points = list(points)
    if not points:
        raise ValueError("empty point set")
    exps = {a: max(math.ceil(-Fraction(datum.pair(a, x))) for x in points) for a in datum.roots}
    return ExponentFunction(datum, exps, 0)


def _polytope_system(datum: RootDatum, omega: PolytopeOmega):
    r = Fraction(omega.radius)
    A, b = [], []
    for a in flavor_roots(datum, omega.flavor):
        if datum.is_positive(a):
            lam = datum.functional[a]
            A.append(list(lam))
            b.append(r)
            A.append([-v for v in lam])
            b.append(r)
    return A, b


def omega_max(datum: RootDatum, omega: PolytopeOmega, a, method="simplex"):
    """max of alpha(x - z) over the polytope, i.e. max of -alpha(u) with u = z - x.

    The value does not depend on the centre, so it is cached per Cartan matrix.
    """
    if method not in ("simplex", "vertices"):
        raise ValueError(method)
    return _omega_max(datum.cartan, omega.flavor, Fraction(omega.radius), tuple(a), method, datum)


_OMEGA_CACHE = {}


def _omega_max(cartan, flavor, r, a, method, datum):
    key = (cartan, flavor, r, a, method)
    if key not in _OMEGA_CACHE:
        A, b = _polytope_system(datum, PolytopeOmega((0,) * datum.rank, r, flavor))
        c = [-v for v in datum.functional[a]]
        if method == "simplex":
            value, _ = lp.maximize(c, A, b)
        else:
            value = lp.vertex_maximize(c, A, b)
        _OMEGA_CACHE[key] = value
    return _OMEGA_CACHE[key]


def f_omega_polytope(datum: RootDatum, omega: PolytopeOmega, method="simplex") -> ExponentFunction:
    x = omega.center
    exps = {}
    for a in datum.roots:
        m = omega_max(datum, omega, a, method)
        exps[a] = math.ceil(-Fraction(datum.pair(a, x)) + m)
    return ExponentFunction(datum, exps, 0)


def _ceil(t, plus):
    t = Fraction(t)
    return math.floor(t) + 1 if plus else math.ceil(t)


def moy_prasad_function(datum: RootDatum, x, r, plus: bool = False) -> ExponentFunction:
    """G_{x,r} (or G_{x,r+} when ``plus``): exponents ceil(r - alpha(x)), torus level ceil(r)."""
    r = Fraction(r)
    if r < 0:
        raise ValueError("depth must be nonnegative")
    exps = {a: _ceil(r - Fraction(datum.pair(a, x)), plus) for a in datum.roots}
    return ExponentFunction(datum, exps, _ceil(r, plus))


def includes(small: ExponentFunction, big: ExponentFunction) -> bool:
    """Whether the group of ``small`` is contained in the group of ``big``."""
    if small.datum is not big.datum:
        raise ValueError("exponent functions over different root data")
    return small.torus_level >= big.torus_level and all(
        small.exponents[a] >= big.exponents[a] for a in small.datum.roots
    )


def index_qpoly(sub_f: ExponentFunction, super_f: ExponentFunction) -> QPolynomial:
    if sub_f.torus_level != super_f.torus_level:
        raise ValueError("torus levels differ; the index is not a power of q")
    if not includes(sub_f, super_f):
        raise ValueError("first argument is not contained in the second")
    n = sum(sub_f.exponents[a] - super_f.exponents[a] for a in sub_f.datum.roots)
    return QPolynomial.monomial(n)


def verify_gxromega(datum: RootDatum, x, r) -> dict:
    """Compare G_{Omega^s} <= S_0 G_{x,r} <= G_{Omega^l} = G_Omega root by root."""
    r = Fraction(r)
    mp = moy_prasad_function(datum, x, r).root_part()
    f_short = f_omega_polytope(datum, PolytopeOmega(x, r, "short"))
    f_long = f_omega_polytope(datum, PolytopeOmega(x, r, "long"))
    f_all = f_omega_polytope(datum, PolytopeOmega(x, r, "all"))
    return {
        "incl_short": includes(f_short, mp),
        "incl_long": includes(mp, f_long),
        "equality": includes(f_long, mp) and includes(mp, f_long),
        "long_equals_all": f_long.exponents == f_all.exponents,
        "defect_roots": [a for a in datum.roots if f_long.exponents[a] != mp.exponents[a]],
    }


def gxromega_failure_witness(datum: RootDatum, points, radii):
    """First (x, r) where S_0 G_{x,r} differs from G_Omega, or None."""
    for r in radii:
        for x in points:
            rep = verify_gxromega(datum, x, r)
            if not rep["equality"]:
                return x, Fraction(r), rep
    return None


def sample_points(datum: RootDatum, count: int, seed: int = 0, denominator: int = 12):
    """Deterministic pseudo-random rational points with small denominators."""
    import random

    rng = random.Random(seed)
    return [
        tuple(Fraction(rng.randint(-2 * denominator, 2 * denominator), denominator) for _ in range(datum.rank))
        for _ in range(count)
    ]


def alcove_samples(datum: RootDatum, denominator: int = 6):
    """Rational points of the closed fundamental alcove with a fixed denominator."""
    from itertools import product

    from .apartment import fundamental_alcove_vertices

    verts = fundamental_alcove_vertices(datum)
    out = set()
    for weights in product(range(denominator + 1), repeat=len(verts)):
        if sum(weights) != denominator:
            continue
        pt = tuple(sum(Fraction(w, denominator) * v[i] for w, v in zip(weights, verts)) for i in range(datum.rank))
        out.add(pt)
    return sorted(out)


def segment_exponents(datum: RootDatum, y, end) -> ExponentFunction:
    """Stabilizer of the segment [y, end]; the two endpoints suffice."""
    return f_omega_points(datum, [y, end])


def interior_check(datum: RootDatum, points, x) -> bool:
    """U_Omega inside G_{x,+}: f(alpha) > -alpha(x) for all alpha."""
    f = f_omega_points(datum, points)
    return all(f.exponents[a] > -Fraction(datum.pair(a, x)) for a in datum.roots)

