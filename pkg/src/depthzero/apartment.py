"""
Geometry of one apartment: affine roots, local root systems at a point,
vertices, the chamber data Upsilon_x and an affine Weyl group oracle for
double cosets W_y \\ W / W_x.

Points are tuples of Fractions in the simple coroot basis.  Cocharacters are
integer tuples in the same basis.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .linalg import rank as matrix_rank
from .rootdata import RootDatum, WeylElement, weyl_group


def apartment_point(coords) -> tuple:
    return tuple(Fraction(c) for c in coords)


def parse_point(text: str, rank: int | None = None) -> tuple:
    """Parse ``"1/2,0"``; blank input or ``"0"`` means the origin when rank is given."""
    text = text.strip()
    if rank is not None and text in ("", "0"):
        return (Fraction(0),) * rank
    try:
        pt = tuple(Fraction(part.strip()) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as err:
        raise ValueError("cannot parse point %r: %s" % (text, err)) from None
    if rank is not None and len(pt) != rank:
        raise ValueError("point %r has %d coordinates, expected %d" % (text, len(pt), rank))
    return pt


def sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def add(x, y):
    return tuple(a + b for a, b in zip(x, y))


@dataclass(frozen=True)
class AffineRoot:
    gradient: tuple
    level: int

    def eval(self, datum: RootDatum, x):
        return datum.pair(self.gradient, x) + self.level


@dataclass(frozen=True)
class LocalRootSystem:
    base_point: tuple
    Phi_x: tuple  # affine roots vanishing at x
    Phi_x_lin: tuple
    Phi_x_lin_plus: tuple
    Delta_x: tuple

    @property
    def rank(self):
        return matrix_rank([list(a) for a in self.Phi_x_lin]) if self.Phi_x_lin else 0


def local_root_system(datum: RootDatum, x) -> LocalRootSystem:
    Phi_x = []
    lin = []
    for a in datum.roots:
        v = datum.pair(a, x)
        if Fraction(v).denominator == 1:
            Phi_x.append(AffineRoot(a, -int(v)))
            lin.append(a)
    plus = [a for a in lin if datum.is_positive(a)]
    decomposable = {tuple(s + t for s, t in zip(a, b)) for a in plus for b in plus}
    delta = [a for a in plus if a not in decomposable]
    return LocalRootSystem(tuple(x), tuple(Phi_x), tuple(lin), tuple(plus), tuple(delta))


def is_special(datum: RootDatum, x) -> bool:
    return all(Fraction(datum.pair(a, x)).denominator == 1 for a in datum.positive_roots)


def is_vertex(datum: RootDatum, x) -> bool:
    return local_root_system(datum, x).rank == datum.rank


def fundamental_alcove_vertices(datum: RootDatum) -> list[tuple]:
    """Vertices of the closed fundamental alcove: per component 0 or omega_i^vee / m_i, summed."""
    per_component = []
    for comp, theta in zip(datum.components, datum.highest_root):
        choices = [(Fraction(0),) * datum.rank]
        for i in comp:
            w = datum.fundamental_coweight(i)
            choices.append(tuple(c / theta[i] for c in w))
        per_component.append(choices)
    out = []
    for combo in itertools.product(*per_component):
        pt = tuple(sum(cs) for cs in zip(*combo))
        out.append(tuple(Fraction(c) for c in pt))
    return out


def alcove_barycenter(datum: RootDatum) -> tuple:
    verts = fundamental_alcove_vertices(datum)
    return tuple(sum(cs) / len(verts) for cs in zip(*verts))


def in_cone(datum: RootDatum, roots, z, strict=True) -> bool:
    if strict:
        return all(datum.pair(a, z) > 0 for a in roots)
    return all(datum.pair(a, z) >= 0 for a in roots)


def linear_stabilizer(datum: RootDatum, x) -> list[WeylElement]:
    """W_x^lin: closure of the reflections in the gradients of Phi_x."""
    loc = local_root_system(datum, x)
    gens = [datum.reflection(a) for a in loc.Phi_x_lin_plus]
    e = datum.identity()
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for w in frontier:
            for s in gens:
                v = w * s
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return sorted(seen, key=lambda w: w.length)


def upsilon(datum: RootDatum, x) -> list[WeylElement]:
    """{w in W_0 : w D subset D_x}, i.e. w^{-1} beta > 0 for every beta in Delta_x."""
    delta_x = local_root_system(datum, x).Delta_x
    out = []
    for w in weyl_group(datum):
        winv = w.inverse()
        if all(datum.is_positive(winv.act_root(b)) for b in delta_x):
            out.append(w)
    return out


def chamber_of(datum: RootDatum, z, candidates) -> list[WeylElement]:
    """Elements w among candidates with z in w D."""
    out = []
    for w in candidates:
        u = w.inverse().act(z)
        if in_cone(datum, datum.positive_roots, u):
            out.append(w)
    return out


def phi_dagger(datum: RootDatum, x, y, ell) -> list[tuple]:
    """Roots with alpha(ell) > alpha(y - x)."""
    d = sub(y, x)
    return [a for a in datum.roots if datum.pair(a, ell) > datum.pair(a, d)]


# ---------------------------------------------------------------------------
# affine Weyl group W = X_* x| W_0, elements z -> w z + t


@dataclass(frozen=True)
class AffineWeylElement:
    linear: tuple  # matrix of the linear part on coroot coordinates
    translation: tuple  # integer cocharacter

    def __mul__(self, other):
        L = tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in zip(*other.linear)) for row in self.linear)
        t = tuple(sum(m * s for m, s in zip(row, other.translation)) + ti for row, ti in zip(self.linear, self.translation))
        return AffineWeylElement(L, t)

    def act(self, z):
        return tuple(sum(m * zi for m, zi in zip(row, z)) + ti for row, ti in zip(self.linear, self.translation))

    def is_translation(self):
        n = len(self.linear)
        return all(self.linear[i][j] == int(i == j) for i in range(n) for j in range(n))

    @classmethod
    def translation_by(cls, ell):
        n = len(ell)
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), tuple(int(c) for c in ell))


def wlin_image(x, w: WeylElement) -> AffineWeylElement:
    """w -> t(x - w x) w, the lift of W_x^lin into the stabilizer of x."""
    shift = sub(x, w.act(x))
    if any(Fraction(c).denominator != 1 for c in shift):
        raise ValueError("x - w x is not a cocharacter; w is not in W_x^lin")
    return AffineWeylElement(w.matrix, tuple(int(c) for c in shift))


def stabilizer_lift(datum: RootDatum, x) -> list[AffineWeylElement]:
    return [wlin_image(x, w) for w in linear_stabilizer(datum, x)]


@dataclass(frozen=True)
class DoubleCoset:
    elements: frozenset
    window_translations: frozenset  # cocharacters ell with t(ell) in the class and |ell|_inf <= L

    def translations(self):
        return [g.translation for g in self.elements if g.is_translation()]


def affine_double_cosets_bruteforce(datum: RootDatum, x, y, L: int, max_window: int = 6) -> list[DoubleCoset]:
    """Classes of W_y \\ W / W_x meeting the window |ell|_inf <= L.

    Every element t(ell) w of the window is expanded to its full (finite)
    double coset W_y t(ell) w W_x, so classes are never split by the window.
    """
    if L > max_window:
        raise ValueError("window %d exceeds guard %d" % (L, max_window))
    if not (is_vertex(datum, x) and is_vertex(datum, y)):
        raise ValueError("x and y must be vertices")
    Wx = stabilizer_lift(datum, x)
    Wy = stabilizer_lift(datum, y)
    W0 = weyl_group(datum)
    label = {}
    classes = []
    for ell in itertools.product(range(-L, L + 1), repeat=datum.rank):
        t = AffineWeylElement.translation_by(ell)
        for w in W0:
            g = t * AffineWeylElement(w.matrix, (0,) * datum.rank)
            if g in label:
                continue
            members = frozenset(a * g * b for a in Wy for b in Wx)
            k = len(classes)
            for h in members:
                label[h] = k
            window = frozenset(
                h.translation for h in members if h.is_translation() and max(map(abs, h.translation)) <= L
            )
            classes.append(DoubleCoset(members, window))
    return classes


def floor(v) -> int:
    return math.floor(Fraction(v))


def ceil(v) -> int:
    return math.ceil(Fraction(v))
