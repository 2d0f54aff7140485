"""
Deligne-Lusztig cuspidals of SL(n, q) read off the character table: the
Harish-Chandra cuspidality test, degree matching, Green values on unipotent
elements, and the Borel-subgroup identities.
"""

from __future__ import annotations

import math
from fractions import Fraction

from ..rootdata import build_root_system, coxeter_element, dl_cuspidal_degree_poly
from .chartable import CharacterTable
from .cyclotomic import Cyclotomic
from .groups import MatrixGroup, is_scalar, maximal_unipotent_radicals, upper_borel, upper_unitriangular


def fixed_space_dimension(table: CharacterTable, chi, subgroup) -> Fraction:
    """dim of the vectors fixed by ``subgroup``: (1/|H|) sum_{h in H} chi(h)."""
    s = Cyclotomic(table.N, {})
    for h in subgroup:
        s = s + table.value(chi, h)
    v = s.rational_integer()
    if v is None:
        raise ArithmeticError("fixed-space trace is not rational")
    return Fraction(v, len(subgroup))


def is_cuspidal(table: CharacterTable, chi, radicals) -> bool:
    """No nonzero vectors fixed by the unipotent radical of any proper standard parabolic.

    Vanishing of sum_{u in U_P} chi(gu) for all g is equivalent to the
    U_P-fixed subspace being zero, whose dimension is the trace of the averaging
    projector; the maximal parabolics suffice since their radicals are the smallest.
    """
    return all(fixed_space_dimension(table, chi, U) == 0 for U in radicals)


def cuspidal_characters(table: CharacterTable, radicals=None):
    G = table.group
    if radicals is None:
        radicals = maximal_unipotent_radicals(G)
    return [chi for chi in table.characters if is_cuspidal(table, chi, radicals)]


def dl_degree(n: int, q: int, w=None) -> int:
    datum = build_root_system("A%d" % (n - 1))
    if w is None:
        w = coxeter_element(datum)
    return dl_cuspidal_degree_poly(datum, w)(q)


def identify_dl_cuspidals(table: CharacterTable, w=None):
    """Cuspidal characters of the Deligne-Lusztig degree for the torus class w (Coxeter by default).

    All qualifying characters are kept.  An empty list means q is too small
    for characters in general position to exist.
    """
    G = table.group
    d = dl_degree(G.n, G.q, w)
    return [chi for chi in cuspidal_characters(table) if chi[0].rational_integer() == d]


def is_unipotent(G: MatrixGroup, g) -> bool:
    p = G.F.p
    o = G.element_order(g)
    while o % p == 0:
        o //= p
    return o == 1


def semisimple_part(G: MatrixGroup, g):
    """g_s = g^a with a = 1 mod the p'-part of the order and a = 0 mod its p-part."""
    p = G.F.p
    o = G.element_order(g)
    pk = 1
    while o % (pk * p) == 0:
        pk *= p
    m = o // pk
    if m == 1:
        return G.identity
    if pk == 1:
        return g
    a = pk * pow(pk, -1, m) % o
    return G.power(g, a)


def green_values(table: CharacterTable, chi) -> dict:
    """Q(u) = chi(u) on unipotent classes, as integers (class index -> value)."""
    G = table.group
    C = table.classes
    out = {}
    for i, rep in enumerate(C.reps):
        if is_unipotent(G, rep):
            v = chi[i].rational_integer()
            if v is None:
                raise ArithmeticError("Green value on class %d is not a rational integer: %r" % (i, chi[i]))
            out[i] = v
    if out[C.class_of[G.identity]] != chi[0].rational_integer():
        raise AssertionError("Q(1) differs from the degree")
    return out


def green_square_sum(table: CharacterTable, chi, U=None) -> int:
    """sum over the upper unitriangular group of Q(u)^2."""
    G = table.group
    if U is None:
        U = upper_unitriangular(G)
    Q = green_values(table, chi)
    return sum(Q[table.classes.class_of[u]] ** 2 for u in U)


def central_character(table: CharacterTable, chi) -> dict:
    """z -> chi(z)/chi(1) on the scalar matrices, as exact cyclotomics keyed by the element."""
    G = table.group
    d = chi[0].rational_integer()
    out = {}
    for z in G.center():
        v = table.value(chi, z)
        # chi(z) = d * omega(z); recover omega by dividing the coefficients
        if any(c % d for c in v.terms.values()):
            raise ArithmeticError("central value is not d times a root of unity")
        out[z] = Cyclotomic(v.N, {k: c // d for k, c in v.terms.items()})
    return out


def same_central_character(table, chi1, chi2) -> bool:
    a, b = central_character(table, chi1), central_character(table, chi2)
    return all(a[z] == b[z] for z in a)


def borel_restriction_check(table: CharacterTable, chi1, chi2, B=None) -> bool:
    """chi1 = chi2 pointwise on B; also asserts vanishing at elements with non-central semisimple part."""
    G = table.group
    if B is None:
        B = upper_borel(G)
    C = table.classes
    for b in B:
        i = C.class_of[b]
        if not is_scalar(G.n, semisimple_part(G, b)):
            for chi in (chi1, chi2):
                if not chi[i].is_zero():
                    raise AssertionError("DL cuspidal does not vanish at %s" % (b,))
        elif not chi1[i] == chi2[i]:
            return False
    return True


def self_intertwining_on_borel(table: CharacterTable, chi, B=None) -> Fraction:
    """<chi, chi>_B by the exact class sum over B."""
    G = table.group
    if B is None:
        B = upper_borel(G)
    C = table.classes
    s = Cyclotomic(table.N, {})
    counts = {}
    for b in B:
        i = C.class_of[b]
        counts[i] = counts.get(i, 0) + 1
    for i, k in counts.items():
        s = s + chi[i] * chi[i].conjugate() * k
    v = s.rational_integer()
    if v is None:
        raise ArithmeticError("self-intertwining number is not rational")
    return Fraction(v, len(B))


def self_intertwining_formula(table: CharacterTable, chi, B=None, U=None) -> Fraction:
    """|Z| / |B| * sum_{u in U} Q(u)^2, the closed form the direct sum should match."""
    G = table.group
    if B is None:
        B = upper_borel(G)
    return Fraction(len(G.center()) * green_square_sum(table, chi, U), len(B))


def green_square_sum_closed_form(n: int, q: int) -> int:
    """q^4 (q-1)^2 for SL(3, q) and q (q-1) for SL(2, q)."""
    if n == 3:
        return q**4 * (q - 1) ** 2
    if n == 2:
        return q * (q - 1)
    raise ValueError(n)


def sl_center_order(n, q):
    return math.gcd(n, q - 1)
