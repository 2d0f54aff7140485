"""
The lower unitriangular group U_op of SL(3, q) is a Heisenberg group of
order q^3.  We restrict DL cuspidals to it, and induce its characters to
the lower Borel B_op.
"""

from __future__ import annotations

from fractions import Fraction

from .chartable import CharacterTable, character_table
from .cyclotomic import Cyclotomic
from .dl import identify_dl_cuspidals
from .fields import field
from .groups import MatrixGroup, diagonal, elementary

BOP_Q = (2, 3, 4, 5)


def lower_groups(q: int):
    """(U_op, B_op, T) inside SL(3, q), built from generators so q = 5 needs no SL(3,5)."""
    F = field(q)
    xi = F.generator
    scal = sorted({1, xi})
    u_gens = [elementary(3, i, j, t) for (i, j) in ((2, 1), (3, 2), (3, 1)) for t in scal]
    if F.f > 1:
        u_gens += [elementary(3, i, j, F.power(xi, k)) for (i, j) in ((2, 1), (3, 2)) for k in range(F.f)]
    t_gens = [diagonal(3, (xi, F.inv[xi], 1)), diagonal(3, (1, xi, F.inv[xi]))] if q > 2 else []
    U = MatrixGroup.from_generators(3, F, u_gens, "U_op(%d)" % q)
    B = MatrixGroup.from_generators(3, F, u_gens + t_gens, "B_op(%d)" % q)
    T = [diagonal(3, (a, b, F.inv[F.mul[a][b]])) for a in F.units() for b in F.units()]
    if len(U) != q**3 or len(B) != q**3 * (q - 1) ** 2:
        raise AssertionError("wrong orders for U_op, B_op")
    return U, B, T


def additive_character(q: int, a: int):
    """x -> zeta_p^{Tr(a x)} as a function to Cyclotomic."""
    F = field(q)
    p = F.p
    return lambda x: Cyclotomic.root(F.trace(F.mul[a][x]), p)


def linear_datum(q, a, b):
    """psi_{-alpha} (x) psi_{-beta} (x) 1 on U_op: depends on the (2,1) and (3,2) entries."""
    pa, pb = additive_character(q, a), additive_character(q, b)
    return lambda u: pa(u[3]) * pb(u[7])


def heisenberg_character(q, c):
    """Stone-von Neumann character with central character psi_c on the (3,1) entry."""
    pc = additive_character(q, c)

    def chi(u):
        if u[3] == 0 and u[7] == 0:
            return pc(u[6]) * q
        return Cyclotomic(1, {})

    return chi


def _classify_linear(table_U: CharacterTable, sigma, q):
    F = field(q)
    on_a = [table_U.value(sigma, elementary(3, 2, 1, t)) for t in F.elements()]
    on_b = [table_U.value(sigma, elementary(3, 3, 2, t)) for t in F.elements()]
    nontriv_a = any(not v == 1 for v in on_a)
    nontriv_b = any(not v == 1 for v in on_b)
    return nontriv_a, nontriv_b


def heisenberg_restriction_profile(table_G: CharacterTable, chi, table_U: CharacterTable | None = None) -> list[dict]:
    """<Res chi, sigma>_{U_op} for every irreducible sigma of U_op."""
    G = table_G.group
    q = G.q
    if table_U is None:
        U, _, _ = lower_groups(q)
        table_U = character_table(U)
    U = table_U.group
    rows = []
    for sigma in table_U.characters:
        s = Cyclotomic(table_G.N, {})
        for u in U:
            s = s + table_G.value(chi, u) * table_U.value(sigma, u).conjugate()
        v = s.rational_integer()
        if v is None or v % len(U):
            raise ArithmeticError("multiplicity is not an integer")
        d = sigma[0].rational_integer()
        if d == 1:
            na, nb = _classify_linear(table_U, sigma, q)
            kind = "linear, both nontrivial" if na and nb else "linear, some factor trivial"
        elif d == q:
            kind = "Stone-von Neumann"
        else:
            raise AssertionError("U_op has an irreducible of degree %d" % d)
        rows.append({"degree": d, "kind": kind, "multiplicity": v // len(U)})
    return rows


def profile_matches(rows, q) -> bool:
    expected = {"Stone-von Neumann": q - 1, "linear, both nontrivial": 1, "linear, some factor trivial": 0}
    counts = {}
    for r in rows:
        if r["multiplicity"] != expected[r["kind"]]:
            return False
        counts[r["kind"]] = counts.get(r["kind"], 0) + 1
    return counts.get("Stone-von Neumann") == q - 1 and counts.get("linear, both nontrivial") == (q - 1) ** 2


def default_profile(q: int, table_G: CharacterTable | None = None):
    """Profiles of every identified DL cuspidal of SL(3, q)."""
    from .groups import build_sl

    tG = table_G if table_G is not None else character_table(build_sl(3, q))
    U, _, _ = lower_groups(q)
    tU = character_table(U)
    return [heisenberg_restriction_profile(tG, chi, tU) for chi in identify_dl_cuspidals(tG)]


# ---------------------------------------------------------------------------


def induced_from_normal(B: MatrixGroup, U: MatrixGroup, T, phi, classes_B):
    """Ind_U^B phi on class representatives of B, for phi a class function on U and B = T U."""
    out = []
    for g in classes_B.reps:
        if g not in U.index:
            out.append(Cyclotomic(1, {}))
            continue
        s = Cyclotomic(1, {})
        for t in T:
            s = s + phi(B.mul(B.mul(t, g), B.inv(t)))
        out.append(s)
    return out


def borel_op_induced_decomposition(q: int, table_B: CharacterTable | None = None) -> dict:
    if q not in BOP_Q:
        raise ValueError("q must be one of %s" % (BOP_Q,))
    U, B, T = lower_groups(q)
    if table_B is None:
        table_B = character_table(B)
    C = table_B.classes
    F = field(q)
    unit = F.generator if q > 2 else 1
    ind_lin = induced_from_normal(B, U, T, linear_datum(q, unit, unit), C)
    ind_h = induced_from_normal(B, U, T, heisenberg_character(q, unit), C)

    def inner(a, b):
        s = Cyclotomic(1, {})
        for i, size in enumerate(C.sizes):
            s = s + a[i] * b[i].conjugate() * size
        v = s.rational_integer()
        if v is None:
            raise ArithmeticError("inner product is not rational")
        return Fraction(v, len(B))

    lin_deg = ind_lin[0].rational_integer()
    h_deg = ind_h[0].rational_integer()
    constituents = []
    for chi in table_B.characters:
        m = inner(ind_h, chi)
        if m:
            constituents.append((chi[0].rational_integer(), int(m)))
    lin_norm = inner(ind_lin, ind_lin)
    return {
        "q": q,
        "linear_degree": lin_deg,
        "linear_norm": lin_norm,
        "linear_irreducible": lin_norm == 1,
        "heisenberg_degree": h_deg,
        "heisenberg_norm": inner(ind_h, ind_h),
        "heisenberg_constituents": constituents,
        "expected_linear_degree": (q - 1) ** 2,
        "expected_constituent_degree": q * (q - 1),
        # with 3 | q - 1 the centre of SL(3, q) lies in T and fixes every character of U_op
        "hypothesis_3_coprime": (q - 1) % 3 != 0,
        "ok": lin_norm == 1
        and lin_deg == (q - 1) ** 2
        and len(constituents) == q - 1
        and all(d == q * (q - 1) and m == 1 for d, m in constituents),
    }
