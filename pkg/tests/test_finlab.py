import itertools
import json

import pytest

from depthzero.finlab.chartable import (
    CharacterTable,
    cached_character_table,
    character_table,
    dixon_primes,
    load_cached_table,
)
from depthzero.finlab.cyclotomic import Cyclotomic
from depthzero.finlab.dl import (
    borel_restriction_check,
    central_character,
    cuspidal_characters,
    green_square_sum,
    green_values,
    identify_dl_cuspidals,
    is_unipotent,
    same_central_character,
    self_intertwining_formula,
    self_intertwining_on_borel,
    semisimple_part,
)
from depthzero.finlab.fields import GF, ExtensionField, factor_prime_power, field
from depthzero.finlab.groups import (
    GuardExceeded,
    build_sl,
    cyclic_group,
    lower_borel,
    maximal_unipotent_radicals,
    sl_order,
    upper_borel,
    upper_unitriangular,
)
from depthzero.finlab.heisenberg import (
    borel_op_induced_decomposition,
    heisenberg_restriction_profile,
    lower_groups,
    profile_matches,
)
from depthzero.finlab.level2 import (
    IndexMismatch,
    ResidueRingMatrixGroup,
    degenerate_double_cosets,
    sl3_level2_double_cosets,
)
from depthzero.finlab.tori import coxeter_torus, torus_parabolic_report


# fields and cyclotomics


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16])
def test_field_axioms(q):
    F = GF(q)
    F._check()
    g = F.generator
    assert len({F.power(g, k) for k in range(q - 1)}) == q - 1
    for a in F.elements():
        for b in F.elements():
            assert F.trace(F.add[a][b]) == (F.trace(a) + F.trace(b)) % F.p


def test_factor_prime_power():
    assert factor_prime_power(8) == (2, 3)
    assert factor_prime_power(9) == (3, 2)
    for bad in (0, 1, 6, 12):
        with pytest.raises(ValueError):
            factor_prime_power(bad)


def test_extension_field_multiplication():
    F = field(2)
    E = ExtensionField(F, 3)
    elems = [a for a in E.elements() if any(a)]
    assert len(elems) == 7
    prods = {E.mul(elems[0], b) for b in elems}
    assert len(prods) == 7


def test_cyclotomic_arithmetic():
    z = Cyclotomic.root(1, 3)
    assert (Cyclotomic.integer(1, 3) + z + z * z).is_zero()
    assert z * z * z == 1
    assert (z + z.conjugate()).rational_integer() == -1
    assert Cyclotomic.root(1, 4) * Cyclotomic.root(1, 4) == -1
    assert Cyclotomic.root(2, 6) == z
    assert Cyclotomic.integer(5).rational_integer() == 5
    assert z.rational_integer() is None


# groups


@pytest.mark.parametrize("n,q", [(2, 2), (2, 3), (2, 4), (2, 5), (2, 7), (3, 2), (3, 3)])
def test_sl_orders(n, q):
    G = build_sl(n, q)
    assert G.order == sl_order(n, q)
    C = G.classes
    assert sum(C.sizes) == G.order


def test_sl_examples():
    assert build_sl(2, 3).order == 24
    assert build_sl(3, 2).order == 168
    assert build_sl(3, 3).order == 5616


def test_guards():
    with pytest.raises(GuardExceeded):
        build_sl(2, 13)
    with pytest.raises(GuardExceeded):
        build_sl(3, 5)
    with pytest.raises(GuardExceeded):
        build_sl(4, 2)


def test_borel_orders():
    G = build_sl(3, 3)
    assert len(upper_borel(G)) == 27 * 4
    assert len(lower_borel(G)) == 27 * 4
    assert len(upper_unitriangular(G)) == 27
    assert sorted(len(U) for U in maximal_unipotent_radicals(G)) == [9, 9]


# character tables


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7, 12])
def test_cyclic_tables(n):
    T = character_table(cyclic_group(n))
    assert len(T) == n
    assert T.degrees() == [1] * n
    for chi in T.characters:
        for v in chi:
            p = Cyclotomic.integer(1, n)
            for _ in range(n):
                p = p * v
            assert p == 1
    assert T.check() and T.column_check()


@pytest.mark.parametrize("n,q", [(2, 3), (2, 4), (2, 5), (2, 7), (3, 2), (3, 3)])
def test_sl_tables(table, n, q):
    T = table(n, q)
    assert T.check() and T.column_check()
    assert sum(d * d for d in T.degrees()) == sl_order(n, q)


def test_table_examples(table):
    assert len(table(2, 3)) == 7
    assert sorted(table(3, 2).degrees()) == [1, 3, 3, 6, 7, 8]
    assert sorted(table(3, 3).degrees()) == [1, 12, 13, 16, 16, 16, 16, 26, 26, 26, 27, 39]


@pytest.mark.parametrize("q", [2, 3])
def test_borel_and_radical_tables(q):
    U, B, _ = lower_groups(q)
    for H in (U, B):
        T = character_table(H)
        assert T.check() and T.column_check()
        assert sum(d * d for d in T.degrees()) == len(H)


def test_dixon_primes():
    ps = list(itertools.islice(dixon_primes(12, 5616), 3))
    assert len(ps) == 3 and all(p % 12 == 1 and p * p > 4 * 5616 for p in ps)


def test_cache_round_trip(tmp_path):
    G = build_sl(2, 3)
    path = tmp_path / "tables.json"
    T = cached_character_table(G, path)
    assert path.exists() and G.name in json.loads(path.read_text())
    T2 = load_cached_table(G, path)
    assert T2 is not None
    assert all(a == b for x, y in zip(T.characters, T2.characters) for a, b in zip(x, y))
    T3 = CharacterTable.from_json(G, T.to_json())
    assert T3.check()


# Deligne-Lusztig cuspidals


def test_trivial_never_cuspidal(table):
    for n, q in ((2, 3), (3, 2), (3, 3)):
        T = table(n, q)
        triv = next(chi for chi in T.characters if all(v == 1 for v in chi))
        assert triv not in cuspidal_characters(T)


def test_cuspidal_examples(table):
    assert any(chi[0].rational_integer() == 2 for chi in cuspidal_characters(table(2, 3)))
    assert any(chi[0].rational_integer() == 16 for chi in cuspidal_characters(table(3, 3)))
    dl = identify_dl_cuspidals(table(3, 3))
    assert dl and all(chi[0].rational_integer() == 16 for chi in dl)
    assert {chi[0].rational_integer() for chi in identify_dl_cuspidals(table(2, 5))} == {4}
    assert {chi[0].rational_integer() for chi in identify_dl_cuspidals(table(3, 2))} == {3}


@pytest.mark.parametrize("n,q", [(2, 3), (2, 5), (3, 2), (3, 3)])
def test_green_values(table, n, q):
    T = table(n, q)
    G = T.group
    ident = T.classes.class_of[G.identity]
    for chi in identify_dl_cuspidals(T):
        Qv = green_values(T, chi)
        assert Qv[ident] == chi[0].rational_integer()
        if n == 2:
            assert all(v == -1 for i, v in Qv.items() if i != ident)


def test_green_square_sums(table):
    for q, want in ((2, 16), (3, 324)):
        T = table(3, q)
        assert {green_square_sum(T, chi) for chi in identify_dl_cuspidals(T)} == {want}


def test_unipotent_and_semisimple_parts(table):
    T = table(3, 3)
    G = T.group
    for g in list(G)[:300]:
        s = semisimple_part(G, g)
        u = G.mul(G.inv(s), g)
        assert is_unipotent(G, u)
        assert G.mul(s, u) == G.mul(u, s)


def test_borel_restriction(table):
    for q in (2, 3):
        T = table(3, q)
        dl = identify_dl_cuspidals(T)
        for a in dl:
            assert borel_restriction_check(T, a, a)
            for b in dl:
                if same_central_character(T, a, b):
                    assert borel_restriction_check(T, a, b)
    T = table(2, 5)
    dl = identify_dl_cuspidals(T)
    pairs = [(a, b) for a in dl for b in dl if not same_central_character(T, a, b)]
    assert pairs and not any(borel_restriction_check(T, a, b) for a, b in pairs)


def test_self_intertwining(table):
    for (n, q), want in {(2, 3): 2, (2, 5): 2, (3, 2): 2, (3, 3): 3}.items():
        T = table(n, q)
        for chi in identify_dl_cuspidals(T):
            assert self_intertwining_on_borel(T, chi) == want
            assert self_intertwining_formula(T, chi) == want


def test_central_characters(table):
    T = table(2, 5)
    for chi in identify_dl_cuspidals(T):
        omega = central_character(T, chi)
        assert len(omega) == 2 and all(v * v == 1 for v in omega.values())


# tori, Heisenberg restriction, induction to B_op, level two


@pytest.mark.parametrize("q,z", [(2, 1), (3, 1), (4, 3)])
def test_coxeter_torus(q, z):
    F, T = coxeter_torus(q)
    assert len(T) == q * q + q + 1
    r = torus_parabolic_report(q)
    assert r["torus_order"] == q * q + q + 1
    assert r["intersections_central"] and r["no_conjugate_parabolic_meets"]
    assert max(r["intersection_orders"].values()) == z


@pytest.mark.parametrize("q", [2, 3])
def test_heisenberg_profile(table, q):
    T = table(3, q)
    U, _, _ = lower_groups(q)
    tU = character_table(U)
    for chi in identify_dl_cuspidals(T):
        rows = heisenberg_restriction_profile(T, chi, tU)
        assert profile_matches(rows, q)
        svn = [r for r in rows if r["kind"] == "Stone-von Neumann"]
        lin = [r for r in rows if r["kind"] == "linear, both nontrivial"]
        assert len(svn) == q - 1 and all(r["multiplicity"] == q - 1 for r in svn)
        assert len(lin) == (q - 1) ** 2 and all(r["multiplicity"] == 1 for r in lin)
        assert sum(r["degree"] * r["multiplicity"] for r in rows) == (q - 1) * (q * q - 1)


@pytest.mark.parametrize("q", [3, 5])
def test_bop_decomposition(q):
    r = borel_op_induced_decomposition(q)
    assert r["ok"] and r["hypothesis_3_coprime"]
    assert r["linear_degree"] == (q - 1) ** 2 and r["linear_irreducible"]
    assert r["heisenberg_constituents"] == [(q * (q - 1), 1)] * (q - 1)
    assert r["heisenberg_degree"] == (q - 1) ** 2 * q


def test_bop_outside_hypothesis():
    r = borel_op_induced_decomposition(4)
    assert not r["hypothesis_3_coprime"]
    assert not r["linear_irreducible"]
    with pytest.raises(ValueError):
        borel_op_induced_decomposition(7)


@pytest.mark.slow
def test_level2_double_cosets():
    r = sl3_level2_double_cosets(3, verify_subgroup_order=True)
    assert r["index"] == 156 == 3 * 52
    assert r["double_cosets"] == 7
    assert r["stabiliser_equals_subgroup"] and r["reduction_surjective"]
    assert sum(r["orbit_sizes"]) == 156
    assert degenerate_double_cosets(3) == 1


def test_level2_errors():
    with pytest.raises(ValueError):
        sl3_level2_double_cosets(7)
    with pytest.raises(ValueError):
        ResidueRingMatrixGroup(3, 2)
    assert issubclass(IndexMismatch, AssertionError)
