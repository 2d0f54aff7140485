from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from depthzero import lp
from depthzero.apartment import fundamental_alcove_vertices
from depthzero.qpoly import Q, QPolynomial
from depthzero.rootdata import build_root_system
from depthzero.stabilizers import (
    PolytopeOmega,
    alcove_samples,
    f_omega_points,
    f_omega_polytope,
    gxromega_failure_witness,
    includes,
    index_qpoly,
    interior_check,
    moy_prasad_function,
    omega_max,
    sample_points,
    segment_exponents,
    verify_gxromega,
)

A1 = build_root_system("A1")
A2 = build_root_system("A2")
G2 = build_root_system("G2")
DATA = {s: build_root_system(s) for s in ("A1", "A2", "C2", "B2", "G2", "A1+A1", "C3")}

rationals = st.fractions(min_value=-3, max_value=3, max_denominator=6)
radii = st.fractions(min_value=0, max_value=3, max_denominator=4)


def points_of(rank):
    return st.tuples(*[rationals] * rank)


def test_points_examples():
    assert set(f_omega_points(A2, [(0, 0)]).exponents.values()) == {0}
    f = segment_exponents(A2, (0, 0), (1, 1))
    assert [f[a] for a in [(1, 0), (0, 1), (1, 1)]] == [0, 0, 0]
    assert [f[a] for a in [(-1, 0), (0, -1), (-1, -1)]] == [1, 1, 2]
    iw = f_omega_points(A2, fundamental_alcove_vertices(A2))
    assert all(iw[a] == (0 if A2.is_positive(a) else 1) for a in A2.roots)


@pytest.mark.parametrize("spec", ["A1", "A2", "C2", "B2", "A1+A1", "C3"])
def test_polytope_all_reaches_radius(spec):
    D = DATA[spec]
    x = (0,) * D.rank
    for r in (F(1, 2), F(1), F(2)):
        om = PolytopeOmega(x, r, "all")
        assert all(omega_max(D, om, a) == r for a in D.roots)


def test_g2_short_roots_fall_short():
    om = PolytopeOmega((0, 0), F(1), "all")
    for a in G2.roots:
        want = 1 if a in G2.long_roots else F(2, 3)
        assert omega_max(G2, om, a) == want
    om = PolytopeOmega((0, 0), F(1), "short")
    assert all(omega_max(G2, om, a) == 2 for a in G2.long_roots)


@pytest.mark.parametrize("spec", ["A2", "C2", "G2"])
def test_polytope_radius_zero(spec):
    D = DATA[spec]
    for x in fundamental_alcove_vertices(D) + sample_points(D, 3, seed=1):
        got = f_omega_polytope(D, PolytopeOmega(x, 0, "all"))
        assert got.exponents == f_omega_points(D, [x]).exponents


def test_moy_prasad_examples():
    assert set(moy_prasad_function(A2, (0, 0), 0).exponents.values()) == {0}
    f = moy_prasad_function(A1, (0,), 1)
    assert f[(1,)] == 1 and f[(-1,)] == 1 and f.torus_level == 1
    C2 = DATA["C2"]
    for x in fundamental_alcove_vertices(C2):
        g = moy_prasad_function(C2, x, 0, plus=True)
        assert all(g[a] == F(-C2.pair(a, x)).__floor__() + 1 for a in C2.roots)
        assert g.torus_level == 1
    with pytest.raises(ValueError):
        moy_prasad_function(A1, (0,), -1)


def test_includes_examples():
    f = moy_prasad_function(A2, (F(1, 3), 0), 1)
    assert includes(f, f)
    assert includes(f, moy_prasad_function(A2, (F(1, 3), 0), 0))
    poly = f_omega_polytope(A2, PolytopeOmega((0, 0), 1, "all"))
    mp = moy_prasad_function(A2, (0, 0), 1).root_part()
    assert includes(poly, mp) and includes(mp, poly)
    with pytest.raises(ValueError):
        includes(f, moy_prasad_function(A1, (0,), 1))


def test_index_examples():
    f = moy_prasad_function(A2, (0, 0), 1)
    assert index_qpoly(f, f) == QPolynomial(1)
    iw = f_omega_points(A2, fundamental_alcove_vertices(A2))
    assert index_qpoly(segment_exponents(A2, (0, 0), (1, 1)), iw) == Q
    sub = moy_prasad_function(A1, (0,), 2).root_part()
    sup = moy_prasad_function(A1, (0,), 1).root_part()
    assert index_qpoly(sub, sup) == Q**2
    with pytest.raises(ValueError):
        index_qpoly(sup, sub)
    with pytest.raises(ValueError):
        index_qpoly(moy_prasad_function(A1, (0,), 2), sup)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["A2", "C2", "G2"]), st.data())
def test_includes_is_a_partial_order(spec, data):
    D = DATA[spec]
    fs = [moy_prasad_function(D, data.draw(points_of(D.rank)), data.draw(radii)).root_part() for _ in range(3)]
    a, b, c = fs
    assert includes(a, a)
    if includes(a, b) and includes(b, c):
        assert includes(a, c)
    if includes(a, b) and includes(b, a):
        assert a.exponents == b.exponents


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["A1", "A2", "C2", "G2", "A1+A1"]), st.data())
def test_index_chain_multiplicative(spec, data):
    D = DATA[spec]
    x = data.draw(points_of(D.rank))
    r = sorted(data.draw(st.lists(radii, min_size=3, max_size=3)), reverse=True)
    f = [moy_prasad_function(D, x, t).root_part() for t in r]
    assert index_qpoly(f[0], f[2]) == index_qpoly(f[0], f[1]) * index_qpoly(f[1], f[2])


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["A2", "C2", "G2"]), st.sampled_from(["all", "long", "short"]), st.data())
def test_simplex_matches_vertex_enumeration(spec, flavor, data):
    D = DATA[spec]
    om = PolytopeOmega(data.draw(points_of(D.rank)), data.draw(radii), flavor)
    for a in D.positive_roots:
        assert omega_max(D, om, a, "simplex") == omega_max(D, om, a, "vertices")


def test_lp_errors():
    with pytest.raises(lp.Infeasible):
        lp.maximize([1], [[1]], [-1])
    with pytest.raises(lp.Unbounded):
        lp.maximize([1, 0], [[0, 1]], [1])
    assert lp.maximize([1, 1], [[1, 0], [0, 1]], [2, 3])[0] == 5


def test_gxromega_examples():
    for x in sample_points(A2, 5, seed=3):
        rep = verify_gxromega(A2, x, 1)
        assert (rep["incl_short"], rep["incl_long"], rep["equality"]) == (True, True, True)
    pts = fundamental_alcove_vertices(G2) + alcove_samples(G2, 6)
    w = gxromega_failure_witness(G2, pts, (F(1, 2), F(1), F(3, 2), F(2)))
    assert w is not None
    x, r, rep = w
    assert rep["incl_short"] and rep["incl_long"] and not rep["equality"]
    assert all(a in G2.short_roots for a in rep["defect_roots"])
    for r in (F(5), F(17, 2)):
        rep = verify_gxromega(DATA["C2"], (F(1, 3), F(1, 5)), r)
        assert rep["incl_short"] and rep["incl_long"]


@pytest.mark.parametrize("spec", ["A2", "C2", "A1+A1"])
def test_interior_gives_pro_unipotent(spec):
    D = DATA[spec]
    verts = fundamental_alcove_vertices(D)
    bary = tuple(sum(c) / len(verts) for c in zip(*verts))
    assert interior_check(D, verts, bary)
    plus = moy_prasad_function(D, bary, 0, plus=True).root_part()
    assert includes(f_omega_points(D, verts), plus)
    assert not interior_check(D, [verts[0]], verts[0])
