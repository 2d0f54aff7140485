from fractions import Fraction as F

import pytest

from depthzero.apartment import (
    affine_double_cosets_bruteforce,
    alcove_barycenter,
    chamber_of,
    fundamental_alcove_vertices,
    is_special,
    is_vertex,
    linear_stabilizer,
    local_root_system,
    parse_point,
    phi_dagger,
    upsilon,
)
from depthzero.mackey import xplus_enumerate, xplus_oracle_comparison
from depthzero.rootdata import build_root_system, weyl_group

A1 = build_root_system("A1")
A2 = build_root_system("A2")
C2 = build_root_system("C2")
ZERO2 = (0, 0)
C2_NONSPECIAL = (F(1, 2), F(1, 2))


def test_local_root_system_examples():
    L = local_root_system(A2, ZERO2)
    assert set(L.Phi_x_lin) == set(A2.roots)
    assert set(L.Delta_x) == set(A2.simple_roots)
    assert local_root_system(A2, alcove_barycenter(A2)).Phi_x_lin == ()
    # alpha short, beta long: Delta_x = {beta, 2 alpha + beta}
    assert set(local_root_system(C2, C2_NONSPECIAL).Delta_x) == {(0, 1), (2, 1)}


def test_special_examples():
    assert is_special(A2, ZERO2)
    assert not is_special(C2, C2_NONSPECIAL)
    assert C2.pair((1, 0), C2_NONSPECIAL) == F(1, 2)
    assert C2.pair((0, 1), C2_NONSPECIAL) == 0
    assert is_special(A2, A2.fundamental_coweight(0))
    assert {A2.pair(a, A2.fundamental_coweight(0)) for a in A2.roots} <= {-1, 0, 1}


def test_vertex_examples():
    assert is_vertex(A2, ZERO2)
    assert not is_vertex(A2, alcove_barycenter(A2))
    assert is_vertex(C2, C2_NONSPECIAL)


@pytest.mark.parametrize("spec", ["A1", "A2", "C2", "G2", "A1+A1", "B3"])
def test_alcove_vertices_are_vertices(spec):
    D = build_root_system(spec)
    verts = fundamental_alcove_vertices(D)
    assert len(verts) == 2 ** len(D.components) if spec == "A1+A1" else len(verts) == D.rank + 1
    assert all(is_vertex(D, v) for v in verts)


def test_upsilon_examples():
    assert [w.is_identity() for w in upsilon(A2, ZERO2)] == [True]
    assert len(upsilon(A2, alcove_barycenter(A2))) == 6
    assert len(upsilon(C2, C2_NONSPECIAL)) == 2


@pytest.mark.parametrize("spec", ["A2", "C2", "G2", "A1+A1"])
def test_upsilon_coset_count(spec):
    D = build_root_system(spec)
    for x in fundamental_alcove_vertices(D):
        assert len(upsilon(D, x)) * len(linear_stabilizer(D, x)) == len(weyl_group(D))


def test_phi_dagger_examples():
    assert set(phi_dagger(A2, ZERO2, ZERO2, (1, 1))) == set(A2.positive_roots)
    assert not phi_dagger(A2, ZERO2, ZERO2, ZERO2)
    interior = [e.ell for e in xplus_enumerate(C2, C2_NONSPECIAL, ZERO2, 2) if e.interior]
    ell = min(interior, key=lambda v: (sum(map(abs, v)), v))
    pd = set(phi_dagger(C2, C2_NONSPECIAL, ZERO2, ell))
    assert len(pd) == 4
    assert pd | {C2.neg(a) for a in pd} == set(C2.roots)
    for a in pd:
        for b in pd:
            s = tuple(u + v for u, v in zip(a, b))
            if s in C2.root_set:
                assert s in pd


@pytest.mark.parametrize("spec", ["A2", "C2", "A1+A1"])
def test_upsilon_partition(spec):
    D = build_root_system(spec)
    y = (0,) * D.rank
    for x in fundamental_alcove_vertices(D):
        for e in xplus_enumerate(D, x, y, 2):
            if e.interior:
                z = tuple(l + a - b for l, a, b in zip(e.ell, x, y))
                assert len(chamber_of(D, z, upsilon(D, x))) == 1


def test_bruteforce_examples():
    a1 = [c for c in affine_double_cosets_bruteforce(A1, (0,), (0,), 3) if c.window_translations]
    dominant = sorted(e.ell for e in xplus_enumerate(A1, (0,), (0,), 3))
    assert dominant == [(0,), (1,), (2,), (3,)]
    assert len(a1) == 4
    assert sorted(min(c.window_translations, key=lambda v: -v[0]) for c in a1) == dominant
    a2 = xplus_oracle_comparison(A2, ZERO2, ZERO2, 2)
    assert a2["ok"]
    # classes meeting the window <-> dominant ell whose W-orbit meets the window
    W = weyl_group(A2)
    orbit_hits = [e.ell for e in xplus_enumerate(A2, ZERO2, ZERO2, 6) if any(max(map(abs, w.act(e.ell))) <= 2 for w in W)]
    assert a2["classes"] == len(orbit_hits) == 9
    single = [c for c in affine_double_cosets_bruteforce(A2, ZERO2, ZERO2, 0) if c.window_translations]
    assert len(single) == 1


def test_bruteforce_guards():
    with pytest.raises(ValueError):
        affine_double_cosets_bruteforce(A1, (0,), (0,), 7)
    with pytest.raises(ValueError):
        affine_double_cosets_bruteforce(A2, alcove_barycenter(A2), ZERO2, 1)


def test_parse_point():
    assert parse_point("1/2,1/2", 2) == C2_NONSPECIAL
    assert parse_point("", 2) == (0, 0)
    with pytest.raises(ValueError):
        parse_point("1,2,3", 2)
    with pytest.raises(ValueError):
        parse_point("a,b", 2)
