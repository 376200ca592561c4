import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from og6lattice import _linalg as la
from og6lattice import cones
from og6lattice.claims import random_picard_instance
from og6lattice.cones import (BK_WALLS, KAHLER_WALLS, NOT_A_WALL, NOT_NEGATIVE,
                              STABLY_PRIME_EXCEPTIONAL, WALL_NOT_EXCEPTIONAL, PicardData,
                              birational_kahler_closure_query, brute_force_walls,
                              classify_divisor, detect_lagrangian, enumerate_separating_walls,
                              isotropic_div2_scan, kahler_chamber_query, proof_form, short_vectors)
from og6lattice.errors import (NotHyperbolic, NotIsotropic, NotPositive, NotPrimitive,
                               ReferenceOnWall, WrongLattice, ZeroVector)
from og6lattice.lattice import standard_lattice

from conftest import EPS, OG6, ZETA, og6

E1_PLUS_F1 = (1, 1, 0, 0, 0, 0, 0, 0)
E1_MINUS_F1 = (1, -1, 0, 0, 0, 0, 0, 0)
EPS_V = (0, 0, 0, 0, 0, 0, 0, 1)


# classification

@pytest.mark.parametrize("v, kind, n, d", [
    (og6((ZETA, 1), (EPS, 1)), STABLY_PRIME_EXCEPTIONAL, -4, 2),
    (og6((EPS, 1)), STABLY_PRIME_EXCEPTIONAL, -2, 2),
    (og6((ZETA, 1)), STABLY_PRIME_EXCEPTIONAL, -2, 2),
    (og6((0, 1), (1, -1)), WALL_NOT_EXCEPTIONAL, -2, 1),
    (og6((0, 2), (1, -1)), NOT_A_WALL, -4, 1),
    (og6((0, 1), (1, 1)), NOT_NEGATIVE, 2, 1),
    (og6((0, 1)), NOT_NEGATIVE, 0, 1),
])
def test_classify_examples(v, kind, n, d):
    c = classify_divisor(v)
    assert (c.kind, c.norm, c.div) == (kind, n, d)


def test_classify_errors():
    with pytest.raises(NotPrimitive):
        classify_divisor(og6((EPS, 2)))
    with pytest.raises(ZeroVector):
        classify_divisor(OG6.zero())
    with pytest.raises(WrongLattice):
        classify_divisor(standard_lattice(3, 0).vector((1, 0, 0, 0, 0, 0)))


@pytest.mark.parametrize("a", range(1, 6))
def test_proof_forms(a):
    A, B, C, D = (proof_form(x, a) for x in "ABCD")
    assert (A.norm(), cones.classify_divisor(A).div) == (-2 * a, 1)
    assert (B.norm(), classify_divisor(B).div) == (-8 * a - 4, 2)
    assert (C.norm(), classify_divisor(C).div) == (-8 * a - 2, 2)
    assert (D.norm(), classify_divisor(D).div) == (-8 * a - 2, 2)
    for v in (B, C, D):
        assert classify_divisor(v).kind == NOT_A_WALL
    # a e1 - f1 needs a > 1; at a = 1 it is e1 - f1, a wall that is not exceptional
    assert classify_divisor(A).kind == (WALL_NOT_EXCEPTIONAL if a == 1 else NOT_A_WALL)


@given(st.integers(-20, 4), st.integers(1, 4))
def test_classification_depends_only_on_norm_and_div(n, d):
    kind, _ = cones.classify_norm_div(n, d)
    if n >= 0:
        assert kind == NOT_NEGATIVE
    elif (n, d) in KAHLER_WALLS:
        assert kind in (STABLY_PRIME_EXCEPTIONAL, WALL_NOT_EXCEPTIONAL)
        assert (kind == STABLY_PRIME_EXCEPTIONAL) == ((n, d) in BK_WALLS)
    else:
        assert kind == NOT_A_WALL


# Picard data and short vectors

def test_picard_data_checks():
    pic = PicardData((E1_PLUS_F1, E1_MINUS_F1))
    assert pic.gram == ((2, 0), (0, -2)) and not pic.saturated
    assert PicardData((E1_PLUS_F1, EPS_V)).saturated
    with pytest.raises(NotHyperbolic):
        PicardData((E1_MINUS_F1, EPS_V))
    with pytest.raises(ValueError):
        PicardData((E1_PLUS_F1, E1_PLUS_F1))


@given(st.lists(st.integers(-2, 2), min_size=2, max_size=2), st.integers(0, 12))
def test_short_vectors_match_box(shift, bound):
    p = ((2, 1), (1, 3))
    tau = tuple(Fraction(s, 3) for s in shift)
    got = sorted(short_vectors(p, tau, bound))
    want = []
    for z in product(range(-8, 9), repeat=2):
        y = tuple(a + b for a, b in zip(z, tau))
        if la.bilinear(p, y, y) <= bound:
            want.append(z)
    assert got == sorted(want)


# enumeration and chamber queries

def test_x_equals_k_gives_no_walls():
    pic = PicardData((E1_PLUS_F1, E1_MINUS_F1))
    en = enumerate_separating_walls(pic, (3, 1), (3, 1), KAHLER_WALLS)
    assert en.separating == () and en.through_x == ()
    assert kahler_chamber_query(pic, (3, 1), (3, 1)).in_chamber
    assert birational_kahler_closure_query(pic, (3, 1), (3, 1)).in_chamber


def test_reflected_class_is_separated_by_e1_minus_f1():
    pic = PicardData((E1_PLUS_F1, E1_MINUS_F1))
    k, x = (3, 1), (3, -1)          # x is k reflected in (e1 - f1)-perp
    en = enumerate_separating_walls(pic, x, k, {(-2, 1)})
    assert [w.ambient for w in en.separating] == [(-1, 1, 0, 0, 0, 0, 0, 0)]
    assert en == brute_force_walls(pic, x, k, {(-2, 1)}, box=20)
    # only a (-2, div 1) wall separates: inside the closure, outside the Kahler chamber
    assert not kahler_chamber_query(pic, x, k).in_chamber
    assert birational_kahler_closure_query(pic, x, k).in_chamber


def test_boundary_on_e1_minus_f1():
    pic = PicardData((E1_PLUS_F1, E1_MINUS_F1))
    rep = kahler_chamber_query(pic, (1, 0), (3, 1))
    assert rep.on_boundary and not rep.in_chamber and rep.separating_walls == ()
    assert [w.ambient for w in rep.walls_through_x] == [(-1, 1, 0, 0, 0, 0, 0, 0)]


def test_eps_wall_separates():
    pic = PicardData((E1_PLUS_F1, EPS_V))
    k, x = (2, 1), (2, -1)
    for query in (kahler_chamber_query, birational_kahler_closure_query):
        rep = query(pic, x, k)
        assert not rep.in_chamber
        assert any(abs(w.ambient[EPS]) == 1 and w.norm == -2 and w.div == 2 for w in rep.separating_walls)


def test_bk_closure_semantics():
    pic = PicardData((E1_PLUS_F1, EPS_V))
    rep = birational_kahler_closure_query(pic, (1, 0), (2, 1))
    assert rep.in_chamber and rep.on_boundary
    assert not kahler_chamber_query(pic, (1, 0), (2, 1)).in_chamber


def test_query_preconditions():
    pic = PicardData((E1_PLUS_F1, EPS_V))
    with pytest.raises(NotPositive):
        kahler_chamber_query(pic, (0, 1), (1, 0))
    with pytest.raises(NotPositive):
        kahler_chamber_query(pic, (-1, 0), (1, 0))
    with pytest.raises(ReferenceOnWall):
        kahler_chamber_query(pic, (2, 1), (1, 0))


def test_wall_sign_and_order():
    pic = PicardData((E1_PLUS_F1, EPS_V, (0, 0, 0, 0, 0, 0, 1, 0)))
    k, x = (5, 1, 2), (5, -2, -1)
    en = enumerate_separating_walls(pic, x, k, KAHLER_WALLS)
    assert en.separating
    for w in en.separating:
        assert pic.pair(w.coords, k) > 0 > pic.pair(w.coords, x)
    keys = [w.sort_key() for w in en.separating]
    assert keys == sorted(keys)
    assert en == brute_force_walls(pic, x, k, KAHLER_WALLS)


@pytest.mark.parametrize("seed", range(12))
def test_certified_matches_brute_force(seed):
    rng = random.Random(seed)
    pic, x, k = random_picard_instance(rng)
    for wall_types in (KAHLER_WALLS, BK_WALLS):
        assert enumerate_separating_walls(pic, x, k, wall_types) == brute_force_walls(pic, x, k, wall_types)


@pytest.mark.parametrize("seed", range(12))
def test_chamber_symmetry(seed):
    pic, x, k = random_picard_instance(random.Random(100 + seed))
    forward = kahler_chamber_query(pic, x, k)
    if forward.walls_through_x:
        return
    try:
        backward = kahler_chamber_query(pic, k, x)
    except ReferenceOnWall:
        return
    assert backward.in_chamber == forward.in_chamber
    assert {w.ambient for w in backward.separating_walls} == \
        {tuple(-c for c in w.ambient) for w in forward.separating_walls}


# lagrangian classes and the mod-8 scan

def test_lagrangian_examples():
    rep = detect_lagrangian(og6((0, 1)))
    assert rep.divisibility == 1 and rep.fiber_polarization == (1, 2, 2) and rep.base == "P3"
    assert rep.fibration_exists
    assert detect_lagrangian(og6((0, 3))).primitive_part == og6((0, 1)).coords
    with pytest.raises(NotIsotropic):
        detect_lagrangian(og6((0, 1), (1, 1)))
    with pytest.raises(ZeroVector):
        detect_lagrangian(OG6.zero())


@given(st.lists(st.integers(-2, 2), min_size=8, max_size=8))
def test_isotropic_classes_have_divisibility_one(c):
    v = OG6.vector(c)
    if v.is_zero() or v.norm() != 0:
        return
    assert detect_lagrangian(v).divisibility == 1


@pytest.mark.parametrize("box", [1, 2, 3])
def test_div2_scan(box):
    rep = isotropic_div2_scan(box)
    assert rep.scanned == (2 * box + 1) ** 8
    assert rep.isotropic == 0 and rep.supported_on_4_6 and rep.primitive_div2 > 0


def test_div2_scan_box_4():
    rep = isotropic_div2_scan(4)
    assert rep.isotropic == 0 and rep.supported_on_4_6


def test_div2_scan_rejects_empty_box():
    with pytest.raises(ValueError):
        isotropic_div2_scan(0)
