from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from og6lattice import _linalg as la
from og6lattice.errors import (Degenerate, LatticeMismatch, NotEven, NotIsotropic,
                               NotPrimitive, NotSymmetric, ZeroVector)
from og6lattice.lattice import (RationalVector, disc_class, discriminant_group, divisibility,
                                is_primitive, make_lattice, orthogonal_complement,
                                overlattice_from_isotropic, pair, primitive_part, q_value,
                                standard_lattice)

from conftest import EPS, OG6, ZETA, og6

U = standard_lattice(1, 0)
M2 = standard_lattice(0, 1)

small_ints = st.integers(-6, 6)
og6_vectors = st.lists(small_ints, min_size=8, max_size=8).map(lambda c: OG6.vector(c))


# construction

def test_make_lattice_hyperbolic_plane():
    assert make_lattice([[0, 1], [1, 0]]).gram == U.gram


def test_make_lattice_minus_two():
    assert make_lattice([[-2]]).det == -2


@pytest.mark.parametrize("gram, err", [([[1]], NotEven), ([[0, 1], [2, 0]], NotSymmetric),
                                       ([[2, 2], [2, 2]], Degenerate)])
def test_make_lattice_rejects(gram, err):
    with pytest.raises(err):
        make_lattice(gram)


def test_standard_lattice_og6_determinant_and_signature():
    assert OG6.rank == 8
    assert OG6.det == -4 and abs(OG6.det) == 4
    assert la.signature(OG6.gram) == (3, 5)
    assert OG6.tag == ("U", "U", "U", "-2", "-2")


def test_standard_lattice_small_cases():
    assert standard_lattice(1, 0).gram == ((0, 1), (1, 0))
    assert standard_lattice(4, 0).det == 1


def test_tag_must_match_gram():
    with pytest.raises(ValueError):
        make_lattice([[0, 1], [1, 0]], ("-2", "-2"))


# pairing, divisibility, primitivity

def test_pairing_examples():
    e, f = U.basis_vector(0), U.basis_vector(1)
    assert pair(e, f) == 1
    assert (e + f).norm() == 2
    assert (og6((ZETA, 1), (EPS, 1))).norm() == -4


def test_pair_lattice_mismatch():
    with pytest.raises(LatticeMismatch):
        pair(U.basis_vector(0), OG6.basis_vector(0))


def test_divisibility_examples():
    assert divisibility(U.basis_vector(0)) == 1
    assert divisibility(M2.basis_vector(0)) == 2
    assert divisibility(og6((EPS, 1))) == 2
    assert divisibility(og6((ZETA, 1), (EPS, 1))) == 2
    with pytest.raises(ZeroVector):
        divisibility(OG6.zero())


def test_primitive_part():
    assert primitive_part(U.vector((2, 4))).coords == (1, 2)
    assert is_primitive(U.vector((1, 0)))
    U4 = standard_lattice(4, 0)
    w = U4.vector((1, 0, 0, 0, 0, 0, 0, -1))
    assert primitive_part(w * 2) == w
    with pytest.raises(ZeroVector):
        is_primitive(U.zero())


@given(og6_vectors, og6_vectors)
def test_pairing_symmetric_and_even(v, w):
    assert pair(v, w) == pair(w, v)
    assert v.norm() % 2 == 0


@given(og6_vectors, og6_vectors)
def test_divisibility_divides_every_pairing(v, w):
    if v.is_zero():
        return
    assert pair(v, w) % divisibility(v) == 0


# discriminant groups

def test_discriminant_group_examples():
    assert discriminant_group(U).orders == ()
    g = discriminant_group(M2)
    assert g.orders == (2,)
    assert g.lifts[0].coords in ((Fraction(1, 2),), (Fraction(-1, 2),))
    assert q_value(g.generators()[0]) == Fraction(3, 2)
    assert q_value(g.zero()) == 0
    assert discriminant_group(OG6).orders == (2, 2)


def test_og6_q_values():
    grp = discriminant_group(OG6)
    qs = sorted(q_value(x) for x in grp.elements() if not x.is_zero())
    assert qs == [1, Fraction(3, 2), Fraction(3, 2)]
    both = disc_class(og6((ZETA, 1), (EPS, 1)))
    assert q_value(both) == 1


def test_disc_class_examples():
    assert disc_class(og6((0, 1), (1, 1))).is_zero()
    z, e = disc_class(og6((ZETA, 1))), disc_class(og6((EPS, 1)))
    assert not z.is_zero() and not e.is_zero() and z != e
    assert disc_class(og6((ZETA, 1), (EPS, 1))) == z + e
    with pytest.raises(NotPrimitive):
        disc_class(og6((ZETA, 2)))


@pytest.mark.parametrize("k, m", [(1, 0), (0, 1), (2, 1), (3, 2), (1, 3)])
def test_discriminant_order_equals_abs_det(k, m):
    lat = standard_lattice(k, m)
    grp = discriminant_group(lat)
    assert grp.order == abs(lat.det)
    for lift in grp.lifts:
        assert all(Fraction(x).denominator == 1 for x in la.matvec(lat.gram, lift.coords))


@given(st.lists(st.integers(-2, 2), min_size=8, max_size=8), st.sampled_from(range(4)))
def test_q_value_independent_of_lift(l, idx):
    grp = discriminant_group(OG6)
    x = grp.elements()[idx]
    lift = tuple(a + b for a, b in zip(grp.lift_coords(x), l))
    assert grp.class_of(lift) == x
    assert (OG6.pair(lift, lift) - q_value(x)) % 2 == 0


def test_discriminant_group_of_non_diagonal_lattice():
    lat = make_lattice([[2, 1], [1, -4]])
    grp = discriminant_group(lat)
    assert grp.order == 9
    for x in grp.elements():
        assert grp.class_of(grp.lift_coords(x)) == x


# complements and overlattices

def test_orthogonal_complement_examples():
    comp, emb = orthogonal_complement([U.vector((1, 0))])
    assert comp.gram == ((0,),) and comp.degenerate
    comp, emb = orthogonal_complement([U.vector((1, 1))])
    assert comp.gram == ((-2,),)
    assert [r[0] for r in emb] in ([1, -1], [-1, 1])
    lat, emb = orthogonal_complement([], OG6)
    assert lat == OG6


def test_mukai_complement_of_w():
    U4 = standard_lattice(4, 0)
    w = U4.vector((1, 1, 0, 0, 0, 0, 0, 0))   # (1, 0, -1) with H^0 + H^4 as the first plane
    assert w.norm() == 2
    comp, emb = orthogonal_complement([w])
    assert comp.rank == 7 and abs(comp.det) == 2
    assert la.signature(comp.gram) == (3, 4)


@given(st.lists(st.lists(st.integers(-3, 3), min_size=5, max_size=5), min_size=1, max_size=2))
def test_orthogonal_complement_is_saturated(rows):
    lat = standard_lattice(2, 1)
    vs = [lat.vector(r) for r in rows if any(r)]
    if not vs:
        return
    comp, emb = orthogonal_complement(vs)
    for col in la.transpose(emb):
        assert all(lat.pair(col, v.coords) == 0 for v in vs)
    # saturation: the embedding has trivial elementary divisors
    _, d, _ = la.smith_normal_form(la.transpose(emb))
    assert all(d[i][i] == 1 for i in range(comp.rank))
    assert comp.rank == lat.rank - la.rank([v.coords for v in vs])


def test_overlattice_of_2_plus_minus2_is_U():
    L = make_lattice([[2, 0], [0, -2]])
    grp = discriminant_group(L)
    N, index, emb = overlattice_from_isotropic(L, [grp.element((1, 1))])
    assert index == 2 and abs(N.det) == 1 and la.signature(N.gram) == (1, 1)
    assert all(N.gram[i][i] % 2 == 0 for i in range(2))   # even unimodular of signature (1,1) is U
    assert discriminant_group(N).order == grp.order // index ** 2


def test_overlattice_trivial_and_rejected():
    N, index, _ = overlattice_from_isotropic(M2, [])
    assert N == M2 and index == 1
    L = standard_lattice(0, 2)
    with pytest.raises(NotIsotropic):
        overlattice_from_isotropic(L, [discriminant_group(L).element((1, 0))])


def test_overlattice_of_doubled_plane():
    L = make_lattice([[0, 2], [2, 0]])   # U(2)
    grp = discriminant_group(L)
    iso = [x for x in grp.elements() if not x.is_zero() and q_value(x) == 0]
    N, index, _ = overlattice_from_isotropic(L, iso[:1])
    assert index == 2
    assert discriminant_group(N).order == grp.order // 4


def test_rational_vector_norm():
    v = RationalVector((Fraction(1, 2), 0, 0, 0, 0, 0, Fraction(1, 2), 0), OG6)
    assert v.norm() == Fraction(-1, 2)
