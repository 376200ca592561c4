import random

import pytest
from hypothesis import given, strategies as st

from og6lattice import _linalg as la
from og6lattice.errors import (LatticeMismatch, NegativeDefinite, NormNotTwo, NotInOtilde,
                               NotIntegral, NotIsometry, NotIsometryOfComplement,
                               NotIsotropic, NotOrthogonal, ZeroNorm)
from og6lattice.isometry import (Isometry, IsometryWord, Opaque, Reflection, Transvection,
                                 acts_trivially_on_discriminant, compose, det, extend_fixing_square2,
                                 extend_isometry, identity, inverse, membership, orientation_sign,
                                 preserves_positive_cone_orientation, reflection_in,
                                 simplify_transvections, transvection, transvection_matrix)
from og6lattice.lattice import make_lattice, standard_lattice
from og6lattice.orbits import eichler_generators, summand_swap

from conftest import EPS, OG6, ZETA, og6, random_isometry_matrix, unit

U = standard_lattice(1, 0)
U2 = standard_lattice(2, 0)
U3 = standard_lattice(3, 0)


def minus_identity(lat):
    return Isometry(tuple(tuple(-int(i == j) for j in range(lat.rank)) for i in range(lat.rank)), lat)


def test_isometry_rejects_non_isometry():
    with pytest.raises(NotIsometry):
        Isometry(((1, 1), (0, 1)), U)
    with pytest.raises(NotIsometry):
        Isometry(((1,),), U)


def test_transvection_example_in_U2():
    e1, f1, e2, f2 = (U2.basis_vector(i) for i in range(4))
    t = transvection(e2, f1)
    assert t(e1) == e1 - e2
    assert t(e2) == e2


def test_transvection_fixes_e_and_zero_parameter():
    e, a = og6((0, 1)), og6((2, 3), (ZETA, 1))
    assert transvection(e, a)(e) == e
    assert transvection(e, OG6.zero()) == identity(OG6)


def test_transvection_preconditions():
    with pytest.raises(NotIsotropic):
        transvection(og6((0, 1), (1, 1)), OG6.zero())
    with pytest.raises(NotOrthogonal):
        transvection(og6((0, 1)), og6((1, 1)))
    with pytest.raises(LatticeMismatch):
        transvection(og6((0, 1)), U.zero())


def test_reflection_examples():
    D = og6((ZETA, 1), (EPS, 1))
    R = reflection_in(D)
    assert R(og6((ZETA, 1))) == -og6((EPS, 1))
    assert R(og6((EPS, 1))) == -og6((ZETA, 1))
    assert R(D) == -D
    assert det(R) == -1
    assert reflection_in(U.vector((1, -1)))(U.vector((1, 0))) == U.vector((0, 1))


def test_reflection_preconditions():
    with pytest.raises(ZeroNorm):
        reflection_in(og6((0, 1)))
    with pytest.raises(NotIntegral):
        reflection_in(og6((0, 2), (1, 1)))     # square 4, pairs 2 with e1


@pytest.mark.parametrize("D", [(0, 0, 0, 0, 0, 0, 1, 1), (1, -1, 0, 0, 0, 0, 0, 0), (0, 0, 0, 0, 0, 0, 0, 1),
                               (1, -1, 2, 0, 0, 0, 0, 0)])
def test_reflections_are_involutions_in_O_plus(D):
    R = reflection_in(OG6.vector(D))
    assert compose(R, R) == identity(OG6)
    assert preserves_positive_cone_orientation(R)


def test_compose_inverse_and_mismatch():
    g = Isometry(eichler_generators(OG6)[3].matrix, OG6)
    assert compose(g, inverse(g)) == identity(OG6)
    assert g @ inverse(g) == identity(OG6)
    with pytest.raises(LatticeMismatch):
        compose(g, identity(U))


def test_orientation_examples():
    assert preserves_positive_cone_orientation(identity(OG6))
    assert not preserves_positive_cone_orientation(minus_identity(OG6))
    swap = Isometry(((0, 1, 0, 0), (1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)), U2)
    assert preserves_positive_cone_orientation(swap) and det(swap) == -1
    with pytest.raises(NegativeDefinite):
        preserves_positive_cone_orientation(identity(standard_lattice(0, 2)))


def test_orientation_independent_of_pivot_order():
    rng = random.Random(5)
    pool = eichler_generators(OG6) + [summand_swap(OG6), reflection_in(og6((ZETA, 1), (EPS, 1)))]
    for _ in range(30):
        m = random_isometry_matrix(rng, pool, rng.randint(0, 6))
        if rng.random() < 0.5:
            m = la.matmul(minus_identity(OG6).matrix, m)
        g = Isometry(m, OG6)
        order = list(range(8))
        rng.shuffle(order)
        assert orientation_sign(g) == orientation_sign(g, order)


def test_discriminant_action_examples():
    assert acts_trivially_on_discriminant(identity(OG6))
    assert all(acts_trivially_on_discriminant(t) for t in eichler_generators(OG6))
    assert not acts_trivially_on_discriminant(summand_swap(OG6))


def test_membership_rows():
    m = membership(identity(OG6))
    assert all(v for k, v in m.as_dict().items() if k != "det") and m.det == 1
    m = membership(summand_swap(OG6))
    assert m.in_O_plus and not m.in_SO and not m.in_Otilde and not m.in_SOtilde_plus
    m = membership(eichler_generators(OG6)[0])
    assert m.in_SOtilde_plus


# transvection calculus

def isotropic_samples(lat, count, seed):
    rng = random.Random(seed)
    pool = eichler_generators(lat)
    for _ in range(count):
        g = random_isometry_matrix(rng, pool, rng.randint(0, 5))
        e = la.matvec(g, unit(0, lat.rank))
        a, b = ([rng.randint(-3, 3) for _ in range(lat.rank)] for _ in range(2))
        a[1] = b[1] = 0
        yield e, la.matvec(g, a), la.matvec(g, b), random_isometry_matrix(rng, pool, 3)


@pytest.mark.parametrize("lat", [U3, standard_lattice(2, 1)])
def test_transvection_identities(lat):
    T = lambda e, a: transvection_matrix(lat.gram, e, a)
    for e, a, b, g in isotropic_samples(lat, 60, 7):
        assert la.matmul(T(e, a), T(e, tuple(-x for x in a))) == la.identity(lat.rank)
        assert la.matmul(T(e, a), T(e, b)) == T(e, tuple(x + y for x, y in zip(a, b)))
        conj = la.matmul(g, la.matmul(T(e, a), la.int_inverse(g)))
        assert conj == T(la.matvec(g, e), la.matvec(g, a))
        assert la.det(T(e, a)) == 1


def test_printed_conjugation_order_fails_in_general():
    # g^-1 t(e,a) g = t(g e, g a) is false; the expansion-consistent order above is the true one
    lat = U3
    T = lambda e, a: transvection_matrix(lat.gram, e, a)
    gens = eichler_generators(lat)
    g = la.matmul(gens[1].matrix, la.matmul(gens[2].matrix, gens[3].matrix))
    e, a = unit(2, 6), unit(0, 6)
    assert la.matvec(g, e) != e
    lhs = la.matmul(la.int_inverse(g), la.matmul(T(e, a), g))
    assert lhs != T(la.matvec(g, e), la.matvec(g, a))


@pytest.mark.parametrize("d", range(1, 11))
def test_stabilizer_identities(d):
    T = lambda e, a: Isometry(transvection_matrix(U3.gram, e, a), U3)
    e1, f1, e2, f2 = (U3.basis_vector(i) for i in range(4))
    for iso in (e2, f2):
        A, B = T(iso.coords, (e1 - d * f1).coords), T(iso.coords, (e1 - (d + 1) * f1).coords)
        assert A @ inverse(B) == T(iso.coords, f1.coords)
        assert A(e1 + d * f1) == e1 + d * f1
        assert B(e1 + (d + 1) * f1) == e1 + (d + 1) * f1


@given(st.lists(st.integers(-4, 4), min_size=4, max_size=4), st.integers(-4, 4))
def test_transvections_fix_their_isotropic_vector(a, k):
    lat = standard_lattice(2, 2)
    e = (1, 0, 0, 0, 0, 0)
    avec = (0, 0) + tuple(a)
    t = transvection(lat.vector(e), lat.vector(avec))
    assert t(lat.vector(e)) == lat.vector(e)
    assert membership(t).in_SOtilde_plus


# words

def test_word_evaluation_order():
    e2, f1 = unit(2, 4), unit(1, 4)
    A, B = Transvection(e2, f1), Reflection((1, -1, 0, 0))
    w = IsometryWord((A, B), U2)
    assert w.evaluate().matrix == la.matmul(A.matrix(U2), B.matrix(U2))
    assert (w + w.inverse()).evaluate() == identity(U2)


def test_simplify_transvections():
    e = unit(2, 4)
    atoms = [Transvection(e, (1, 0, 0, 0)), Transvection(e, (0, 1, 0, 0)),
             Transvection(e, (0, -1, 0, 0)), Transvection(e, (0, 0, 0, 0))]
    assert simplify_transvections(atoms) == [Transvection(e, (1, 0, 0, 0))]


def test_opaque_inverse():
    g = eichler_generators(OG6)[5]
    op = Opaque(g.matrix, "x")
    assert la.matmul(op.matrix(OG6), op.inverse().matrix(OG6)) == la.identity(8)


# extensions

def test_extend_identity_and_block_case():
    N = make_lattice([[0, 1, 0], [1, 0, 0], [0, 0, -2]])
    embL = ((1, 0), (0, 1), (0, 0))
    embM = ((0,), (0,), (1,))
    f = Isometry(((0, 1), (1, 0)), U)
    g = extend_isometry(f, N, embL, embM)
    assert g.matrix == ((0, 1, 0), (1, 0, 0), (0, 0, 1))
    assert extend_isometry(identity(U), N, embL, embM) == identity(N)


def test_extend_negation_from_2_into_U():
    L2 = make_lattice([[2]])
    minus = Isometry(((-1,),), L2)
    assert acts_trivially_on_discriminant(minus)
    embL = ((1,), (1,))      # e + f has square 2
    embM = ((1,), (-1,))     # e - f has square -2
    g = extend_isometry(minus, U, embL, embM)
    assert g.matrix == ((0, -1), (-1, 0))


def test_extend_requires_otilde():
    lat = standard_lattice(0, 2)
    # swapping the two (-2) classes is not trivial on the discriminant
    swap = Isometry(((0, 1), (1, 0)), lat)
    N = standard_lattice(0, 3)
    with pytest.raises(NotInOtilde):
        extend_isometry(swap, N, ((1, 0), (0, 1), (0, 0)), ((0,), (0,), (1,)))


def test_extend_fixing_square2_preconditions():
    U2l = standard_lattice(2, 0)
    w = U2l.vector((1, 1, 0, 0))
    with pytest.raises(NormNotTwo):
        extend_fixing_square2(identity(U), U2l, U2l.vector((1, 0, 0, 0)))
    with pytest.raises(NotIsometryOfComplement):
        extend_fixing_square2(identity(U), U2l, w)
