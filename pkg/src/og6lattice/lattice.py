"""Even lattices, vectors, divisibility, discriminant groups."""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from . import _linalg as la
from .errors import (Degenerate, LatticeMismatch, NotEven, NotIsotropic,
                     NotPrimitive, NotSymmetric, ZeroVector)

U_BLOCK = ((0, 1), (1, 0))


@dataclass(frozen=True)
class Lattice:
    """A free Z-module with an even symmetric Gram matrix.

    `tag` lists the summands in coordinate order, e.g. ("U", "U", "-2"),
    where "U" occupies two coordinates with Gram [[0,1],[1,0]] and "-2" one
    coordinate with Gram [[-2]].  Degenerate Gram matrices are only allowed
    when `degenerate=True` is passed (orthogonal complements do this).
    """
    gram: tuple
    tag: tuple = None
    degenerate: bool = False
    _det: int = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        g = la.as_matrix(self.gram)
        object.__setattr__(self, "gram", g)
        n = len(g)
        if n == 0 or any(len(r) != n for r in g):
            raise NotSymmetric("Gram matrix must be square and nonempty")
        if any(not isinstance(x, int) for r in g for x in r):
            raise NotEven("Gram matrix must have integer entries")
        if any(g[i][j] != g[j][i] for i in range(n) for j in range(i)):
            raise NotSymmetric("Gram matrix is not symmetric")
        if any(g[i][i] % 2 for i in range(n)):
            raise NotEven("odd diagonal entry")
        d = la.det(g)
        object.__setattr__(self, "_det", d)
        if d == 0 and not self.degenerate:
            raise Degenerate("Gram matrix has zero determinant")
        if d != 0:
            object.__setattr__(self, "degenerate", False)
        if self.tag is not None:
            tag = tuple(self.tag)
            object.__setattr__(self, "tag", tag)
            if la.as_matrix(_tag_gram(tag)) != g:
                raise ValueError("decomposition tag does not match the Gram matrix")

    @property
    def rank(self):
        return len(self.gram)

    @property
    def det(self):
        return self._det

    def pair(self, x, y):
        return la.bilinear(self.gram, x, y)

    def vector(self, coords):
        return LatticeVector(tuple(coords), self)

    def basis_vector(self, i):
        return self.vector(int(i == j) for j in range(self.rank))

    def zero(self):
        return self.vector((0,) * self.rank)

    def u_planes(self):
        """Coordinate offsets of the U summands recorded in the tag."""
        if self.tag is None:
            return []
        out, off = [], 0
        for t in self.tag:
            if t == "U":
                out.append(off)
                off += 2
            else:
                off += 1
        return out

    def __repr__(self):
        if self.tag:
            return "Lattice(%s)" % "+".join(self.tag)
        return "Lattice(gram=%s)" % (list(map(list, self.gram)),)


def _tag_gram(tag):
    blocks = []
    for t in tag:
        if t == "U":
            blocks.append(U_BLOCK)
        elif t == "-2":
            blocks.append(((-2,),))
        else:
            raise ValueError("unknown summand %r" % (t,))
    return la.block_diag(*blocks)


def make_lattice(gram, tag=None):
    """Validated lattice from a square integer matrix."""
    return Lattice(la.as_matrix(gram), tag)


def standard_lattice(k, m):
    """U^k followed by m copies of (-2)."""
    if k < 0 or m < 0 or k + m < 1:
        raise ValueError("need k + m >= 1")
    tag = ("U",) * k + ("-2",) * m
    return Lattice(_tag_gram(tag), tag)


def _check_same(x, y):
    if x.lattice != y.lattice:
        raise LatticeMismatch("vectors live in different lattices")


@dataclass(frozen=True)
class LatticeVector:
    coords: tuple
    lattice: Lattice

    def __post_init__(self):
        c = tuple(int(x) for x in self.coords)
        if len(c) != self.lattice.rank:
            raise LatticeMismatch("coordinate length %d != rank %d" % (len(c), self.lattice.rank))
        object.__setattr__(self, "coords", c)

    def __add__(self, other):
        _check_same(self, other)
        return LatticeVector(tuple(a + b for a, b in zip(self.coords, other.coords)), self.lattice)

    def __sub__(self, other):
        _check_same(self, other)
        return LatticeVector(tuple(a - b for a, b in zip(self.coords, other.coords)), self.lattice)

    def __neg__(self):
        return LatticeVector(tuple(-a for a in self.coords), self.lattice)

    def __mul__(self, k):
        return LatticeVector(tuple(k * a for a in self.coords), self.lattice)

    __rmul__ = __mul__

    def is_zero(self):
        return not any(self.coords)

    def norm(self):
        return norm(self)

    def __repr__(self):
        return "LatticeVector(%s)" % (list(self.coords),)


@dataclass(frozen=True)
class RationalVector:
    coords: tuple
    lattice: Lattice

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(x) for x in self.coords))
        if len(self.coords) != self.lattice.rank:
            raise LatticeMismatch("coordinate length does not match rank")

    def is_integral(self):
        return all(x.denominator == 1 for x in self.coords)

    def norm(self):
        return self.lattice.pair(self.coords, self.coords)

    def __repr__(self):
        return "RationalVector(%s)" % ([str(x) for x in self.coords],)


def pair(v, w):
    _check_same(v, w)
    return v.lattice.pair(v.coords, w.coords)


def norm(v):
    return v.lattice.pair(v.coords, v.coords)


def divisibility(v):
    """Positive generator of the ideal (v, L)."""
    if v.is_zero():
        raise ZeroVector("divisibility of the zero vector")
    return la.content(la.matvec(v.lattice.gram, v.coords))


def is_primitive(v):
    if v.is_zero():
        raise ZeroVector("primitivity of the zero vector")
    return la.content(v.coords) == 1


def primitive_part(v):
    if v.is_zero():
        raise ZeroVector("primitive part of the zero vector")
    c = la.content(v.coords)
    return LatticeVector(tuple(x // c for x in v.coords), v.lattice)


# discriminant groups

@dataclass(frozen=True)
class DiscriminantGroup:
    """A_L = L^dual / L with generators read off a Smith form of the Gram matrix.

    With U*G*V = D, the class of y in L^dual has coefficient (U*G*y)_i mod d_i
    on generator i, whose lift is column i of V divided by d_i.
    """
    lattice: Lattice
    orders: tuple
    lifts: tuple
    _rows: tuple = field(repr=False, compare=False, default=())

    @property
    def order(self):
        out = 1
        for d in self.orders:
            out *= d
        return out

    def element(self, coeffs):
        return DiscriminantElement(tuple(coeffs), self)

    def zero(self):
        return self.element((0,) * len(self.orders))

    def generators(self):
        return [self.element(tuple(int(i == j) for j in range(len(self.orders))))
                for i in range(len(self.orders))]

    def elements(self):
        out = [()]
        for d in self.orders:
            out = [c + (k,) for c in out for k in range(d)]
        return [self.element(c) for c in out]

    def class_of(self, coords):
        """Class of a rational vector of L^dual (given in L-coordinates)."""
        g = la.matvec(self.lattice.gram, coords)
        if any(Fraction(x).denominator != 1 for x in g):
            raise ValueError("vector is not in the dual lattice")
        coeffs = []
        for row, d in zip(self._rows, self.orders):
            coeffs.append(int(la.dot(row, g)) % d)
        return self.element(coeffs)

    def lift_coords(self, x):
        out = [Fraction(0)] * self.lattice.rank
        for c, lift in zip(x.coeffs, self.lifts):
            for i, y in enumerate(lift.coords):
                out[i] += c * y
        return tuple(out)


@dataclass(frozen=True)
class DiscriminantElement:
    coeffs: tuple
    group: DiscriminantGroup

    def __post_init__(self):
        if len(self.coeffs) != len(self.group.orders):
            raise ValueError("wrong number of coefficients")
        object.__setattr__(self, "coeffs",
                           tuple(int(c) % d for c, d in zip(self.coeffs, self.group.orders)))

    def __add__(self, other):
        return DiscriminantElement(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.group)

    def __neg__(self):
        return DiscriminantElement(tuple(-a for a in self.coeffs), self.group)

    def is_zero(self):
        return not any(self.coeffs)

    def lift(self):
        return RationalVector(self.group.lift_coords(self), self.group.lattice)

    def __repr__(self):
        return "DiscriminantElement(%s mod %s)" % (list(self.coeffs), list(self.group.orders))


@lru_cache(maxsize=None)
def discriminant_group(lattice):
    if lattice.degenerate:
        raise Degenerate("discriminant group of a degenerate lattice")
    u, d, v = la.smith_normal_form(lattice.gram)
    n = lattice.rank
    orders, lifts, rows = [], [], []
    for i in range(n):
        di = d[i][i]
        if di > 1:
            orders.append(di)
            lifts.append(RationalVector(tuple(Fraction(v[r][i], di) for r in range(n)), lattice))
            rows.append(u[i])
    return DiscriminantGroup(lattice, tuple(orders), tuple(lifts), tuple(rows))


def mod2(x):
    """Reduce a rational number into [0, 2)."""
    x = Fraction(x)
    return x - 2 * (x.numerator // (2 * x.denominator))


def q_value(x):
    """Discriminant quadratic form, as a Fraction in [0, 2)."""
    lift = x.group.lift_coords(x)
    return mod2(x.group.lattice.pair(lift, lift))


def b_value(x, y):
    """Discriminant bilinear form, as a Fraction in [0, 1)."""
    a, b = x.group.lift_coords(x), y.group.lift_coords(y)
    p = Fraction(x.group.lattice.pair(a, b))
    return p - p.numerator // p.denominator


def disc_class(v):
    """Class of v/div(v) in A_L."""
    if not is_primitive(v):
        raise NotPrimitive("disc_class needs a primitive vector")
    d = divisibility(v)
    grp = discriminant_group(v.lattice)
    return grp.class_of(tuple(Fraction(x, d) for x in v.coords))


# sublattices and overlattices

def orthogonal_complement(vs, lattice=None):
    """Saturated orthogonal complement of a list of vectors.

    Returns (complement, embedding) where embedding is an n x r integer
    matrix whose columns are the complement basis in ambient coordinates.
    The complement may be degenerate; it is then flagged.
    """
    vs = list(vs)
    if lattice is None:
        if not vs:
            raise ValueError("need a lattice when no vectors are given")
        lattice = vs[0].lattice
    for v in vs:
        if v.lattice != lattice:
            raise LatticeMismatch("vectors live in different lattices")
    n = lattice.rank
    if not vs:
        return lattice, la.identity(n)
    rows = [la.matvec(lattice.gram, v.coords) for v in vs]
    basis = la.integer_kernel(rows, n)
    if not basis:
        raise Degenerate("orthogonal complement is zero")
    emb = la.transpose(basis)
    gram = la.matmul(basis, la.matmul(lattice.gram, emb))
    return Lattice(gram, None, degenerate=True), emb


def _subgroup(elements):
    if not elements:
        return set()
    grp = elements[0].group
    seen = {grp.zero().coeffs}
    frontier = [grp.zero()]
    while frontier:
        nxt = []
        for x in frontier:
            for h in elements:
                y = x + h
                if y.coeffs not in seen:
                    seen.add(y.coeffs)
                    nxt.append(y)
        frontier = nxt
    return seen


def overlattice_from_isotropic(lattice, H):
    """Overlattice N = preimage of <H> in L^dual.

    Returns (N, index, embedding) where embedding is an n x n rational matrix
    whose columns are the N basis written in L coordinates.
    """
    H = list(H)
    for x in H:
        if q_value(x) != 0:
            raise NotIsotropic("q-value %s is not 0 mod 2" % q_value(x))
    for i, x in enumerate(H):
        for y in H[i + 1:]:
            if b_value(x, y) != 0:
                raise NotIsotropic("generators pair non-integrally")
    n = lattice.rank
    if not H:
        return lattice, 1, la.identity(n)
    lifts = [x.group.lift_coords(x) for x in H]
    den = 1
    for lift in lifts:
        for c in lift:
            den = den * c.denominator // gcd(den, c.denominator)
    rows = [tuple(den * int(i == j) for j in range(n)) for i in range(n)]
    rows += [tuple(int(c * den) for c in lift) for lift in lifts]
    hnf = la.row_hnf(rows)
    basis = [tuple(Fraction(c, den) for c in r) for r in hnf]
    emb = la.transpose(basis)
    gram = la.matmul(basis, la.matmul(lattice.gram, emb))
    gram = la.to_int_matrix(gram)
    index = abs(1 / la.det(emb))
    if index.denominator != 1 or index != len(_subgroup(H)):
        raise AssertionError("overlattice index does not match |<H>|")
    return Lattice(gram), int(index), emb
