"""Isometries: transvections, reflections, membership predicates, extensions.

Matrices act on column coordinate vectors.  A word [A, B, C] means the
composite A o B o C, so C is applied first.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import _linalg as la
from .errors import (LatticeMismatch, NegativeDefinite, NonIntegralResult,
                     NormNotTwo, NotIntegral, NotInOtilde, NotIsometry,
                     NotIsometryOfComplement, NotIsotropic, NotOrthogonal,
                     ZeroNorm)
from .lattice import LatticeVector, discriminant_group, orthogonal_complement


@dataclass(frozen=True)
class Isometry:
    matrix: tuple
    lattice: object

    def __post_init__(self):
        m = la.as_matrix(self.matrix)
        object.__setattr__(self, "matrix", m)
        n = self.lattice.rank
        if len(m) != n or any(len(r) != n for r in m):
            raise NotIsometry("matrix size does not match the lattice rank")
        if any(not isinstance(x, int) for r in m for x in r):
            raise NotIsometry("matrix must have integer entries")
        g = self.lattice.gram
        if la.matmul(la.transpose(m), la.matmul(g, m)) != g:
            raise NotIsometry("matrix does not preserve the Gram matrix")
        if self.lattice.degenerate and abs(la.det(m)) != 1:
            raise NotIsometry("matrix is not invertible over Z")

    def __call__(self, v):
        return apply(self, v)

    def __matmul__(self, other):
        return compose(self, other)

    def __repr__(self):
        return "Isometry(%s)" % (list(map(list, self.matrix)),)


def identity(lattice):
    return Isometry(la.identity(lattice.rank), lattice)


def _same(g, h):
    if g.lattice != h.lattice:
        raise LatticeMismatch("isometries of different lattices")


def det(g):
    return la.det(g.matrix)


def compose(g, h):
    """g after h."""
    _same(g, h)
    return Isometry(la.matmul(g.matrix, h.matrix), g.lattice)


def inverse(g):
    return Isometry(la.int_inverse(g.matrix), g.lattice)


def apply(g, v):
    if v.lattice != g.lattice:
        raise LatticeMismatch("vector and isometry live in different lattices")
    return LatticeVector(la.matvec(g.matrix, v.coords), g.lattice)


def _coords(x):
    return x.coords if isinstance(x, LatticeVector) else tuple(x)


def transvection_matrix(gram, e, a):
    """Matrix of v -> v - (a,v)e + (e,v)a - (a,a)/2 (e,v)e; no checks."""
    n = len(gram)
    ga = la.matvec(gram, a)
    ge = la.matvec(gram, e)
    half = la.dot(a, ga) // 2
    return tuple(tuple(int(i == j) - e[i] * ga[j] + a[i] * ge[j] - half * e[i] * ge[j]
                       for j in range(n)) for i in range(n))


def transvection(e, a):
    """Eichler transvection t(e, a) for isotropic e and a orthogonal to e."""
    lat = e.lattice
    if a.lattice != lat:
        raise LatticeMismatch("e and a live in different lattices")
    if lat.pair(e.coords, e.coords) != 0:
        raise NotIsotropic("e is not isotropic")
    if lat.pair(e.coords, a.coords) != 0:
        raise NotOrthogonal("a is not orthogonal to e")
    return Isometry(transvection_matrix(lat.gram, e.coords, a.coords), lat)


def reflection_matrix(gram, d):
    n = len(gram)
    gd = la.matvec(gram, d)
    nn = la.dot(d, gd)
    if nn == 0:
        raise ZeroNorm("reflection in a vector of norm 0")
    if any((2 * x) % nn for x in gd):
        raise NotIntegral("2(D,b)/D^2 is not integral for some basis vector b")
    return tuple(tuple(int(i == j) - d[i] * (2 * gd[j] // nn) for j in range(n)) for i in range(n))


def reflection_in(D):
    """R_D(x) = x - 2(D,x)/(D,D) D."""
    return Isometry(reflection_matrix(D.lattice.gram, D.coords), D.lattice)


# group membership

@lru_cache(maxsize=None)
def _positive_basis(lattice, order=None):
    diag = la.diagonalize(lattice.gram, order)
    pos = tuple(v for v, n in diag if n > 0)
    if not pos:
        raise NegativeDefinite("lattice has no positive vectors")
    return pos


def orientation_sign(g, order=None):
    """Sign of det[(g w_i, w_j)] over a rational positive-definite basis w."""
    lat = g.lattice
    ws = _positive_basis(lat, None if order is None else tuple(order))
    gw = [la.matvec(g.matrix, w) for w in ws]
    d = la.det(tuple(tuple(lat.pair(x, w) for w in ws) for x in gw))
    if d == 0:
        raise AssertionError("positive subspace mapped degenerately")
    return 1 if d > 0 else -1


def preserves_positive_cone_orientation(g, order=None):
    """True iff g lies in O+(L)."""
    return orientation_sign(g, order) > 0


def acts_trivially_on_discriminant(g):
    grp = discriminant_group(g.lattice)
    for x, lift in zip(grp.generators(), grp.lifts):
        image = la.matvec(g.matrix, lift.coords)
        if grp.class_of(image) != x:
            return False
    return True


@dataclass(frozen=True)
class Membership:
    det: int
    in_O_plus: bool
    in_SO: bool
    in_SO_plus: bool
    in_Otilde: bool
    in_SOtilde_plus: bool

    def as_dict(self):
        return dict(self.__dict__)


def membership(g):
    d = det(g)
    plus = preserves_positive_cone_orientation(g)
    tilde = acts_trivially_on_discriminant(g)
    return Membership(d, plus, d == 1, d == 1 and plus, tilde, d == 1 and plus and tilde)


# words

@dataclass(frozen=True)
class Transvection:
    e: tuple
    a: tuple

    def matrix(self, lattice):
        return transvection(lattice.vector(self.e), lattice.vector(self.a)).matrix

    def inverse(self):
        return Transvection(self.e, tuple(-x for x in self.a))


@dataclass(frozen=True)
class Reflection:
    D: tuple

    def matrix(self, lattice):
        return reflection_in(lattice.vector(self.D)).matrix

    def inverse(self):
        return self


@dataclass(frozen=True)
class Opaque:
    mat: tuple
    label: str = ""

    def matrix(self, lattice):
        return Isometry(self.mat, lattice).matrix

    def inverse(self):
        return Opaque(la.int_inverse(self.mat), self.label)


@dataclass(frozen=True)
class IsometryWord:
    atoms: tuple
    lattice: object

    def __post_init__(self):
        object.__setattr__(self, "atoms", tuple(self.atoms))

    def __len__(self):
        return len(self.atoms)

    def evaluate(self):
        m = la.identity(self.lattice.rank)
        for atom in self.atoms:
            m = la.matmul(m, atom.matrix(self.lattice))
        return Isometry(m, self.lattice)

    def inverse(self):
        return IsometryWord(tuple(a.inverse() for a in reversed(self.atoms)), self.lattice)

    def __add__(self, other):
        """Concatenation: (self + other) evaluates to self o other."""
        if other.lattice != self.lattice:
            raise LatticeMismatch("words over different lattices")
        return IsometryWord(self.atoms + other.atoms, self.lattice)


def simplify_transvections(atoms):
    """Merge neighbours t(e,a) t(e,b) = t(e,a+b) and drop t(e,0)."""
    out = []
    for atom in atoms:
        if isinstance(atom, Transvection):
            if not any(atom.a):
                continue
            if out and isinstance(out[-1], Transvection) and out[-1].e == atom.e:
                merged = tuple(x + y for x, y in zip(out[-1].a, atom.a))
                out.pop()
                if any(merged):
                    out.append(Transvection(atom.e, merged))
                continue
        out.append(atom)
    return out


# extensions

def extend_isometry(f, ambient, emb_L, emb_M, check_otilde=True):
    """Extend f on L by the identity on M to the overlattice `ambient` of L + M.

    emb_L and emb_M are integer matrices whose columns are the bases of L and
    M in ambient coordinates; together they must span a finite-index
    sublattice.
    """
    if check_otilde and not acts_trivially_on_discriminant(f):
        raise NotInOtilde("f does not act trivially on the discriminant group")
    c = la.hstack(emb_L, emb_M)
    if len(c) != ambient.rank or len(c[0]) != ambient.rank:
        raise ValueError("L and M do not have complementary ranks")
    m = len(emb_M[0]) if emb_M and emb_M[0] else 0
    block = la.block_diag(f.matrix, la.identity(m))
    try:
        cinv = la.inverse(c)
    except ZeroDivisionError:
        raise ValueError("L + M does not have finite index") from None
    full = la.matmul(la.matmul(c, block), cinv)
    try:
        full = la.to_int_matrix(full)
    except ValueError:
        raise NonIntegralResult("extension is not integral") from None
    return Isometry(full, ambient)


def extend_fixing_square2(gamma, ambient, w, embedding=None):
    """Extend an isometry of w-perp to the ambient lattice, fixing w (w^2 = 2)."""
    if ambient.pair(w.coords, w.coords) != 2:
        raise NormNotTwo("w must have square 2")
    if embedding is None:
        comp, embedding = orthogonal_complement([w])
    else:
        basis = la.transpose(embedding)
        comp_gram = la.matmul(basis, la.matmul(ambient.gram, embedding))
        if any(ambient.pair(b, w.coords) for b in basis):
            raise NotIsometryOfComplement("embedding columns are not orthogonal to w")
        comp = None
        if la.as_matrix(comp_gram) != gamma.lattice.gram:
            raise NotIsometryOfComplement("gamma is not an isometry of the complement")
    if comp is not None and comp.gram != gamma.lattice.gram:
        raise NotIsometryOfComplement("gamma is not an isometry of the complement")
    wcol = tuple((x,) for x in w.coords)
    g = extend_isometry(gamma, ambient, embedding, wcol, check_otilde=False)
    from . import mukai
    if ambient == mukai.MUKAI and w.coords == mukai.W.coords():
        image = la.matvec(g.matrix, mukai.ZETA_MUKAI.coords())
        mukai.check_zeta_image(mukai.MukaiVector.from_coords(image))
    return g
