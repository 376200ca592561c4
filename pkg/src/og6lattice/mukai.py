"""Mukai vectors on an abelian surface and the lattice U^3 + (-2)^2.

Mukai lattice coordinates are (r; e1, f1, e2, f2, e3, f3; s) with pairing
(x, y) = c_x.c_y - r_x s_y - s_x r_y, where c lives in U^3.  For the square-2
vector w = (1, 0, -1), w-perp is U^3 + Z zeta with zeta = (1, 0, 1); adding a
fresh class eps of square -2 gives the OG6 lattice with basis
(e1, f1, e2, f2, e3, f3, zeta, eps).
"""
from dataclasses import dataclass
from math import gcd

from . import _linalg as la
from .errors import (InternalCaseFailure, NotInDomain, NotInOPlus,
                     NotIsometryOfComplement, NotPrimitive, PDNotIsometry,
                     SquareNotTwo, NonIntegralResult)
from .isometry import (Isometry, IsometryWord, Opaque, Reflection,
                       extend_fixing_square2, extend_isometry,
                       preserves_positive_cone_orientation, reflection_matrix)
from .lattice import (Lattice, LatticeVector, orthogonal_complement,
                      standard_lattice)
from .orbits import reduce_to_canonical, transport

U3 = standard_lattice(3, 0)
W_PERP = standard_lattice(3, 1)   # U^3 + Z zeta
OG6 = standard_lattice(3, 2)      # U^3 + Z zeta + Z eps
E1, F1, E2, F2, E3, F3, ZETA, EPS = range(8)


def _mukai_gram():
    g = [[0] * 8 for _ in range(8)]
    g[0][7] = g[7][0] = -1
    for i in range(3):
        g[1 + 2 * i][2 + 2 * i] = g[2 + 2 * i][1 + 2 * i] = 1
    return la.as_matrix(g)


MUKAI = Lattice(_mukai_gram())


def og6_vector(coords):
    return OG6.vector(coords)


def og6_basis():
    return {name: OG6.basis_vector(i) for i, name in
            enumerate(("e1", "f1", "e2", "f2", "e3", "f3", "zeta", "eps"))}


@dataclass(frozen=True)
class MukaiVector:
    r: int
    c: tuple
    s: int

    def __post_init__(self):
        c = tuple(int(x) for x in self.c)
        if len(c) != 6:
            raise ValueError("c must have 6 coordinates in the U^3 model")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "r", int(self.r))
        object.__setattr__(self, "s", int(self.s))

    def coords(self):
        return (self.r,) + self.c + (self.s,)

    @classmethod
    def from_coords(cls, x):
        x = tuple(x)
        return cls(x[0], x[1:7], x[7])

    def vector(self):
        return MUKAI.vector(self.coords())

    def __add__(self, o):
        return MukaiVector(self.r + o.r, tuple(a + b for a, b in zip(self.c, o.c)), self.s + o.s)

    def __mul__(self, k):
        return MukaiVector(k * self.r, tuple(k * a for a in self.c), k * self.s)

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1


W = MukaiVector(1, (0,) * 6, -1)
ZETA_MUKAI = MukaiVector(1, (0,) * 6, 1)


def mukai_pairing(x, y):
    return U3.pair(x.c, y.c) - x.r * y.s - x.s * y.r


def mukai_square(x):
    return mukai_pairing(x, x)


def w_perp(w):
    """Orthogonal complement of w in the Mukai lattice, with its embedding.

    For w = (1, 0, -1) the basis is (e1, ..., f3, zeta) so the complement is
    literally U^3 + (-2); the span is checked against the computed kernel.
    """
    v = w.vector()
    if la.content(v.coords) != 1:
        raise NotPrimitive("w must be primitive")
    comp, emb = orthogonal_complement([v])
    if w == W:
        cols = [tuple(int(j == i + 1) for j in range(8)) for i in range(6)]
        cols.append(ZETA_MUKAI.coords())
        named = la.transpose(cols)
        if la.row_hnf(cols) != la.row_hnf(la.transpose(emb)):
            raise InternalCaseFailure("named basis does not span w-perp")
        gram = la.matmul(la.transpose(named), la.matmul(MUKAI.gram, named))
        if gram != W_PERP.gram:
            raise InternalCaseFailure("w-perp is not U^3 + (-2) in the named basis")
        return W_PERP, named
    return Lattice(comp.gram), emb


@dataclass(frozen=True)
class OG6Lattice:
    lattice: Lattice
    w: MukaiVector
    perp_embedding: tuple   # columns: w-perp basis in Mukai coordinates

    def basis(self):
        return [self.lattice.basis_vector(i) for i in range(self.lattice.rank)]

    def to_mukai(self, coords):
        """Mukai vector of the w-perp part of an OG6 vector (eps coordinate dropped)."""
        return MukaiVector.from_coords(la.matvec(self.perp_embedding, coords[:-1]))


def og6_from_w(w):
    """w-perp plus a fresh (-2) class eps."""
    if mukai_square(w) != 2:
        raise SquareNotTwo("w must have Mukai square 2")
    perp, emb = w_perp(w)
    if w == W:
        return OG6Lattice(OG6, w, emb)
    gram = la.block_diag(perp.gram, ((-2,),))
    return OG6Lattice(Lattice(gram), w, emb)


def mukai_from_og6(coords):
    """Mukai vector (r, c, r) of an OG6 vector c + r zeta (eps must vanish)."""
    if coords[EPS]:
        raise NotInDomain("vector has an eps component")
    r = coords[ZETA]
    return MukaiVector(r, coords[:6], r)


def og6_from_mukai(x):
    if x.r != x.s:
        raise NotInDomain("(r, c, s) lies in (1,0,-1)-perp only when r = s")
    return OG6.vector(x.c + (x.r, 0))


# the isometries phi and varrho

def phi(x):
    """(r, a e + b f + alpha, s) -> (-a, r e - (s + a) f + alpha, r + b), e = e1, f = f1."""
    if mukai_pairing(x, W) != 0:
        raise NotInDomain("phi is defined on (1,0,-1)-perp")
    a, b = x.c[0], x.c[1]
    alpha = x.c[2:]
    return MukaiVector(-a, (x.r, -(x.s + a)) + alpha, x.r + b)


PHI_TARGET = MukaiVector(0, (1, 1, 0, 0, 0, 0), 1)


def varrho(x, PD=None):
    """(r, alpha, s) -> (-s, PD(alpha), -r) for an isometry PD of U^3."""
    if PD is None:
        m = la.identity(6)
    else:
        m = PD.matrix if isinstance(PD, Isometry) else la.as_matrix(PD)
        try:
            Isometry(m, U3)
        except Exception:
            raise PDNotIsometry("PD is not an isometry of U^3") from None
    return MukaiVector(-x.s, la.matvec(m, x.c), -x.r)


# distinguished isometries

def det_minus_one_witness():
    """Identity on U^3, -1 on zeta: an isometry of w-perp with determinant -1."""
    m = [list(r) for r in la.identity(7)]
    m[6][6] = -1
    return Isometry(la.as_matrix(m), W_PERP)


def reflection_zeta_eps():
    return Isometry(reflection_matrix(OG6.gram, _unit(ZETA, EPS)), OG6)


def negate_zeta():
    m = [list(r) for r in la.identity(8)]
    m[ZETA][ZETA] = -1
    return Isometry(la.as_matrix(m), OG6)


def _unit(*idx):
    return tuple(int(i in idx) for i in range(8))


def extend_by_eps(g):
    """Isometry of w-perp = U^3 + Z zeta extended by the identity on eps."""
    emb_L = tuple(tuple(int(i == j) for j in range(7)) for i in range(8))
    emb_M = tuple((int(i == EPS),) for i in range(8))
    return extend_isometry(g, OG6, emb_L, emb_M)


def restrict_to_w_perp(g):
    """Restriction to U^3 + Z zeta of an OG6 isometry fixing eps."""
    m = g.matrix
    if any(m[i][EPS] != int(i == EPS) for i in range(8)) or any(m[EPS][j] for j in range(7)):
        raise NotIsometryOfComplement("isometry does not fix eps")
    return Isometry(tuple(tuple(m[i][j] for j in range(7)) for i in range(7)), W_PERP)


# extension fixing w = (1, 0, -1)

def w_extension(gamma):
    """Isometry of the Mukai lattice fixing w and restricting to gamma on w-perp.

    The extension checks the arithmetic of the image of zeta = (1, 0, 1): it
    has the form (2m+1, 2 alpha, 2m+1) with alpha^2 = 2m(m+1) and
    gcd(alpha, 2m+1) = 1.
    """
    _, emb = w_perp(W)
    return extend_fixing_square2(gamma, MUKAI, W.vector(), emb)


def zeta_image_data(img):
    """(m, alpha) with img = (2m+1, 2 alpha, 2m+1)."""
    if img.r != img.s or img.r % 2 == 0 or any(x % 2 for x in img.c):
        raise NonIntegralResult("image of (1,0,1) is not of the form (2m+1, 2a, 2m+1)")
    return (img.r - 1) // 2, tuple(x // 2 for x in img.c)


def check_zeta_image(img):
    m, alpha = zeta_image_data(img)
    if U3.pair(alpha, alpha) != 2 * m * (m + 1):
        raise InternalCaseFailure("alpha^2 != 2m(m+1)")
    if gcd(la.content(alpha), 2 * m + 1) != 1:
        raise InternalCaseFailure("alpha and 2m+1 are not coprime")
    return m, alpha


# decomposition of O+(U^3 + (-2)^2)

R_ZE = Reflection(_unit(ZETA, EPS))


def _transport_in_w_perp(v, w):
    """Isometry of OG6 fixing eps and mapping v to w (both in U^3 + Z zeta)."""
    word = transport(W_PERP.vector(v[:7]), W_PERP.vector(w[:7]))
    return extend_by_eps(word.evaluate())


def _to_canonical_in_w_perp(v):
    word, target = reduce_to_canonical(W_PERP.vector(v[:7]))
    return extend_by_eps(word.evaluate()), target.coords + (0,)


def _primitive(v):
    c = la.content(v)
    return c, tuple(x // c for x in v)


def decompose_monodromy(g, trace=None):
    """Write g in O+(U^3 + (-2)^2) as a word of eps-fixing factors and R_{zeta+eps}.

    Let f(eps) = 2u + a zeta + b eps for the current f.  Each case composes f
    on the left with R_{zeta+eps} or with an eps-fixing isometry B:
      b = 0: transport 2u + a zeta to -zeta, then R sends -zeta to eps;
      a = 0: R turns the vector into one with b = 0;
      u not in 2U^3: make a even with R, then move the primitive part of
        u + (a/2) zeta to e1 + k f1, reaching the case a = 0;
      u in 2U^3: make b even with R, then move the primitive part of
        2u + a zeta to 2(e1 + k f1) + a' zeta, reaching the previous case.
    Once B_m ... B_1 g fixes eps, g = B_1^-1 ... B_m^-1 (B_m ... B_1 g).
    If `trace` is a list, the names of the cases visited are appended to it.
    """
    if g.lattice != OG6:
        raise NotInOPlus("expected an isometry of U^3 + (-2)^2")
    if not preserves_positive_cone_orientation(g):
        raise NotInOPlus("g does not preserve the orientation of the positive cone")
    R = Isometry(R_ZE.matrix(OG6), OG6)
    f = g
    applied = []   # (atom, matrix) in the order applied on the left of g
    for _ in range(16):
        v = la.matvec(f.matrix, _unit(EPS))
        u, a, b = v[:6], v[ZETA], v[EPS]
        if v == _unit(EPS):
            break
        if any(x % 2 for x in u):
            raise InternalCaseFailure("g(eps) does not have divisibility 2")
        case = "b=0" if b == 0 else "a=0" if a == 0 else \
            "u odd" if any((x // 2) % 2 for x in u) else "u even"
        if trace is not None:
            trace.append(case)
        if b == 0:
            target = (0,) * 6 + (-1, 0)
            step = []
            if v != target:
                T = _transport_in_w_perp(v, target)
                step.append((Opaque(T.matrix, "eps-fixing transport"), T))
            step.append((R_ZE, R))
        elif a == 0:
            step = [(R_ZE, R)]
        else:
            half_u = tuple(x // 2 for x in u)
            step = []
            if any(x % 2 for x in half_u):
                if a % 2:
                    step.append((R_ZE, R))
                    v = la.matvec(R.matrix, v)
                a = v[ZETA]
                if a % 2:
                    raise InternalCaseFailure("parity of a not fixed by R")
                y = tuple(x // 2 for x in v[:6]) + (a // 2, 0)
                c, p = _primitive(y)
                T, target = _to_canonical_in_w_perp(p)
                if target[ZETA] != 0 or target[E1] != 1:
                    raise InternalCaseFailure("divisibility-one canonical form expected")
            else:
                if b % 2:
                    step.append((R_ZE, R))
                    v = la.matvec(R.matrix, v)
                y = v[:7] + (0,)
                c, p = _primitive(y)
                a1 = p[ZETA]
                n = OG6.pair(p, p)
                k, rem = divmod(n + 2 * a1 * a1, 8)
                if rem or a1 % 2 == 0:
                    raise InternalCaseFailure("unexpected shape in the case 2 | u")
                target = (2, 2 * k, 0, 0, 0, 0, a1, 0)
                T = _transport_in_w_perp(p, target)
            step.append((Opaque(T.matrix, "eps-fixing transport"), T))
        for atom, m in step:
            f = Isometry(la.matmul(m.matrix, f.matrix), OG6)
            applied.append((atom, m))
    else:
        raise InternalCaseFailure("case reduction did not terminate")
    atoms = [a.inverse() if isinstance(a, Opaque) else a for a, _ in applied]
    residual = f
    if residual.matrix != la.identity(8) or not atoms:
        if not preserves_positive_cone_orientation(residual):
            raise InternalCaseFailure("residual factor is not in O+")
        atoms.append(Opaque(residual.matrix, "eps-fixing residual"))
    word = IsometryWord(tuple(atoms), OG6)
    if word.evaluate().matrix != g.matrix:
        raise InternalCaseFailure("decomposition does not recompose to g")
    for atom in word.atoms:
        if isinstance(atom, Opaque):
            if la.matvec(atom.mat, _unit(EPS)) != _unit(EPS):
                raise InternalCaseFailure("opaque factor moves eps")
            if not preserves_positive_cone_orientation(Isometry(atom.mat, OG6)):
                raise InternalCaseFailure("opaque factor is not in O+")
    return word


def is_monodromy(g):
    """Membership in O+(U^3 + (-2)^2), which equals the monodromy group."""
    if g.lattice != OG6:
        raise NotInOPlus("expected an isometry of U^3 + (-2)^2")
    return preserves_positive_cone_orientation(g)
