"""Orbits of primitive vectors under groups generated by transvections.

The decision procedure compares (norm, divisibility, class of v/div(v)).
`transport` builds an explicit transvection word between two vectors with
equal invariants by reducing each of them to a canonical representative;
the word is always re-evaluated before it is returned.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import floor

from . import _linalg as la
from .errors import (InternalCaseFailure, NoU2Decomposition, NotInSOPlus,
                     NotPrimitive, OrbitMismatch, SearchExhausted, WrongLattice,
                     LatticeMismatch)
from .isometry import (Isometry, IsometryWord, Opaque, Transvection, det,
                       membership, preserves_positive_cone_orientation,
                       simplify_transvections, transvection_matrix)
from .lattice import (LatticeVector, disc_class, discriminant_group,
                      divisibility, is_primitive, standard_lattice)

OG6 = standard_lattice(3, 2)


@dataclass(frozen=True)
class OrbitInvariants:
    norm: int
    div: int
    disc: object

    def key(self):
        return (self.norm, self.div, self.disc.coeffs)


def _require_u2(lattice):
    planes = lattice.u_planes()
    if len(planes) < 2:
        raise NoU2Decomposition("lattice needs a decomposition with two hyperbolic planes")
    return planes[0], planes[1]


def orbit_invariants(v):
    _require_u2(v.lattice)
    if not is_primitive(v):
        raise NotPrimitive("orbit invariants need a primitive vector")
    return OrbitInvariants(v.norm(), divisibility(v), disc_class(v))


def same_orbit_SOtilde_plus(v, w):
    if v.lattice != w.lattice:
        raise LatticeMismatch("vectors live in different lattices")
    return orbit_invariants(v).key() == orbit_invariants(w).key()


def _require_og6(v):
    if v.lattice.gram != OG6.gram:
        raise WrongLattice("expected the lattice U^3 + (-2)^2")


def same_orbit_O_plus_og6(v, w):
    """(norm, div) decides O+-orbits of primitive vectors of U^3 + (-2)^2."""
    _require_og6(v)
    _require_og6(w)
    for x in (v, w):
        if not is_primitive(x):
            raise NotPrimitive("orbit test needs primitive vectors")
    return v.norm() == w.norm() and divisibility(v) == divisibility(w)


def summand_swap(lattice=OG6):
    """Exchange of the two (-2) generators of U^3 + (-2)^2."""
    n = lattice.rank
    perm = list(range(n))
    perm[n - 2], perm[n - 1] = n - 1, n - 2
    return Isometry(tuple(tuple(int(perm[j] == i) for j in range(n)) for i in range(n)), lattice)


def o_plus_witness(v, w):
    """A word in O+ of U^3 + (-2)^2 mapping v to w, when their (norm, div) agree.

    Equal discriminant classes are handled by `transport`.  Otherwise both
    classes have q-value 3/2 and the summand swap moves one onto the other.
    """
    if not same_orbit_O_plus_og6(v, w):
        raise OrbitMismatch("norm or divisibility differ")
    if orbit_invariants(v).key() == orbit_invariants(w).key():
        return transport(v, w)
    s = summand_swap(v.lattice)
    sv = LatticeVector(la.matvec(s.matrix, v.coords), v.lattice)
    word = transport(sv, w) + IsometryWord((Opaque(s.matrix, "summand-swap"),), v.lattice)
    if la.matvec(word.evaluate().matrix, v.coords) != w.coords:
        raise InternalCaseFailure("O+ witness does not map v to w")
    return word


# canonical representatives

def canonical_representative(lattice, inv):
    """d e1 + k f1 + d*mu, where mu is the reduced lift of the class.

    mu is the unique representative of the discriminant class with all
    coordinates in [0, 1); its coordinates on the U summands vanish.
    """
    p1, _ = _require_u2(lattice)
    d, n = inv.div, inv.norm
    mu = tuple(x - floor(x) for x in inv.disc.lift().coords)
    lam = tuple(d * x for x in mu)
    k = Fraction(n - lattice.pair(lam, lam), 2 * d)
    coords = list(lam)
    coords[p1] += d
    coords[p1 + 1] += k
    if any(Fraction(x).denominator != 1 for x in coords):
        raise InternalCaseFailure("canonical representative is not integral")
    return LatticeVector(tuple(int(x) for x in coords), lattice)


class _Reducer:
    """Applies transvections to a vector and records them."""

    def __init__(self, v):
        self.lat = v.lattice
        self.gram = self.lat.gram
        self.v = list(v.coords)
        self.steps = []
        n = self.lat.rank
        p1, p2 = _require_u2(self.lat)
        self.p1, self.p2 = p1, p2
        self.rest = [i for i in range(n) if i not in (p1, p1 + 1, p2, p2 + 1)]
        unit = lambda i: tuple(int(i == j) for j in range(n))
        self.E1, self.F1, self.E2, self.F2 = unit(p1), unit(p1 + 1), unit(p2), unit(p2 + 1)
        self.budget = 10000

    def t(self, e, a):
        if not any(a):
            return
        self.budget -= 1
        if self.budget < 0:
            raise SearchExhausted("reduction did not terminate")
        pair = self.lat.pair
        v = self.v
        av, ev, half = pair(a, v), pair(e, v), pair(a, a) // 2
        self.v = [x - av * ei + ev * ai - half * ev * ei for x, ei, ai in zip(v, e, a)]
        self.steps.append(Transvection(e, tuple(a)))

    def scaled(self, u, k):
        return tuple(k * x for x in u)

    # X = [[a, c], [-g, b]] with a, b, c, g the e1, f1, e2, f2 coefficients
    def X(self):
        v = self.v
        return v[self.p1], v[self.p2], -v[self.p2 + 1], v[self.p1 + 1]

    def r1_add(self, k):  # R1 += k R2
        self.t(self.E1, self.scaled(self.E2, k))

    def r2_add(self, k):  # R2 += k R1
        self.t(self.F1, self.scaled(self.F2, -k))

    def c1_add(self, k):  # C1 += k C2
        self.t(self.E1, self.scaled(self.F2, -k))

    def c2_add(self, k):  # C2 += k C1
        self.t(self.F1, self.scaled(self.E2, k))

    def rotate_rows(self, positive_top):
        # (R1, R2) -> (-R2, R1) or (R2, -R1), picking the sign of the new X00
        x10 = self.X()[2]
        if (-x10 > 0) == positive_top:
            self.r2_add(1), self.r1_add(-1), self.r2_add(1)
        else:
            self.r1_add(1), self.r2_add(-1), self.r1_add(1)

    def rotate_cols(self, positive_left):
        x01 = self.X()[1]
        if (-x01 > 0) == positive_left:
            self.c2_add(1), self.c1_add(-1), self.c2_add(1)
        else:
            self.c1_add(1), self.c2_add(-1), self.c1_add(1)

    def smith(self):
        """Bring X to diag(d1, d2) with d1 = gcd of entries, d1 >= 0, d1 | d2."""
        while True:
            x00, x01, x10, x11 = self.X()
            if not (x00 or x01 or x10 or x11):
                return
            if x10:
                if x00 == 0 or abs(x10) < abs(x00):
                    self.rotate_rows(True)
                else:
                    self.r2_add(-(x10 // x00))
                continue
            if x01:
                if x00 == 0 or abs(x01) < abs(x00):
                    self.rotate_cols(True)
                else:
                    self.c2_add(-(x01 // x00))
                continue
            if x00 == 0:
                # only x11 is nonzero: move it to the top row
                self.r1_add(1)
                continue
            if x11 % x00:
                self.r1_add(1)
                continue
            if x00 < 0:
                self.rotate_rows(True)
                self.rotate_rows(True)
                continue
            return

    def rest_part(self):
        return tuple(self.v[i] for i in self.rest)

    def embed_rest(self, y):
        out = [0] * self.lat.rank
        for i, c in zip(self.rest, y):
            out[i] = c
        return tuple(out)

    def rest_pairings(self):
        x = self.rest_part()
        return tuple(sum(self.gram[i][j] * c for j, c in zip(self.rest, x)) for i in self.rest)

    def reduce(self):
        self.smith()
        g0 = self.rest_pairings()
        delta, coeffs = la.ext_gcd_vector(g0)
        x00, _, _, x11 = self.X()
        if delta and (x00 == 0 or delta % x00):
            # t(e2, y) with (y, x) = -delta puts delta into the e2 slot
            y = self.embed_rest(tuple(-c for c in coeffs))
            self.t(self.E2, y)
            self.smith()
        d = self.X()[0]
        if d <= 0:
            raise InternalCaseFailure("reduction left a nonpositive pivot")
        x = self.rest_part()
        y = tuple(-(c // d) for c in x)
        # t(f1, y) replaces x by x + d y, reducing x/d modulo the lattice
        self.t(self.F1, self.embed_rest(y))
        return d


def reduce_to_canonical(v):
    """Word W (as an IsometryWord) with W(v) = canonical representative."""
    inv = orbit_invariants(v)
    red = _Reducer(v)
    d = red.reduce()
    target = canonical_representative(v.lattice, inv)
    if d != inv.div or tuple(red.v) != target.coords:
        raise InternalCaseFailure("reduction did not reach the canonical representative")
    atoms = simplify_transvections(list(reversed(red.steps)))
    return IsometryWord(tuple(atoms), v.lattice), target


def transport(v, w):
    """Transvection word g with g(v) = w, for vectors with equal invariants."""
    if v.lattice != w.lattice:
        raise LatticeMismatch("vectors live in different lattices")
    if orbit_invariants(v).key() != orbit_invariants(w).key():
        raise OrbitMismatch("orbit invariants differ")
    if v.coords == w.coords:
        return IsometryWord((), v.lattice)
    to_v, _ = reduce_to_canonical(v)
    to_w, _ = reduce_to_canonical(w)
    word = to_w.inverse() + to_v
    word = IsometryWord(tuple(simplify_transvections(word.atoms)), v.lattice)
    g = word.evaluate()
    if la.matvec(g.matrix, v.coords) != w.coords:
        raise InternalCaseFailure("transport word does not map v to w")
    return word


# brute-force oracle

def orbit_oracle_bfs(generators, v, box):
    """Closure of {v} under the generators and their inverses, inside the box.

    Only moves whose result stays within the coordinate box are followed, so
    this is the orbit of v in the graph on box vectors.  Sorted output.
    """
    if max((abs(c) for c in v.coords), default=0) > box:
        raise ValueError("box must contain v")
    mats = []
    for g in generators:
        mats.append(g.matrix)
        mats.append(la.int_inverse(g.matrix))
    seen = {v.coords}
    frontier = [v.coords]
    while frontier:
        nxt = []
        for x in frontier:
            for m in mats:
                y = la.matvec(m, x)
                if y not in seen and all(abs(c) <= box for c in y):
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return [LatticeVector(c, v.lattice) for c in sorted(seen)]


def eichler_generators(lattice):
    """A fixed list of transvections built from the first two U planes.

    t(e1,e2), t(e1,f2), t(f1,e2), t(f1,f2), then t(x, b) for x in
    {e1, f1, e2, f2} and each basis vector b of the remaining summands, and
    finally t(e1, e2 + b1), t(f1, f2 + b1) for the first such b1.
    """
    p1, p2 = _require_u2(lattice)
    n = lattice.rank
    unit = lambda i: tuple(int(i == j) for j in range(n))
    e1, f1, e2, f2 = unit(p1), unit(p1 + 1), unit(p2), unit(p2 + 1)
    rest = [unit(i) for i in range(n) if i not in (p1, p1 + 1, p2, p2 + 1)]
    pairs = [(e1, e2), (e1, f2), (f1, e2), (f1, f2)]
    for b in rest:
        pairs += [(e1, b), (f1, b), (e2, b), (f2, b)]
    if rest:
        b = rest[0]
        pairs += [(e1, tuple(x + y for x, y in zip(e2, b))), (f1, tuple(x + y for x, y in zip(f2, b)))]
    return [Isometry(transvection_matrix(lattice.gram, e, a), lattice) for e, a in pairs]


# words in SO+(U^2)

@dataclass(frozen=True)
class DepthExceeded:
    depth: int
    explored: int


def u2_letters(lattice=None):
    """The four generating transvections of SO+(U^2) and their inverses."""
    lat = lattice or standard_lattice(2, 0)
    n = lat.rank
    unit = lambda i: tuple(int(i == j) for j in range(n))
    e1, f1, e2, f2 = unit(0), unit(1), unit(2), unit(3)
    base = [Transvection(e2, e1), Transvection(e2, f1), Transvection(f2, e1), Transvection(f2, f1)]
    return base + [t.inverse() for t in base]


def decompose_SOplus_U2(g, depth=12):
    """Shortest word in the four generators (and inverses) evaluating to g.

    Meet-in-the-middle breadth-first search from both ends; returns a
    DepthExceeded report when no word of length <= depth exists.
    """
    lat = g.lattice
    if lat.gram != standard_lattice(2, 0).gram:
        raise WrongLattice("expected U^2")
    if det(g) != 1 or not preserves_positive_cone_orientation(g):
        raise NotInSOPlus("g is not in SO+(U^2)")
    letters = u2_letters(lat)
    mats = [a.matrix(lat) for a in letters]
    start = la.identity(4)
    goal = g.matrix
    if goal == start:
        return IsometryWord((), lat)
    # forward: M = l_1 ... l_k ; backward: goal * (l'_1 ... l'_j)^-1 ; meet when equal
    fwd = {start: ()}
    bwd = {goal: ()}
    fwd_layer, bwd_layer = [start], [goal]
    inv_index = [4, 5, 6, 7, 0, 1, 2, 3]
    fd = bd = 0
    explored = 2
    while fd + bd < depth:
        grow_fwd = len(fwd_layer) <= len(bwd_layer)
        layer, table, other = (fwd_layer, fwd, bwd) if grow_fwd else (bwd_layer, bwd, fwd)
        new_layer = []
        for m in layer:
            path = table[m]
            for i, lm in enumerate(mats):
                if path and path[-1] == inv_index[i]:
                    continue
                if grow_fwd:
                    nm = la.matmul(m, lm)
                else:
                    nm = la.matmul(m, mats[inv_index[i]])
                if nm in table:
                    continue
                table[nm] = path + (i,)
                new_layer.append(nm)
                explored += 1
                if nm in other:
                    fpath = table[nm] if grow_fwd else other[nm]
                    bpath = other[nm] if grow_fwd else table[nm]
                    # goal = fwd-product * (bwd-product)^-1 ... see derivation below
                    idx = list(fpath) + [i2 for i2 in reversed(bpath)]
                    word = IsometryWord(tuple(letters[k] for k in idx), lat)
                    if word.evaluate().matrix != goal:
                        raise InternalCaseFailure("meet-in-the-middle word is wrong")
                    return word
        if grow_fwd:
            fwd_layer, fd = new_layer, fd + 1
        else:
            bwd_layer, bd = new_layer, bd + 1
        if not new_layer:
            break
    return DepthExceeded(depth, explored)
