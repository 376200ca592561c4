"""Wall divisors, chamber queries and lagrangian classes in U^3 + (-2)^2.

Walls live in a hyperbolic sublattice `pic` of the OG6 lattice; their
divisibility is always measured in the ambient lattice.  Separating walls
between two positive classes are enumerated exactly: the pairing j = (w, k)
is bounded by Cauchy-Schwarz in the negative definite part k-perp, and for
each j the remaining coordinates are found by Fincke-Pohst enumeration.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import ceil, floor, gcd, isqrt

import numpy as np

from . import _linalg as la
from .errors import (NotHyperbolic, NotIsotropic, NotPositive, NotPrimitive,
                     ReferenceOnWall, WrongLattice, ZeroVector,
                     InternalCaseFailure)
from .lattice import standard_lattice

OG6 = standard_lattice(3, 2)

STABLY_PRIME_EXCEPTIONAL = "StablyPrimeExceptional"
WALL_NOT_EXCEPTIONAL = "WallNotExceptional"
NOT_A_WALL = "NotAWall"
NOT_NEGATIVE = "NotNegative"

KAHLER_WALLS = frozenset({(-2, 1), (-2, 2), (-4, 2)})
BK_WALLS = frozenset({(-2, 2), (-4, 2)})


# classification

@dataclass(frozen=True)
class WallClassification:
    kind: str
    norm: int
    div: int
    witness: str


def classify_norm_div(n, d):
    if n >= 0:
        return NOT_NEGATIVE, "square %d is not negative" % n
    if d == 2 and n in (-2, -4):
        return STABLY_PRIME_EXCEPTIONAL, "square %d and divisibility 2" % n
    if d == 1 and n == -2:
        return WALL_NOT_EXCEPTIONAL, "square -2 and divisibility 1: a wall, but no multiple is effective prime"
    return NOT_A_WALL, "(square, divisibility) = (%d, %d) is not in the wall table" % (n, d)


def classify_divisor(v):
    """Wall type of a primitive class of U^3 + (-2)^2 from its square and divisibility."""
    if v.lattice.gram != OG6.gram:
        raise WrongLattice("expected the lattice U^3 + (-2)^2")
    if v.is_zero():
        raise ZeroVector("zero class")
    if la.content(v.coords) != 1:
        raise NotPrimitive("class must be primitive")
    n = v.norm()
    d = la.content(la.matvec(OG6.gram, v.coords))
    kind, text = classify_norm_div(n, d)
    return WallClassification(kind, n, d, text)


def proof_form(letter, a):
    """The candidate classes A-D with parameter a, in (e1, f1, e2, f2, e3, f3, zeta, eps).

    A: a e1 - f1;  B: -2a e1 + 2 f1 - zeta - eps;  C: -2a e1 + 2 f1 - zeta;
    D: -2a e1 + 2 f1 - eps.  (Mukai classes (r, c, r) map to c + r zeta.)
    """
    if letter == "A":
        c = (a, -1, 0, 0, 0, 0, 0, 0)
    elif letter == "B":
        c = (-2 * a, 2, 0, 0, 0, 0, -1, -1)
    elif letter == "C":
        c = (-2 * a, 2, 0, 0, 0, 0, -1, 0)
    elif letter == "D":
        c = (-2 * a, 2, 0, 0, 0, 0, 0, -1)
    else:
        raise ValueError("unknown form %r" % (letter,))
    return OG6.vector(c)


# Picard lattices

@dataclass(frozen=True)
class PicardData:
    """A hyperbolic sublattice of the ambient lattice, given by a basis.

    Walls are searched among classes of this sublattice that are primitive
    in the ambient lattice; `saturated` records whether the sublattice is
    primitive, in which case no ambient class on the same rays is missed.
    """
    basis: tuple
    ambient: object = OG6
    gram: tuple = field(default=None, compare=False)
    saturated: bool = field(default=None, compare=False)

    def __post_init__(self):
        basis = tuple(tuple(int(x) for x in b) for b in self.basis)
        object.__setattr__(self, "basis", basis)
        if not basis or any(len(b) != self.ambient.rank for b in basis):
            raise ValueError("basis vectors must have ambient rank")
        if la.rank(basis) != len(basis):
            raise ValueError("basis vectors are linearly dependent")
        _, d, _ = la.smith_normal_form(basis)
        object.__setattr__(self, "saturated", all(d[i][i] == 1 for i in range(len(basis))))
        emb = la.transpose(basis)
        gram = la.matmul(basis, la.matmul(self.ambient.gram, emb))
        object.__setattr__(self, "gram", gram)
        if la.signature(gram) != (1, len(basis) - 1):
            raise NotHyperbolic("induced form does not have signature (1, rho - 1)")

    @property
    def rank(self):
        return len(self.basis)

    def pair(self, x, y):
        return la.bilinear(self.gram, x, y)

    def to_ambient(self, w):
        return tuple(sum(c * b[i] for c, b in zip(w, self.basis)) for i in range(self.ambient.rank))

    def ambient_div(self, w):
        return la.content(la.matvec(self.ambient.gram, self.to_ambient(w)))


@dataclass(frozen=True)
class Wall:
    coords: tuple    # in the pic basis
    ambient: tuple   # in ambient coordinates
    norm: int
    div: int

    def sort_key(self):
        return (-self.norm, self.div, self.coords)


@dataclass(frozen=True)
class WallEnumeration:
    separating: tuple
    through_x: tuple


def _frac_vec(x):
    return tuple(Fraction(c) for c in x)


def _check_positive(pic, x, k):
    if len(x) != pic.rank or len(k) != pic.rank:
        raise ValueError("x and k must have pic rank")
    if pic.pair(x, x) <= 0 or pic.pair(k, k) <= 0:
        raise NotPositive("x and k must have positive square")
    if pic.pair(x, k) <= 0:
        raise NotPositive("x and k must lie in the same component of the positive cone")


def _types_by_norm(wall_types):
    out = {}
    for n, d in wall_types:
        if n >= 0:
            raise ValueError("wall norms must be negative")
        out.setdefault(n, set()).add(d)
    return out


def pairing_bound(pic, x, k, n):
    """Upper bound for (w, k)^2 over w^2 = n with (w, x) <= 0 <= (w, k)."""
    kk, xx, xk = pic.pair(k, k), pic.pair(x, x), pic.pair(x, k)
    x_perp_sq = Fraction(xk * xk) / kk - xx   # = -(x')^2 >= 0
    return kk * abs(n) * x_perp_sq / xx


def _ldl(p):
    m = len(p)
    q = [[Fraction(v) for v in row] for row in p]
    for i in range(m):
        for j in range(i + 1, m):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, m):
            for l in range(k, m):
                q[k][l] -= q[k][i] * q[i][l]
    return q


def _floor_upper(a, S):
    """Largest integer t with t + a <= sqrt(S)."""
    t = floor(float(S) ** 0.5 - float(a)) + 1
    ok = lambda t: t + a <= 0 or (t + a) ** 2 <= S
    while ok(t + 1):
        t += 1
    while not ok(t):
        t -= 1
    return t


def _ceil_lower(a, S):
    """Smallest integer t with t + a >= -sqrt(S)."""
    t = ceil(-float(S) ** 0.5 - float(a)) - 1
    ok = lambda t: t + a >= 0 or (t + a) ** 2 <= S
    while ok(t - 1):
        t -= 1
    while not ok(t):
        t += 1
    return t


def short_vectors(p, tau, bound):
    """All integer z with (z + tau)^T p (z + tau) <= bound, p positive definite."""
    m = len(p)
    if m == 0:
        return [()] if bound >= 0 else []
    q = _ldl(p)
    out = []
    z = [0] * m

    def rec(i, remaining):
        c = sum(q[i][j] * (z[j] + tau[j]) for j in range(i + 1, m))
        S = remaining / q[i][i]
        a = tau[i] + c
        lo, hi = _ceil_lower(a, S), _floor_upper(a, S)
        for t in range(lo, hi + 1):
            z[i] = t
            used = q[i][i] * (t + a) ** 2
            if i == 0:
                out.append(tuple(z))
            else:
                rec(i - 1, remaining - used)
        z[i] = 0

    if bound >= 0:
        rec(m - 1, Fraction(bound))
    return out


def _vectors_with_pairing(pic, h, m, n):
    """All integer w with h.w = m and w^2 = n, where k-perp = ker(h) is negative definite."""
    rho = pic.rank
    _, c = la.ext_gcd_vector(h)
    w0 = tuple(m * x for x in c)
    K = la.integer_kernel((tuple(h),), rho)
    if not K:
        return [w0] if pic.pair(w0, w0) == n else []
    A = la.matmul(K, la.matmul(pic.gram, la.transpose(K)))
    b = la.matvec(K, la.matvec(pic.gram, w0))
    tau = la.matvec(la.inverse(A), b)
    P = tuple(tuple(-x for x in row) for row in A)
    R = pic.pair(w0, w0) - n - la.dot(tau, b)
    out = []
    for z in short_vectors(P, tau, R):
        w = tuple(w0[i] + sum(z[r] * K[r][i] for r in range(len(K))) for i in range(rho))
        if pic.pair(w, w) == n:
            out.append(w)
    return out


def _k_direction(pic, k):
    gk = la.matvec(pic.gram, k)
    den = 1
    for v in gk:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in gk]
    g = la.content(ints)
    return tuple(v // g for v in ints), Fraction(g, den)


def enumerate_separating_walls(pic, x, k, wall_types):
    """Every primitive wall class strictly separating x from k, or containing x.

    Walls are signed so that (w, k) > 0.  Raises ReferenceOnWall if some
    class of the given type is orthogonal to k.
    """
    x, k = _frac_vec(x), _frac_vec(k)
    _check_positive(pic, x, k)
    h, g = _k_direction(pic, k)
    sep, through = [], []
    for n, divs in sorted(_types_by_norm(wall_types).items()):
        B = pairing_bound(pic, x, k, n)
        mmax = isqrt(int(B / (g * g)) + 1)
        while mmax * mmax * g * g > B:
            mmax -= 1
        for m in range(0, mmax + 1):
            for w in _vectors_with_pairing(pic, h, m, n):
                if la.content(pic.to_ambient(w)) != 1:
                    continue
                d = pic.ambient_div(w)
                if d not in divs:
                    continue
                if m == 0:
                    raise ReferenceOnWall("k lies on the wall of %s" % (w,))
                wall = Wall(w, pic.to_ambient(w), n, d)
                wx = pic.pair(w, x)
                if wx < 0:
                    sep.append(wall)
                elif wx == 0:
                    through.append(wall)
    key = Wall.sort_key
    return WallEnumeration(tuple(sorted(sep, key=key)), tuple(sorted(through, key=key)))


def brute_force_box(pic, x, k, wall_types):
    """Coordinate box containing every candidate wall, from a majorant of the form.

    E(w) = 2 (w,k)^2 / k^2 - w^2 is positive definite; on candidates
    E(w) <= 2 J^2 / k^2 + |n| with J^2 the pairing bound, and
    |w_i| <= sqrt(E_max * (E^-1)_ii).
    """
    x, k = _frac_vec(x), _frac_vec(k)
    kk = pic.pair(k, k)
    gk = la.matvec(pic.gram, k)
    E = tuple(tuple(2 * gk[i] * gk[j] / kk - pic.gram[i][j] for j in range(pic.rank))
              for i in range(pic.rank))
    Einv = la.inverse(E)
    box = 0
    for n, _ in wall_types:
        emax = 2 * pairing_bound(pic, x, k, n) / kk + abs(n)
        for i in range(pic.rank):
            s = emax * Einv[i][i]
            r = isqrt(int(s))
            while (r + 1) ** 2 <= s:
                r += 1
            box = max(box, r)
    return box


def brute_force_walls(pic, x, k, wall_types, box=None):
    """Independent oracle: scan every integer vector of a coordinate box."""
    x, k = _frac_vec(x), _frac_vec(k)
    _check_positive(pic, x, k)
    if box is None:
        box = brute_force_box(pic, x, k, wall_types)
    rho = pic.rank
    G = np.array(pic.gram, dtype=np.int64)

    def scaled(v):
        gv = la.matvec(pic.gram, v)
        den = 1
        for c in gv:
            den = den * c.denominator // gcd(den, c.denominator)
        return np.array([int(c * den) for c in gv], dtype=np.int64)

    sk, sx = scaled(k), scaled(x)
    by_norm = _types_by_norm(wall_types)
    sep, through = [], []
    axes = np.arange(-box, box + 1, dtype=np.int64)
    if rho > 1:
        T = np.array(np.meshgrid(*([axes] * (rho - 1)), indexing="ij")).reshape(rho - 1, -1).T
    else:
        T = np.zeros((1, 0), dtype=np.int64)
    for first in range(-box, box + 1):
        W = np.empty((T.shape[0], rho), dtype=np.int64)
        W[:, 0] = first
        W[:, 1:] = T
        norms = np.einsum("ij,jk,ik->i", W, G, W)
        wk, wx = W @ sk, W @ sx
        mask = np.isin(norms, list(by_norm)) & (wk >= 0)
        for idx in np.nonzero(mask)[0]:
            w = tuple(int(c) for c in W[idx])
            n = int(norms[idx])
            if la.content(pic.to_ambient(w)) != 1:
                continue
            d = pic.ambient_div(w)
            if d not in by_norm[n]:
                continue
            if wk[idx] == 0:
                raise ReferenceOnWall("k lies on the wall of %s" % (w,))
            wall = Wall(w, pic.to_ambient(w), n, d)
            if wx[idx] < 0:
                sep.append(wall)
            elif wx[idx] == 0:
                through.append(wall)
    key = Wall.sort_key
    return WallEnumeration(tuple(sorted(sep, key=key)), tuple(sorted(through, key=key)))


@dataclass(frozen=True)
class ChamberReport:
    in_chamber: bool
    separating_walls: tuple
    on_boundary: bool
    walls_through_x: tuple = ()


def kahler_chamber_query(pic, x, k):
    """Is x in the open chamber of k cut out by all wall divisors?"""
    en = enumerate_separating_walls(pic, x, k, KAHLER_WALLS)
    sep, through = en.separating, en.through_x
    return ChamberReport(not sep and not through, sep, bool(through) and not sep, through)


def birational_kahler_closure_query(pic, x, k):
    """Is x in the closure of the chamber of k cut out by divisibility-2 walls only?"""
    en = enumerate_separating_walls(pic, x, k, BK_WALLS)
    sep, through = en.separating, en.through_x
    return ChamberReport(not sep, sep, bool(through) and not sep, through)


# lagrangian fibrations

@dataclass(frozen=True)
class LagrangianReport:
    primitive_part: tuple
    divisibility: int
    fibration_exists: bool = True
    base: str = "P3"
    fiber_polarization: tuple = (1, 2, 2)


def detect_lagrangian(D):
    """Isotropic nonzero class: primitive part has divisibility 1 (single orbit)."""
    if D.lattice.gram != OG6.gram:
        raise WrongLattice("expected the lattice U^3 + (-2)^2")
    if D.is_zero():
        raise ZeroVector("zero class")
    if D.norm() != 0:
        raise NotIsotropic("class has square %d" % D.norm())
    c = la.content(D.coords)
    prim = tuple(x // c for x in D.coords)
    d = la.content(la.matvec(OG6.gram, prim))
    if d != 1:
        raise InternalCaseFailure("isotropic primitive class of divisibility %d" % d)
    return LagrangianReport(prim, d)


@dataclass(frozen=True)
class Div2ScanReport:
    box: int
    scanned: int
    primitive_div2: int
    residues: tuple      # (residue mod 8, count) pairs, sorted
    isotropic: int

    @property
    def supported_on_4_6(self):
        return all(r in (4, 6) for r, _ in self.residues)


def isotropic_div2_scan(box, rank_u=3, rank_m=2):
    """Norms mod 8 of all primitive divisibility-2 vectors with |coords| <= box."""
    if box < 1:
        raise ValueError("box must be at least 1")
    lat = standard_lattice(rank_u, rank_m)
    n = lat.rank
    G = np.array(lat.gram, dtype=np.int64)
    axes = np.arange(-box, box + 1, dtype=np.int64)
    head = min(2, n - 1)
    tail = n - head
    T = np.array(np.meshgrid(*([axes] * tail), indexing="ij"), dtype=np.int64).reshape(tail, -1).T
    hist = np.zeros(8, dtype=np.int64)
    scanned = prim_div2 = 0
    for pre in product(range(-box, box + 1), repeat=head):
        V = np.empty((T.shape[0], n), dtype=np.int64)
        V[:, :head] = pre
        V[:, head:] = T
        scanned += V.shape[0]
        content = np.gcd.reduce(np.abs(V), axis=1)
        div = np.gcd.reduce(np.abs(V @ G), axis=1)
        mask = (content == 1) & (div == 2)
        S = V[mask]
        norms = np.einsum("ij,jk,ik->i", S, G, S)
        hist += np.bincount(norms % 8, minlength=8)
        prim_div2 += int(mask.sum())
    residues = tuple((r, int(c)) for r, c in enumerate(hist) if c)
    iso_total = 0
    if hist[0]:
        iso_total = _count_isotropic(lat, box)
    return Div2ScanReport(box, scanned, prim_div2, residues, iso_total)


def _count_isotropic(lat, box):
    count = 0
    for v in product(range(-box, box + 1), repeat=lat.rank):
        if any(v) and la.content(v) == 1 and lat.pair(v, v) == 0 \
                and la.content(la.matvec(lat.gram, v)) == 2:
            count += 1
    return count
