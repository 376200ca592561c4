"""Exact integer and rational matrix helpers.

Matrices are tuples of row tuples, entries int or Fraction.  Nothing here
uses floating point.  The Smith form is written out by hand because we need
both transforms and a pivot rule that does not change between runs.
"""
from fractions import Fraction
from math import gcd


def as_matrix(rows):
    return tuple(tuple(r) for r in rows)


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(a):
    return tuple(zip(*a)) if a else ()


def matmul(a, b):
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def matvec(a, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def bilinear(gram, u, v):
    return dot(u, matvec(gram, v))


def is_integral(x):
    if isinstance(x, int):
        return True
    return Fraction(x).denominator == 1


def to_int_matrix(a):
    out = []
    for row in a:
        r = []
        for x in row:
            x = Fraction(x)
            if x.denominator != 1:
                raise ValueError("matrix is not integral")
            r.append(x.numerator)
        out.append(tuple(r))
    return tuple(out)


def content(v):
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g


def block_diag(*blocks):
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(b)
    return as_matrix(out)


def hstack(a, b):
    return tuple(tuple(ra) + tuple(rb) for ra, rb in zip(a, b))


def det(a):
    """Determinant; Bareiss elimination for integers, Gauss for rationals."""
    n = len(a)
    if n == 0:
        return 1
    if all(isinstance(x, int) for row in a for x in row):
        m = [list(r) for r in a]
        sign, prev = 1, 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1]
    m = [[Fraction(x) for x in r] for r in a]
    d = Fraction(1)
    for k in range(n):
        p = next((i for i in range(k, n) if m[i][k] != 0), None)
        if p is None:
            return Fraction(0)
        if p != k:
            m[k], m[p] = m[p], m[k]
            d = -d
        d *= m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            if f:
                for j in range(k, n):
                    m[i][j] -= f * m[k][j]
    return d


def inverse(a):
    """Exact inverse over the rationals; entries returned as Fraction."""
    n = len(a)
    m = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
         for i, r in enumerate(a)]
    for k in range(n):
        p = next((i for i in range(k, n) if m[i][k] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        m[k], m[p] = m[p], m[k]
        piv = m[k][k]
        m[k] = [x / piv for x in m[k]]
        for i in range(n):
            if i != k and m[i][k] != 0:
                f = m[i][k]
                m[i] = [x - f * y for x, y in zip(m[i], m[k])]
    return tuple(tuple(r[n:]) for r in m)


def int_inverse(a):
    """Inverse of a unimodular integer matrix, as integers."""
    return to_int_matrix(inverse(a))


def rank(a):
    if not a:
        return 0
    m = [[Fraction(x) for x in r] for r in a]
    rows, cols = len(m), len(m[0])
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        for i in range(r + 1, rows):
            f = m[i][c] / m[r][c]
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == rows:
            break
    return r


def smith_normal_form(a):
    """Return (U, D, V) with U*a*V = D diagonal, U and V unimodular.

    Diagonal entries are nonnegative and each divides the next.  The pivot
    is the nonzero entry of least absolute value in the remaining block,
    ties going to the leftmost column and then the topmost row.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    m = [list(r) for r in a]
    u = [list(r) for r in identity(rows)]
    v = [list(r) for r in identity(cols)]

    def row_add(dst, src, k):  # row dst += k * row src
        m[dst] = [x + k * y for x, y in zip(m[dst], m[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def col_add(dst, src, k):  # col dst += k * col src
        for r in m:
            r[dst] += k * r[src]
        for r in v:
            r[dst] += k * r[src]

    def row_swap(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def col_swap(i, j):
        for r in m:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    for t in range(min(rows, cols)):
        while True:
            best = None
            for j in range(t, cols):
                for i in range(t, rows):
                    x = m[i][j]
                    if x != 0 and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                break
            _, i, j = best
            if i != t:
                row_swap(i, t)
            if j != t:
                col_swap(j, t)
            p = m[t][t]
            for i in range(t + 1, rows):
                if m[i][t]:
                    row_add(i, t, -(m[i][t] // p))
            for j in range(t + 1, cols):
                if m[t][j]:
                    col_add(j, t, -(m[t][j] // p))
            if any(m[i][t] for i in range(t + 1, rows)) or any(m[t][j] for j in range(t + 1, cols)):
                continue
            bad = next((i for i in range(t + 1, rows)
                        if any(m[i][j] % p for j in range(t + 1, cols))), None)
            if bad is None:
                break
            row_add(t, bad, 1)
        if m[t][t] < 0:
            m[t] = [-x for x in m[t]]
            u[t] = [-x for x in u[t]]
    return as_matrix(u), as_matrix(m), as_matrix(v)


def row_hnf(rows):
    """Hermite normal form (row style) of the integer row span; zero rows dropped."""
    a = [list(r) for r in rows]
    if not a:
        return ()
    n_rows, n_cols = len(a), len(a[0])
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        while True:
            nz = [i for i in range(r, n_rows) if a[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: (abs(a[i][c]), i))
            a[r], a[p] = a[p], a[r]
            clean = True
            for i in range(r + 1, n_rows):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    if a[i][c]:
                        clean = False
            if clean:
                break
        if a[r][c] == 0:
            continue
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
        for i in range(r):
            q = a[i][c] // a[r][c]
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
        r += 1
    return as_matrix(a[:r])


def integer_kernel(a, ncols=None):
    """Basis (as rows, HNF-reduced) of the saturated lattice {x : a x = 0}."""
    if not a:
        return identity(ncols)
    _, d, v = smith_normal_form(a)
    cols = len(a[0])
    r = sum(1 for i in range(min(len(d), cols)) if d[i][i] != 0)
    basis = [tuple(v[i][j] for i in range(cols)) for j in range(r, cols)]
    return row_hnf(basis)


def ext_gcd_vector(xs):
    """Return (g, c) with g = gcd(xs) >= 0 and sum(c_i x_i) = g."""
    g, coeffs = 0, [0] * len(xs)
    for i, x in enumerate(xs):
        if x == 0:
            continue
        # combine g (with coeffs) and x
        a, b = g, x
        s0, s1, t0, t1 = 1, 0, 0, 1
        while b:
            q = a // b
            a, b = b, a - q * b
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if a < 0:
            a, s0, t0 = -a, -s0, -t0
        coeffs = [s0 * c for c in coeffs]
        coeffs[i] = t0
        g = a
    return g, tuple(coeffs)


def diagonalize(gram, order=None):
    """Rational symmetric elimination.

    Returns a list of (vector, norm) with mutually orthogonal vectors
    spanning the rational space.  `order` permutes the starting basis; the
    pivot is always the first remaining vector with nonzero norm, and if
    every remaining norm vanishes the first nonzero pairing (i, k) is used to
    replace v_i by v_i + v_k.
    """
    n = len(gram)
    order = list(range(n)) if order is None else list(order)
    g = [[Fraction(x) for x in r] for r in gram]

    def form(x, y):
        return sum(x[i] * g[i][j] * y[j] for i in range(n) for j in range(n) if x[i] and y[j])

    rest = [tuple(Fraction(int(i == k)) for i in range(n)) for k in order]
    out = []
    while rest:
        p = next((i for i, x in enumerate(rest) if form(x, x) != 0), None)
        if p is None:
            pair = next(((i, k) for i in range(len(rest)) for k in range(i + 1, len(rest))
                         if form(rest[i], rest[k]) != 0), None)
            if pair is None:
                out.extend((x, Fraction(0)) for x in rest)
                break
            i, k = pair
            rest[i] = tuple(x + y for x, y in zip(rest[i], rest[k]))
            p = i
        piv = rest.pop(p)
        nn = form(piv, piv)
        out.append((piv, nn))
        reduced = []
        for y in rest:
            c = form(y, piv) / nn
            reduced.append(tuple(a - c * b for a, b in zip(y, piv)) if c else y)
        rest = reduced
    return out


def signature(gram):
    d = diagonalize(gram)
    pos = sum(1 for _, x in d if x > 0)
    neg = sum(1 for _, x in d if x < 0)
    return pos, neg
