r"""
Exact integer and rational linear algebra.

Matrices are lists of lists (row major) over ``int`` or
``fractions.Fraction``; nothing here ever touches floating point.  This is
the substrate for integral homology (Smith normal form, saturated kernels)
and for the exact cocycle computations (rational solves, characteristic
polynomials, Lie brackets).
"""

from __future__ import annotations

from fractions import Fraction


def zeros(m, n):
    return [[0] * n for _ in range(m)]


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def copy_matrix(a):
    return [list(row) for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, a):
    return [[c * x for x in row] for row in a]


def mat_mul(a, b):
    n, k = len(a), len(b)
    if any(len(row) != k for row in a):
        raise ValueError("inner dimension mismatch")
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def mat_eq(a, b):
    return len(a) == len(b) and all(
        len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb))
        for ra, rb in zip(a, b)
    )


def bracket(a, b):
    """Lie bracket [a, b] = ab - ba."""
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def is_integral(a):
    return all(Fraction(x).denominator == 1 for row in a for x in row)


def to_int_matrix(a):
    if not is_integral(a):
        raise ValueError("matrix is not integral")
    return [[int(x) for x in row] for row in a]


# ---------------------------------------------------------------------------
# Gaussian elimination over the rationals


def _echelon(a):
    """Row echelon form over Q.  Returns (rows, pivot column list)."""
    rows = [[Fraction(x) for x in row] for row in a]
    m = len(rows)
    n = len(rows[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return rows, pivots


def rank(a):
    if not a or not a[0]:
        return 0
    return len(_echelon(a)[1])


def solve_right(a, b):
    """Solve a @ x = b over Q for each column of b.

    ``b`` may be a vector or a matrix of columns.  Returns the solution
    (particular, via the pivot columns) or None if inconsistent.
    """
    vector_input = b and not isinstance(b[0], (list, tuple))
    bm = [[x] for x in b] if vector_input else b
    m = len(a)
    n = len(a[0]) if m else 0
    k = len(bm[0])
    aug = [list(a[i]) + list(bm[i]) for i in range(m)]
    rows, pivots = _echelon(aug)
    pivots_a = [c for c in pivots if c < n]
    if len(pivots_a) != len(pivots):
        return None  # a pivot in the augmented part: inconsistent
    x = [[Fraction(0)] * k for _ in range(n)]
    for r, c in enumerate(pivots_a):
        for j in range(k):
            x[c][j] = rows[r][n + j]
    return [row[0] for row in x] if vector_input else x


def invert(a):
    n = len(a)
    inv = solve_right(a, identity_matrix(n))
    if inv is None or rank(a) != n:
        raise ValueError("matrix is singular")
    return inv


# ---------------------------------------------------------------------------
# Smith normal form and integral lattices


def smith_normal_form(a):
    """Return (d, u, v) with u @ a @ v = d, u and v unimodular, d diagonal
    with d[i][i] dividing d[i+1][i+1]."""
    m = len(a)
    n = len(a[0]) if m else 0
    d = [[int(x) for x in row] for row in a]
    u = identity_matrix(m)
    v = identity_matrix(n)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(i, j, c):
        # row i += c * row j
        d[i] = [x + c * y for x, y in zip(d[i], d[j])]
        u[i] = [x + c * y for x, y in zip(u[i], u[j])]

    def add_col(i, j, c):
        # col i += c * col j
        for row in d:
            row[i] += c * row[j]
        for row in v:
            row[i] += c * row[j]

    t = 0
    while t < min(m, n):
        # locate a nonzero entry of minimal absolute value in the submatrix
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = d[i][j]
                if x != 0 and (best is None or abs(x) < best):
                    best = abs(x)
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            # clear column t
            dirty = False
            for i in range(t + 1, m):
                if d[i][t] != 0:
                    q = d[i][t] // d[t][t]
                    add_row(i, t, -q)
                    if d[i][t] != 0:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, n):
                if d[t][j] != 0:
                    q = d[t][j] // d[t][t]
                    add_col(j, t, -q)
                    if d[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                continue
            # pivot must divide every remaining entry
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if d[i][j] % d[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(t, offender, 1)
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return d, u, v


def kernel_basis(a):
    """Saturated integral basis of {x : a @ x = 0}, as a list of columns."""
    m = len(a)
    n = len(a[0]) if m else 0
    if m == 0 or n == 0:
        return [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    d, _u, v = smith_normal_form(a)
    r = sum(1 for i in range(min(m, n)) if d[i][i] != 0)
    return [[v[i][j] for i in range(n)] for j in range(r, n)]


# ---------------------------------------------------------------------------
# Characteristic polynomial (Faddeev-LeVerrier, exact)


def charpoly(a):
    """Coefficients [1, c1, .., cn] of det(xI - a) = x^n + c1 x^(n-1) + .. + cn.

    Exact; integral input yields integral coefficients.
    """
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    af = [[Fraction(x) for x in row] for row in a]
    coeffs = [Fraction(1)]
    mk = identity_matrix(n)
    for k in range(1, n + 1):
        mk = mat_mul(af, mk)
        ck = -sum(mk[i][i] for i in range(n)) / k
        coeffs.append(ck)
        for i in range(n):
            mk[i][i] += ck
    out = []
    for c in coeffs:
        out.append(int(c) if c.denominator == 1 else c)
    return out


def det(a):
    n = len(a)
    cp = charpoly(a)
    return cp[n] if n % 2 == 0 else -cp[n]


def is_reciprocal(coeffs):
    """True iff the coefficient list is palindromic."""
    return list(coeffs) == list(reversed(coeffs))


# ---------------------------------------------------------------------------
# Incremental rational span (for Lie algebra closures etc.)


class RationalSpan:
    """A growing subspace of Q^n kept in reduced row echelon form."""

    def __init__(self):
        self.rows = []  # rref rows
        self.pivots = []

    @property
    def dim(self):
        return len(self.rows)

    def add(self, vec):
        """Add a vector; returns True if it enlarged the span."""
        v = [Fraction(x) for x in vec]
        for row, p in zip(self.rows, self.pivots):
            if v[p] != 0:
                f = v[p]
                v = [x - f * y for x, y in zip(v, row)]
        p = next((i for i, x in enumerate(v) if x != 0), None)
        if p is None:
            return False
        inv = 1 / v[p]
        v = [x * inv for x in v]
        for row in self.rows:
            if row[p] != 0:
                f = row[p]
                for i in range(len(row)):
                    row[i] -= f * v[i]
        self.rows.append(v)
        self.pivots.append(p)
        return True

    def contains(self, vec):
        v = [Fraction(x) for x in vec]
        for row, p in zip(self.rows, self.pivots):
            if v[p] != 0:
                f = v[p]
                v = [x - f * y for x, y in zip(v, row)]
        return all(x == 0 for x in v)
