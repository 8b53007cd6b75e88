"""Exact integer and rational linear algebra on small dense matrices.

Matrices are lists of row lists over Python ints (or Fraction where noted),
so nothing ever overflows.  A lattice is the row span of its generator
matrix.  All normal forms are canonical, which the rest of the library
relies on for deterministic output.
"""

from fractions import Fraction
from math import gcd


def _lcm(a, b):
    return a * b // gcd(a, b)


def _sign(k):
    """(-1)**k as an exact integer for any integer k."""
    return 1 if k % 2 == 0 else -1


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(m, n):
    return [[0] * n for _ in range(m)]


def transpose(a):
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def mat_mul(a, b):
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def vec_mat(v, a):
    n = len(a[0]) if a else 0
    out = [0] * n
    for c, row in zip(v, a):
        if c:
            for j, x in enumerate(row):
                out[j] += c * x
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[c * x for x in row] for row in a]


def mat_eq(a, b):
    return a == b


def add_scaled_identity(a, c):
    """a + c*I."""
    out = [row[:] for row in a]
    for i in range(len(out)):
        out[i][i] += c
    return out


# ---------------------------------------------------------------------------
# Hermite normal form (row style)
# ---------------------------------------------------------------------------

def hnf(rows):
    """Canonical row Hermite normal form of the lattice spanned by `rows`.

    Pivots are positive, entries above each pivot are reduced into
    [0, pivot).  Zero rows are dropped, so equal lattices give equal
    output lists.
    """
    if not rows:
        return []
    work = [row[:] for row in rows]
    m, n = len(work), len(work[0])
    basis = []
    col = 0
    rstart = 0
    while col < n and rstart < len(work):
        # gather rows with nonzero entry in this column
        while True:
            piv = None
            for i in range(rstart, len(work)):
                if work[i][col]:
                    if piv is None or abs(work[i][col]) < abs(work[piv][col]):
                        piv = i
            if piv is None:
                break
            work[rstart], work[piv] = work[piv], work[rstart]
            a = work[rstart][col]
            done = True
            for i in range(rstart + 1, len(work)):
                b = work[i][col]
                if b:
                    q = b // a
                    ri, rp = work[i], work[rstart]
                    for j in range(col, n):
                        ri[j] -= q * rp[j]
                    if ri[col]:
                        done = False
            if done:
                break
        if piv is not None or work[rstart][col]:
            if work[rstart][col] < 0:
                work[rstart] = [-x for x in work[rstart]]
            rstart += 1
        col += 1
    work = [r for r in work if any(r)]
    # reduce entries above pivots
    pivots = []
    for r in work:
        j = next(i for i, x in enumerate(r) if x)
        pivots.append(j)
    order = sorted(range(len(work)), key=lambda i: pivots[i])
    work = [work[i] for i in order]
    pivots = [pivots[i] for i in order]
    for i in range(len(work)):
        for ii in range(i):
            p = pivots[i]
            a = work[i][p]
            b = work[ii][p]
            q = b // a
            if q:
                for j in range(p, len(work[0])):
                    work[ii][j] -= q * work[i][j]
    return work


def lattice_eq(rows_a, rows_b):
    return hnf(rows_a) == hnf(rows_b)


def lattice_sum(*lats):
    rows = [r for lat in lats for r in lat]
    return hnf(rows)


def in_rowspan(v, rows):
    """Is v in the row span of `rows` (over the integers)?"""
    return express_in_rowspan(v, rows) is not None


def express_in_rowspan(v, rows):
    """Coefficients c with v == c . rows, or None."""
    if not rows:
        return [] if not any(v) else None
    c = solve(transpose(rows), list(v))
    return c


# ---------------------------------------------------------------------------
# Smith normal form with transforms
# ---------------------------------------------------------------------------

def snf_transform(a):
    """Return (d, u, v) with u*a*v = d in Smith normal form.

    d is diagonal with d[i][i] >= 0 and d[i][i] | d[i+1][i+1]; u and v are
    unimodular.
    """
    d, u, v, _ = snf_transform_full(a)
    return d, u, v


def snf_transform_full(a):
    """Like snf_transform but also returns the inverse of v."""
    m = len(a)
    n = len(a[0]) if a else 0
    d = [row[:] for row in a]
    u = identity(m)
    v = identity(n)
    vinv = identity(n)

    def row_op(i, k, q):  # row i -= q * row k
        di, dk = d[i], d[k]
        ui, uk = u[i], u[k]
        for j in range(n):
            di[j] -= q * dk[j]
        for j in range(m):
            ui[j] -= q * uk[j]

    def col_op(j, k, q):  # col j -= q * col k;  vinv row k += q * row j
        for r in d:
            r[j] -= q * r[k]
        for r in v:
            r[j] -= q * r[k]
        rj, rk = vinv[j], vinv[k]
        for t in range(n):
            rk[t] += q * rj[t]

    def swap_rows(i, k):
        d[i], d[k] = d[k], d[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j, k):
        for r in d:
            r[j], r[k] = r[k], r[j]
        for r in v:
            r[j], r[k] = r[k], r[j]
        vinv[j], vinv[k] = vinv[k], vinv[j]

    t = 0
    while t < min(m, n):
        # pivot = nonzero entry of smallest magnitude in the working block
        piv = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = d[i][j]
                if x and (best is None or abs(x) < best):
                    best = abs(x)
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            # clear column t
            again = False
            for i in range(t + 1, m):
                if d[i][t]:
                    q = d[i][t] // d[t][t]
                    row_op(i, t, q)
                    if d[i][t]:
                        swap_rows(t, i)
                        again = True
            if again:
                continue
            for j in range(t + 1, n):
                if d[t][j]:
                    q = d[t][j] // d[t][t]
                    col_op(j, t, q)
                    if d[t][j]:
                        swap_cols(t, j)
                        again = True
            if again:
                continue
            # divisibility: pivot must divide the rest of the block
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if d[i][j] % d[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_op(t, offender, -1)
        if d[t][t] < 0:
            for j in range(n):
                d[t][j] = -d[t][j]
            for j in range(m):
                u[t][j] = -u[t][j]
        t += 1
    return d, u, v, vinv


def smith_diagonal(a):
    d, _, _ = snf_transform(a)
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


def rank(a):
    return sum(1 for x in smith_diagonal(a) if x)


def det(a):
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(a)
    if n == 0:
        return 1
    m = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if m[i][k]), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def kernel(a, ncols=None):
    """Basis (list of vectors) of the integer kernel of x -> a.x."""
    if not a or not a[0]:
        n = ncols if ncols is not None else (len(a[0]) if a else 0)
        return identity(n)
    d, _, v = snf_transform(a)
    m, n = len(a), len(a[0])
    diag = [d[i][i] for i in range(min(m, n))]
    cols = [j for j in range(n) if j >= len(diag) or diag[j] == 0]
    vt = transpose(v)
    return [vt[j] for j in cols]


def solve(a, b):
    """An integer solution x of a.x = b, or None."""
    m = len(a)
    n = len(a[0]) if a else 0
    if m == 0:
        return [0] * n
    d, u, v = snf_transform(a)
    ub = mat_vec(u, b)
    y = [0] * n
    for i in range(m):
        di = d[i][i] if i < min(m, n) else 0
        if i < n and di:
            if ub[i] % di:
                return None
            y[i] = ub[i] // di
        elif ub[i]:
            return None
    return mat_vec(v, y)


def solve_frac(a, b):
    """A rational solution x of a.x = b, or None.  Entries may be Fractions."""
    m = len(a)
    n = len(a[0]) if a else 0
    work = [[Fraction(x) for x in row] + [Fraction(bb)] for row, bb in zip(a, b)]
    piv_cols = []
    r = 0
    for j in range(n):
        piv = next((i for i in range(r, m) if work[i][j]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        pv = work[r][j]
        work[r] = [x / pv for x in work[r]]
        for i in range(m):
            if i != r and work[i][j]:
                c = work[i][j]
                work[i] = [x - c * y for x, y in zip(work[i], work[r])]
        piv_cols.append(j)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if work[i][n]:
            return None
    x = [Fraction(0)] * n
    for i, j in enumerate(piv_cols):
        x[j] = work[i][n]
    return x


def inv_unimodular(a):
    """Exact inverse of a unimodular integer matrix (integer entries)."""
    n = len(a)
    cols = []
    at = transpose(a)
    for i in range(n):
        e = [1 if k == i else 0 for k in range(n)]
        x = solve_frac(a, e)
        if x is None or any(f.denominator != 1 for f in x):
            raise ValueError("matrix is not unimodular")
        cols.append([int(f) for f in x])
    return transpose(cols)


def preimage_lattice(a, lat_rows, ncols=None):
    """Basis of {x : a.x is in the row span of lat_rows}.

    `ncols` must be given when `a` has no rows (a map into Z^0).
    """
    m = len(a)
    n = len(a[0]) if a else ncols
    if n is None:
        raise ValueError("cannot infer the domain dimension")
    if m == 0:
        return identity(n)
    if not lat_rows:
        return hnf(kernel(a, ncols=n))
    lt = transpose(lat_rows)  # m x k
    stacked = [a[i] + [-x for x in lt[i]] for i in range(m)]
    ker = kernel(stacked)
    return hnf([kv[:n] for kv in ker])


def image_rows(a):
    """Generators (rows) of the image lattice of x -> a.x."""
    return hnf(transpose(a))


def saturation(rows):
    """Saturation (Q-span intersected with Z^n) of a row lattice."""
    if not rows:
        return []
    n = len(rows[0])
    perp = kernel(rows)  # {x : rows . x = 0}
    return hnf(kernel(perp, ncols=n))


def lattice_intersect(rows_a, rows_b):
    """Row-lattice intersection."""
    if not rows_a or not rows_b:
        return []
    n = len(rows_a[0])
    at = transpose(rows_a)  # n x ka
    bt = transpose(rows_b)  # n x kb
    ka, kb = len(rows_a), len(rows_b)
    stacked = [at[i] + [-x for x in bt[i]] for i in range(n)]
    ker = kernel(stacked)
    return hnf([vec_mat(kv[:ka], rows_a) for kv in ker])


def fractional_preimage(a, ncols=None):
    """The lattice {w in Q^n : a.w integral} as (rows, den).

    The lattice is the row span of `rows` divided by `den`; it always
    contains Z^n.
    """
    m = len(a)
    n = len(a[0]) if a else ncols
    if m == 0:
        return identity(n), 1
    d, _, v = snf_transform(a)
    diag = [d[i][i] for i in range(min(m, n))]
    den = 1
    for x in diag:
        if x:
            den = _lcm(den, x)
    vt = transpose(v)
    rows = []
    for t in range(n):
        dt = diag[t] if t < len(diag) else 0
        scale = den // dt if dt else den
        rows.append([x * scale for x in vt[t]])
    return hnf(rows), den


def complement_coords(sat_rows, n):
    """Coordinate map onto Z^n / (saturated row lattice).

    Returns a matrix c with n columns; the class of v is c.v, and v lies in
    the Q-span iff c.v == 0.  Requires `sat_rows` saturated.
    """
    if not sat_rows:
        return identity(n)
    d, u, v = snf_transform(sat_rows)
    r = sum(1 for i in range(min(len(d), n)) if d[i][i])
    for i in range(r):
        if d[i][i] != 1:
            raise ValueError("lattice is not saturated")
    # rows of v^-1 are a basis of Z^n whose first r rows span the lattice;
    # coordinates in that basis are w . v, so the quotient part is columns
    # r..n of v
    return transpose(v)[r:]


# ---------------------------------------------------------------------------
# Rational lattices: row span of rows / den
# ---------------------------------------------------------------------------

class RatLattice:
    """A finitely generated subgroup of Q^n, stored as hnf(rows)/den."""

    __slots__ = ("den", "rows", "n")

    def __init__(self, den, rows, n):
        rows = hnf(rows)
        g = den
        for r in rows:
            for x in r:
                g = gcd(g, x)
        if g > 1:
            den //= g
            rows = [[x // g for x in r] for r in rows]
        self.den = den
        self.rows = rows
        self.n = n

    @classmethod
    def from_rows(cls, rows, n=None):
        """Build from rows of ints/Fractions."""
        if n is None:
            n = len(rows[0]) if rows else 0
        den = 1
        for r in rows:
            for x in r:
                den = _lcm(den, Fraction(x).denominator)
        int_rows = [[int(Fraction(x) * den) for x in r] for r in rows]
        return cls(den, int_rows, n)

    @classmethod
    def standard(cls, n):
        return cls(1, identity(n), n)

    def scaled_rows(self, den):
        """Generators as integer rows on the common denominator `den`."""
        if den % self.den:
            raise ValueError("denominator mismatch")
        f = den // self.den
        return [[x * f for x in r] for r in self.rows]

    def frac_rows(self):
        return [[Fraction(x, self.den) for x in r] for r in self.rows]

    def rank(self):
        return len(self.rows)

    def __eq__(self, other):
        return (self.den, self.rows, self.n) == (other.den, other.rows, other.n)

    def __hash__(self):
        return hash((self.den, tuple(map(tuple, self.rows)), self.n))

    def __repr__(self):
        return f"RatLattice(1/{self.den} * {self.rows})"

    def sum(self, other):
        den = _lcm(self.den, other.den)
        return RatLattice(den, self.scaled_rows(den) + other.scaled_rows(den), self.n)

    def intersect(self, other):
        den = _lcm(self.den, other.den)
        rows = lattice_intersect(self.scaled_rows(den), other.scaled_rows(den))
        return RatLattice(den, rows, self.n)

    def contains(self, vec):
        den = self.den
        scaled = []
        for x in vec:
            f = Fraction(x) * den
            if f.denominator != 1:
                return False
            scaled.append(int(f))
        return in_rowspan(scaled, self.rows)

    def contains_lattice(self, other):
        return all(self.contains(r) for r in other.frac_rows())

    def image(self, mat):
        """Image under the linear map given by `mat` (entries int/Fraction)."""
        out = [mat_vec(mat, [Fraction(x, self.den) for x in r]) for r in self.rows]
        return RatLattice.from_rows(out, len(mat))

    def fixed(self, mat):
        """Sublattice of vectors fixed by the integer matrix `mat`."""
        if not self.rows:
            return self
        bt = transpose(self.rows)
        moved = mat_mul(mat, bt)  # columns = images of generators
        diff = [[moved[i][j] - bt[i][j] for j in range(len(self.rows))]
                for i in range(self.n)]
        ker = kernel(diff)
        rows = [vec_mat(c, self.rows) for c in ker]
        return RatLattice(self.den, rows, self.n)


def dual_lattice(rows_l, rows_span):
    """Dual {v in span(rows_span) : <l, v> in Z for l in L} of a RatLattice.

    Both arguments are RatLattices whose Q-spans must coincide and whose
    generators must be bases.  The pairing is the standard dot product.
    """
    lb = rows_l.frac_rows()
    sb = rows_span.frac_rows()
    if len(lb) != len(sb):
        raise ValueError("spans of different dimension")
    g = [[sum(x * y for x, y in zip(lr, sr)) for sr in sb] for lr in lb]
    # v = c . sb is dual iff g . c is a standard basis vector, so the dual
    # basis comes from the columns of g^-1
    r = len(g)
    dual_rows = []
    for i in range(r):
        e = [Fraction(1) if k == i else Fraction(0) for k in range(r)]
        c = solve_frac(g, e)
        if c is None:
            raise ValueError("generators are not a basis")
        dual_rows.append([sum(c[k] * sb[k][j] for k in range(r))
                          for j in range(rows_span.n)])
    return RatLattice.from_rows(dual_rows, rows_span.n)
