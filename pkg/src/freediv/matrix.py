"""Polynomial matrices with degree twists, determinants and ranks."""

import itertools
import random

from gmpy2 import mpq

from .poly import Polynomial, Q, ZERO, is_scalar


class GradedMatrix:
    """Matrix of polynomials read as a degree-0 map  sum R(-c_j) -> sum R(-r_i).

    row_twists[i] is the degree of the i-th target generator and
    col_twists[j] the degree of the j-th source generator, so a nonzero
    entry (i, j) is homogeneous of degree col_twists[j] - row_twists[i].
    Twists default to values inferred from the entries (rows at 0).
    """

    def __init__(self, ring, rows, row_twists=None, col_twists=None, check=True):
        self.ring = ring
        rows = [[_as_poly(ring, e) for e in r] for r in rows]
        self.nrows = len(rows)
        self.ncols = len(rows[0]) if rows else 0
        if any(len(r) != self.ncols for r in rows):
            raise ValueError("ragged matrix")
        self.rows = rows
        if row_twists is None:
            row_twists = [0] * self.nrows
        self.row_twists = list(row_twists)
        if col_twists is None:
            col_twists = self._infer_cols()
        self.col_twists = list(col_twists)
        if len(self.row_twists) != self.nrows or len(self.col_twists) != self.ncols:
            raise ValueError("twist length mismatch")
        if check:
            self.check_homogeneous()

    def _infer_cols(self):
        out = []
        for j in range(self.ncols):
            d = None
            for i in range(self.nrows):
                e = self.rows[i][j]
                if e:
                    d = e.degree() + self.row_twists[i]
                    break
            out.append(0 if d is None else d)
        return out

    def check_homogeneous(self):
        for i, r in enumerate(self.rows):
            for j, e in enumerate(r):
                if e:
                    ds = e.degrees()
                    want = self.col_twists[j] - self.row_twists[i]
                    if ds != {want}:
                        raise ValueError("entry (%d,%d) not homogeneous of degree %d" % (i, j, want))

    def is_homogeneous(self):
        try:
            self.check_homogeneous()
            return True
        except ValueError:
            return False

    @classmethod
    def from_columns(cls, ring, cols, row_twists=None, col_twists=None, nrows=None, check=True):
        if not cols:
            nr = nrows if nrows is not None else (len(row_twists) if row_twists is not None else 0)
            m = cls(ring, [[] for _ in range(nr)], row_twists, [], check=False)
            m.ncols = 0
            return m
        nr = len(cols[0])
        rows = [[cols[j][i] for j in range(len(cols))] for i in range(nr)]
        return cls(ring, rows, row_twists, col_twists, check=check)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return [self.rows[i][j] for i in range(self.nrows)]

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def shape(self):
        return (self.nrows, self.ncols)

    def transpose(self):
        rows = [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        m = GradedMatrix(self.ring, rows, [-c for c in self.col_twists],
                         [-r for r in self.row_twists], check=False)
        if self.nrows == 0:
            m.ncols = 0
        return m

    def __mul__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        rows = []
        for i in range(self.nrows):
            r = []
            for j in range(other.ncols):
                acc = Polynomial(self.ring, {})
                for k in range(self.ncols):
                    a = self.rows[i][k]
                    if a:
                        b = other.rows[k][j]
                        if b:
                            acc = acc + a * b
                r.append(acc)
            rows.append(r)
        shift = 0
        if self.ncols:
            shift = self.col_twists[0] - other.row_twists[0]
        if not rows:
            return GradedMatrix(self.ring, [], [], [], check=False)
        return GradedMatrix(self.ring, rows, self.row_twists,
                            [c + shift for c in other.col_twists], check=False)

    def is_zero(self):
        return all(not e for r in self.rows for e in r)

    def submatrix(self, rows, cols):
        return GradedMatrix(self.ring, [[self.rows[i][j] for j in cols] for i in rows],
                            [self.row_twists[i] for i in rows],
                            [self.col_twists[j] for j in cols], check=False)

    def hstack(self, other):
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch")
        rows = [a + b for a, b in zip(self.rows, other.rows)]
        return GradedMatrix(self.ring, rows, self.row_twists,
                            self.col_twists + other.col_twists, check=False)

    def map(self, fn, ring=None):
        ring = ring or self.ring
        return GradedMatrix(ring, [[fn(e) for e in r] for r in self.rows],
                            self.row_twists, self.col_twists, check=False)

    def evaluate(self, point):
        return [[e.evaluate(point) for e in r] for r in self.rows]

    def __eq__(self, other):
        return (isinstance(other, GradedMatrix) and self.rows == other.rows
                and self.row_twists == other.row_twists and self.col_twists == other.col_twists)

    def to_strings(self):
        return [[str(e) for e in r] for r in self.rows]

    def __repr__(self):
        return "GradedMatrix(%dx%d, rows=%r, cols=%r)" % (self.nrows, self.ncols,
                                                         self.row_twists, self.col_twists)

    def minors(self, r):
        """All r x r minors (row subsets outer, column subsets inner)."""
        out = []
        for rs in itertools.combinations(range(self.nrows), r):
            for cs in itertools.combinations(range(self.ncols), r):
                out.append(determinant([[self.rows[i][j] for j in cs] for i in rs], self.ring))
        return out


def _as_poly(ring, e):
    if isinstance(e, Polynomial):
        if e.ring != ring:
            raise ValueError("entry ring mismatch")
        return e
    if is_scalar(e):
        return Polynomial.constant(ring, e)
    raise TypeError("bad matrix entry %r" % (e,))


def _entries(M):
    if isinstance(M, GradedMatrix):
        return M.ring, [list(r) for r in M.rows]
    return None, [list(r) for r in M]


def determinant(M, ring=None):
    """Fraction-free (Bareiss) determinant with row pivoting.

    Small matrices (n <= 3) use cofactor expansion directly.
    """
    r0, rows = _entries(M)
    ring = ring or r0
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Polynomial.constant(ring, 1)
    if n <= 3:
        return cofactor_det(rows, ring)
    a = rows
    sign = 1
    prev = Polynomial.constant(ring, 1)
    for k in range(n - 1):
        if not a[k][k]:
            piv = None
            for i in range(k + 1, n):
                if a[i][k]:
                    piv = i
                    break
            if piv is None:
                return Polynomial(ring, {})
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                v = akk * a[i][j]
                if aik and a[k][j]:
                    v = v - aik * a[k][j]
                if k:
                    v = v / prev
                a[i][j] = v
        prev = akk
    d = a[n - 1][n - 1]
    return d if sign == 1 else -d


def cofactor_det(rows, ring):
    n = len(rows)
    if n == 0:
        return Polynomial.constant(ring, 1)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    acc = Polynomial(ring, {})
    for j in range(n):
        if rows[0][j]:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            term = rows[0][j] * cofactor_det(minor, ring)
            acc = acc + term if j % 2 == 0 else acc - term
    return acc


def scalar_rank(rows):
    """Rank of a matrix of rationals."""
    a = [[Q(x) for x in r] for r in rows]
    if not a:
        return 0
    m, n = len(a), len(a[0])
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if a[i][c]:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        for i in range(r + 1, m):
            if a[i][c]:
                f = a[i][c] * inv
                ai, ar = a[i], a[r]
                for j in range(c, n):
                    if ar[j]:
                        ai[j] -= f * ar[j]
        r += 1
        if r == m:
            break
    return r


def row_echelon_pivots(vectors):
    """Indices of a maximal linearly independent subset (greedy, in order)
    of sparse rational vectors given as dicts."""
    basis = {}  # pivot -> reduced row (dict)
    keep = []
    for idx, v in enumerate(vectors):
        v = dict(v)
        while v:
            p = max(v)
            if p in basis:
                b = basis[p]
                f = v[p] / b[p]
                for k, c in b.items():
                    w = v.get(k, ZERO) - f * c
                    if w:
                        v[k] = w
                    else:
                        v.pop(k, None)
            else:
                basis[p] = v
                keep.append(idx)
                break
    return keep


def polynomial_rank(M, rng=None, tries=2):
    """Exact rank over the fraction field.

    A random evaluation gives a lower bound r (certified by a nonzero minor);
    fraction-free elimination then confirms the exact value.
    """
    _, rows = _entries(M)
    return bareiss_rank(rows)


def bareiss_rank(rows):
    a = [list(r) for r in rows]
    m = len(a)
    if not m:
        return 0
    n = len(a[0])
    ring = None
    for r in a:
        for e in r:
            ring = e.ring
            break
        if ring:
            break
    prev = None
    rank = 0
    for k in range(min(m, n)):
        piv = None
        for i in range(k, m):
            for j in range(k, n):
                if a[i][j]:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        i, j = piv
        a[k], a[i] = a[i], a[k]
        if j != k:
            for r in a:
                r[k], r[j] = r[j], r[k]
        akk = a[k][k]
        for i in range(k + 1, m):
            aik = a[i][k]
            for j in range(k + 1, n):
                v = akk * a[i][j]
                if aik and a[k][j]:
                    v = v - aik * a[k][j]
                if prev is not None:
                    v = v / prev
                a[i][j] = v
            a[i][k] = Polynomial(akk.ring, {})
        prev = akk
        rank += 1
    return rank


def random_point(n, rng, lo=-50, hi=50):
    return [mpq(rng.randint(lo, hi)) for _ in range(n)]


def numeric_rank(M, rng=None):
    rng = rng or random.Random(0)
    ring, rows = _entries(M)
    if ring is None:
        for r in rows:
            for e in r:
                ring = e.ring
                break
            if ring:
                break
    if ring is None:
        return 0
    pt = random_point(ring.n, rng)
    return scalar_rank([[e.evaluate(pt) for e in r] for r in rows])
