"""Exact dense linear algebra over the rationals.

Matrices are row-major lists of rational entries.  Everything here is
exact: rank via fraction-free (Bareiss) elimination on cleared
denominators, kernels and inverses via rational Gauss-Jordan.
Kernel bases are deterministic: the returned vectors, stacked as rows,
are in reduced row echelon form.
"""

from math import gcd

from .errors import SingularMatrix
from .scalars import Q, QONE, QZERO


class Mat:
    __slots__ = ("rows", "cols", "a", "_colnz")

    def __init__(self, rows, cols, entries):
        assert len(entries) == rows and all(len(r) == cols for r in entries)
        self.rows = rows
        self.cols = cols
        self.a = entries
        self._colnz = None

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [[QZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n):
        m = cls.zeros(n, n)
        for i in range(n):
            m.a[i][i] = QONE
        return m

    @classmethod
    def from_rows(cls, entries):
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        return cls(rows, cols, [[Q(x) for x in r] for r in entries])

    @classmethod
    def from_columns(cls, rows, columns):
        m = cls.zeros(rows, len(columns))
        for j, col in enumerate(columns):
            for i, v in enumerate(col):
                m.a[i][j] = v
        return m

    def copy(self):
        return Mat(self.rows, self.cols, [row[:] for row in self.a])

    def __eq__(self, other):
        return (isinstance(other, Mat) and self.rows == other.rows
                and self.cols == other.cols and self.a == other.a)

    def __hash__(self):  # pragma: no cover
        raise TypeError("Mat is unhashable")

    def is_zero(self):
        return all(v == 0 for row in self.a for v in row)

    def column(self, j):
        return [row[j] for row in self.a]

    def col_nz(self, j):
        """Nonzero entries of column j as (row, value) pairs (cached)."""
        if self._colnz is None:
            self._colnz = [None] * self.cols
        cached = self._colnz[j]
        if cached is None:
            cached = [(i, self.a[i][j]) for i in range(self.rows)
                      if self.a[i][j] != 0]
            self._colnz[j] = cached
        return cached

    def apply(self, vec):
        """Matrix-vector product, skipping zero entries of vec."""
        out = [QZERO] * self.rows
        for j, x in enumerate(vec):
            if x == 0:
                continue
            for i, v in self.col_nz(j):
                out[i] = out[i] + v * x
        return out

    def mul(self, other):
        assert self.cols == other.rows
        out = Mat.zeros(self.rows, other.cols)
        oa = other.a
        for i in range(self.rows):
            row = self.a[i]
            orow = out.a[i]
            for k in range(self.cols):
                x = row[k]
                if x == 0:
                    continue
                brow = oa[k]
                for j in range(other.cols):
                    if brow[j] != 0:
                        orow[j] = orow[j] + x * brow[j]
        return out

    def transpose(self):
        return Mat(self.cols, self.rows,
                   [[self.a[i][j] for i in range(self.rows)]
                    for j in range(self.cols)])

    def rank(self):
        """Exact rank by fraction-free (Bareiss) elimination."""
        m = []
        for row in self.a:
            den = 1
            for v in row:
                den = den * v.denominator // gcd(den, v.denominator)
            m.append([int(v * den) for v in row])
        rows, cols = self.rows, self.cols
        rank = 0
        prev = 1
        r = 0
        for c in range(cols):
            piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            for i in range(r + 1, rows):
                for j in range(c + 1, cols):
                    m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
                m[i][c] = 0
            prev = m[r][c]
            r += 1
            rank += 1
            if r == rows:
                break
        return rank

    def rref(self):
        """Reduced row echelon form; returns (rref matrix, pivot columns)."""
        m = [row[:] for row in self.a]
        rows, cols = self.rows, self.cols
        pivots = []
        r = 0
        for c in range(cols):
            piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            inv = 1 / m[r][c]
            m[r] = [v * inv for v in m[r]]
            for i in range(rows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == rows:
                break
        return Mat(rows, cols, m), pivots

    def kernel_basis(self):
        """Deterministic kernel basis (rows of the result are in rref)."""
        red, pivots = self.rref()
        pivset = set(pivots)
        free = [c for c in range(self.cols) if c not in pivset]
        basis = []
        for f in free:
            v = [QZERO] * self.cols
            v[f] = QONE
            for r, c in enumerate(pivots):
                v[c] = -red.a[r][f]
            basis.append(v)
        if not basis:
            return []
        normal, _ = Mat(len(basis), self.cols, basis).rref()
        return [row[:] for row in normal.a]

    def invert(self):
        if self.rows != self.cols:
            raise SingularMatrix("matrix is %dx%d, not square"
                                 % (self.rows, self.cols))
        n = self.rows
        aug = [self.a[i][:] + [QONE if j == i else QZERO for j in range(n)]
               for i, _ in enumerate(self.a)]
        r = 0
        for c in range(n):
            piv = next((i for i in range(r, n) if aug[i][c] != 0), None)
            if piv is None:
                raise SingularMatrix("rank deficient at column %d" % c)
            aug[r], aug[piv] = aug[piv], aug[r]
            inv = 1 / aug[r][c]
            aug[r] = [v * inv for v in aug[r]]
            for i in range(n):
                if i != r and aug[i][c] != 0:
                    f = aug[i][c]
                    aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
            r += 1
        return Mat(n, n, [row[n:] for row in aug])

    def solve_unique(self, rhs_columns):
        """Solve self @ x = b for each b in rhs_columns.

        Requires full column rank.  Returns a list of solution vectors, or
        None if any system is inconsistent.
        """
        k = len(rhs_columns)
        aug = Mat(self.rows, self.cols + k,
                  [self.a[i][:] + [col[i] for col in rhs_columns]
                   for i in range(self.rows)])
        red, pivots = aug.rref()
        main = [p for p in pivots if p < self.cols]
        if len(main) < self.cols:
            raise SingularMatrix("coefficient matrix lacks full column rank")
        if len(main) != len(pivots):
            return None  # a pivot landed in the rhs block: inconsistent
        sols = []
        for j in range(k):
            v = [QZERO] * self.cols
            for r, c in enumerate(main):
                v[c] = red.a[r][self.cols + j]
            sols.append(v)
        return sols

    def __repr__(self):  # pragma: no cover
        return "Mat(%d,%d,%r)" % (self.rows, self.cols, self.a)


def zeros_vec(n):
    return [QZERO] * n


def basis_vec(n, i):
    v = [QZERO] * n
    v[i] = QONE
    return v


def vec_add(x, y):
    return [a + b for a, b in zip(x, y)]


def vec_scale(c, x):
    return [c * a for a in x]


def vec_is_zero(x):
    return all(a == 0 for a in x)


def vstack(mats):
    cols = mats[0].cols
    rows = sum(m.rows for m in mats)
    entries = []
    for m in mats:
        assert m.cols == cols
        entries.extend(row[:] for row in m.a)
    return Mat(rows, cols, entries)
