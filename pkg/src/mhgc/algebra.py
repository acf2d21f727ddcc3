"""Component algebras and multipliers.

A component is a finite-dimensional associative algebra over the
rationals given by structure constants; it may lack a unit, but its
product must be nondegenerate for the coalgebra machinery to work.
Multipliers are (left matrix, right matrix) pairs; elements embed via
their multiplication operators.
"""

from .errors import NotElement, NotNondegenerate
from .linalg import Mat, basis_vec, vstack, zeros_vec
from .reports import Check
from .scalars import QZERO


class ComponentAlgebra:
    def __init__(self, dim, structure):
        """structure: dense table c[i][j][k] or sparse rows c[i][j] = [(k, q)]."""
        self.dim = dim
        rows = []
        for i in range(dim):
            ri = []
            for j in range(dim):
                cell = structure[i][j]
                if cell and isinstance(cell[0], tuple):
                    ri.append(tuple((k, v) for k, v in cell if v != 0))
                else:
                    ri.append(tuple((k, v) for k, v in enumerate(cell)
                                    if v != 0))
            rows.append(tuple(ri))
        self.table = tuple(rows)
        self._unit = -1  # not computed yet

    def mul_basis(self, i, j):
        return self.table[i][j]

    def mul_vec(self, x, y):
        out = zeros_vec(self.dim)
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                c = xi * yj
                for k, v in self.table[i][j]:
                    out[k] = out[k] + c * v
        return out

    def left_mult_matrix(self, x):
        """Matrix of b -> x*b."""
        m = Mat.zeros(self.dim, self.dim)
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j in range(self.dim):
                for k, v in self.table[i][j]:
                    m.a[k][j] = m.a[k][j] + xi * v
        return m

    def right_mult_matrix(self, x):
        """Matrix of b -> b*x."""
        m = Mat.zeros(self.dim, self.dim)
        for j, xj in enumerate(x):
            if xj == 0:
                continue
            for i in range(self.dim):
                for k, v in self.table[i][j]:
                    m.a[k][i] = m.a[k][i] + xj * v
        return m

    def check_associative(self):
        d = self.dim
        for i in range(d):
            for j in range(d):
                ij = self.table[i][j]
                for k in range(d):
                    lhs = zeros_vec(d)
                    for m, v in ij:
                        for n, w in self.table[m][k]:
                            lhs[n] = lhs[n] + v * w
                    rhs = zeros_vec(d)
                    for m, v in self.table[j][k]:
                        for n, w in self.table[i][m]:
                            rhs[n] = rhs[n] + v * w
                    if lhs != rhs:
                        return Check("associativity", False,
                                     "basis triple (%d,%d,%d)" % (i, j, k))
        return Check("associativity", True)

    def _stacked_left(self):
        """Stack of all left-multiplication matrices L_{e_i} (dim^2 x dim)."""
        return vstack([self.left_mult_matrix(basis_vec(self.dim, i))
                       for i in range(self.dim)])

    def _stacked_right(self):
        return vstack([self.right_mult_matrix(basis_vec(self.dim, i))
                       for i in range(self.dim)])

    def check_nondegenerate(self):
        """ab = 0 for all b implies a = 0, and symmetrically."""
        d = self.dim
        if d == 0:
            return Check("nondegeneracy", True)
        if self._stacked_right().rank() < d:
            ker = self._stacked_right().kernel_basis()
            return Check("nondegeneracy", False,
                         "a*b = 0 for all b with a = %r" % (ker[0],))
        if self._stacked_left().rank() < d:
            ker = self._stacked_left().kernel_basis()
            return Check("nondegeneracy", False,
                         "b*a = 0 for all b with a = %r" % (ker[0],))
        return Check("nondegeneracy", True)

    def unit(self):
        """The unit element, or None.  Cached."""
        if self._unit != -1:
            return self._unit
        d = self.dim
        if d == 0:
            self._unit = None
            return None
        # e must satisfy e_j*e = e_j and e*e_j = e_j for every j; the stacked
        # left-multiplication block encodes x -> (e_1 x, ..., e_d x) and the
        # right block x -> (x e_1, ..., x e_d).
        sys = vstack([self._stacked_left(), self._stacked_right()])
        rhs_vec = []
        for _ in range(2):
            for i in range(d):
                rhs_vec.extend(basis_vec(d, i))
        self._unit = _transpose_solve(sys, rhs_vec)
        return self._unit

    def __eq__(self, other):
        return (isinstance(other, ComponentAlgebra) and self.dim == other.dim
                and self.table == other.table)


def _transpose_solve(sys, rhs_vec):
    """Solve sys @ x = rhs_vec if consistent, else None (x need not be unique
    but the unit, when it exists, is unique by nondegeneracy)."""
    aug = Mat(sys.rows, sys.cols + 1,
              [sys.a[i][:] + [rhs_vec[i]] for i in range(sys.rows)])
    red, pivots = aug.rref()
    if pivots and pivots[-1] == sys.cols:
        return None
    x = zeros_vec(sys.cols)
    for r, c in enumerate(pivots):
        x[c] = red.a[r][sys.cols]
    return x


def tensor_algebra(A, B):
    """Structure constants of A (x) B; basis index (i,j) -> i*dimB + j."""
    dA, dB = A.dim, B.dim
    dim = dA * dB
    structure = []
    for i1 in range(dA):
        for j1 in range(dB):
            row = []
            for i2 in range(dA):
                for j2 in range(dB):
                    cell = []
                    for k1, v1 in A.table[i1][i2]:
                        for k2, v2 in B.table[j1][j2]:
                            cell.append((k1 * dB + k2, v1 * v2))
                    row.append(cell)
            structure.append(row)
    return ComponentAlgebra(dim, structure)


class Multiplier:
    """A pair (L, R) with R(a)b = aL(b), L(ab) = L(a)b, R(ab) = aR(b)."""

    __slots__ = ("alg", "left", "right")

    def __init__(self, alg, left, right):
        self.alg = alg
        self.left = left
        self.right = right

    @classmethod
    def from_element(cls, alg, x):
        return cls(alg, alg.left_mult_matrix(x), alg.right_mult_matrix(x))

    @classmethod
    def one(cls, alg):
        return cls(alg, Mat.identity(alg.dim), Mat.identity(alg.dim))

    def check(self):
        """Verify the compatibility laws on all basis pairs."""
        alg, L, R = self.alg, self.left, self.right
        d = alg.dim
        for i in range(d):
            Ri = R.column(i)
            Li = L.column(i)
            for j in range(d):
                # R(e_i) e_j == e_i L(e_j)
                if alg.mul_vec(Ri, basis_vec(d, j)) != \
                        alg.mul_vec(basis_vec(d, i), L.column(j)):
                    return Check("multiplier", False,
                                 "R(e%d)e%d != e%d L(e%d)" % (i, j, i, j))
                prod = alg.mul_vec(basis_vec(d, i), basis_vec(d, j))
                if L.apply(prod) != alg.mul_vec(Li, basis_vec(d, j)):
                    return Check("multiplier", False,
                                 "L(e%d e%d) != L(e%d)e%d" % (i, j, i, j))
                if R.apply(prod) != alg.mul_vec(basis_vec(d, i), R.column(j)):
                    return Check("multiplier", False,
                                 "R(e%d e%d) != e%d R(e%d)" % (i, j, i, j))
        return Check("multiplier", True)

    def compose(self, other):
        """Product of multipliers: (LL', R'R)."""
        assert self.alg is other.alg or self.alg == other.alg
        return Multiplier(self.alg, self.left.mul(other.left),
                          other.right.mul(self.right))

    def __eq__(self, other):
        return (isinstance(other, Multiplier) and self.left == other.left
                and self.right == other.right)


def multiplier_from_element(alg, x):
    return Multiplier.from_element(alg, x)


def element_from_multiplier(alg, m, strict=False):
    """The element a with L_a = m.left and R_a = m.right, or None.

    With strict=True, raises NotElement instead of returning None.
    """
    d = alg.dim
    if d == 0:
        return zeros_vec(0)
    # unknown a: constraints a*e_j = m.left(e_j) and e_j*a = m.right(e_j)
    rows = []
    rhs = []
    for j in range(d):
        lcol = m.left.column(j)
        rcol = m.right.column(j)
        for k in range(d):
            row = [QZERO] * d
            for i in range(d):
                for kk, v in alg.table[i][j]:
                    if kk == k:
                        row[i] = row[i] + v
            rows.append(row)
            rhs.append(lcol[k])
            row2 = [QZERO] * d
            for i in range(d):
                for kk, v in alg.table[j][i]:
                    if kk == k:
                        row2[i] = row2[i] + v
            rows.append(row2)
            rhs.append(rcol[k])
    sys = Mat(len(rows), d, rows)
    sol = _transpose_solve(sys, rhs)
    if sol is None:
        if strict:
            raise NotElement("multiplier is not represented by an element")
        return None
    # nondegeneracy makes the representing element unique when it exists,
    # but confirm the full pair matches (the system is already complete).
    return sol


def extend_nondegenerate_hom(A, B, phi, m):
    """Extend a nondegenerate homomorphism phi: A -> M(B) to the multiplier m.

    phi is given by its values on the basis of A (a list of Multipliers on
    B).  Nondegenerate means phi(A)B and Bphi(A) span B.  Returns the unique
    Multiplier mbar on B with mbar * phi(a)b = phi(m a)b and
    b phi(a) * mbar = b phi(a m).
    """
    dA, dB = A.dim, B.dim
    if dB == 0:
        z = Mat.zeros(0, 0)
        return Multiplier(B, z, z)

    def phi_of(vec):
        L = Mat.zeros(dB, dB)
        R = Mat.zeros(dB, dB)
        for i, c in enumerate(vec):
            if c == 0:
                continue
            for r in range(dB):
                for s in range(dB):
                    L.a[r][s] = L.a[r][s] + c * phi[i].left.a[r][s]
                    R.a[r][s] = R.a[r][s] + c * phi[i].right.a[r][s]
        return Multiplier(B, L, R)

    span_cols = []
    img_cols = []
    for i in range(dA):
        mi = m.left.column(i)          # m * e_i in A
        phi_mi = phi_of(mi)
        for j in range(dB):
            span_cols.append(phi[i].left.column(j))
            img_cols.append(phi_mi.left.column(j))
    S = Mat.from_columns(dB, span_cols)
    if S.rank() < dB:
        raise NotNondegenerate("phi(A)B does not span B")
    T = Mat.from_columns(dB, img_cols)
    # solve Lbar S = T  <=>  S^T Lbar^T = T^T
    sols = S.transpose().solve_unique([T.transpose().column(j)
                                       for j in range(dB)])
    if sols is None:
        raise NotNondegenerate("extension is inconsistent on the span")
    Lbar = Mat(dB, dB, [[sols[i][j] for j in range(dB)] for i in range(dB)])

    span_cols = []
    img_cols = []
    for i in range(dA):
        im = m.right.column(i)         # e_i * m in A
        phi_im = phi_of(im)
        for j in range(dB):
            span_cols.append(phi[i].right.column(j))
            img_cols.append(phi_im.right.column(j))
    S = Mat.from_columns(dB, span_cols)
    if S.rank() < dB:
        raise NotNondegenerate("Bphi(A) does not span B")
    T = Mat.from_columns(dB, img_cols)
    sols = S.transpose().solve_unique([T.transpose().column(j)
                                       for j in range(dB)])
    if sols is None:
        raise NotNondegenerate("extension is inconsistent on the span")
    Rbar = Mat(dB, dB, [[sols[i][j] for j in range(dB)] for i in range(dB)])
    return Multiplier(B, Lbar, Rbar)
