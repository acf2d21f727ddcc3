"""Derived structure: counit and antipode families.

Both are *computed* from the canonical maps (never taken as input):

    E_p(a) b   = m_p((T1[1,p])^-1 (a (x) b))          for a in A_1
    S_p(a) b   = (eps (x) I)((T1[p,p^-1])^-1 (a (x) b))
    b S_p(a)   = (I (x) eps)((T2[p^-1,p])^-1 (b (x) a))

E_p(a) must be an exact scalar multiple of the identity; the scalar is
the counit value and must not depend on p.  The antipode is
multiplier-valued; its values are recognised as elements in the regular
case (or through units), giving matrices A_p -> A_{p^-1}.
"""

from .algebra import Multiplier, element_from_multiplier
from .errors import (EmptyUnitComponent, Inconsistent, MultiplierMismatch,
                     NotInvertible, NotScalar)
from .linalg import Mat, basis_vec, vec_add, vec_scale, zeros_vec
from .reports import Report
from .scalars import QZERO


class Counit:
    """The scalar functional on A_1 (given on the basis of A_1)."""

    def __init__(self, eps):
        self.eps = list(eps)

    def __call__(self, vec):
        return sum((e * v for e, v in zip(self.eps, vec)), QZERO)

    def __eq__(self, other):
        return isinstance(other, Counit) and self.eps == other.eps


class AntipodeFamily:
    """S_p on the basis of A_p, as multipliers on A_{p^-1}.

    mult[p][i] is S_p(e_i); elt[p], when available, is the matrix of S_p
    as a linear map A_p -> A_{p^-1} (None until values are recognised as
    elements).
    """

    def __init__(self, mult, elt=None):
        self.mult = mult
        self.elt = elt if elt is not None else {}

    def apply_elt(self, p, vec):
        return self.elt[p].apply(vec)


def derive_counit(pc):
    g = pc.group
    e = g.identity
    d1 = pc.dim(e)
    if d1 == 0:
        if all(pc.dim(p) == 0 for p in g.elements()):
            return Counit([])
        raise EmptyUnitComponent("component at the identity is zero")
    eps = None
    eps_from = None
    for p in g.elements():
        dp = pc.dim(p)
        if dp == 0:
            continue
        inv = pc.t1_inv(e, p)
        alg = pc.components[p]
        lam = []
        for a in range(d1):
            # E_p(e_a): multiply the two legs of (T1[1,p])^-1 (e_a (x) b)
            m = Mat.zeros(dp, dp)
            for b in range(dp):
                acc = zeros_vec(dp)
                for r, v in inv.col_nz(a * dp + b):
                    u, w = divmod(r, dp)
                    for k, c in alg.table[u][w]:
                        acc[k] = acc[k] + v * c
                for k in range(dp):
                    m.a[k][b] = acc[k]
            scalar = m.a[0][0]
            for i in range(dp):
                for j in range(dp):
                    want = scalar if i == j else QZERO
                    if m.a[i][j] != want:
                        raise NotScalar(
                            "E_%s(e%d) is not a scalar multiple of the "
                            "identity (entry (%d,%d))"
                            % (g.labels[p], a, i, j))
            lam.append(scalar)
        if eps is None:
            eps, eps_from = lam, p
        elif lam != eps:
            raise Inconsistent(
                "counit disagrees between components %s and %s"
                % (g.labels[eps_from], g.labels[p]))
    return Counit(eps)


def counit_report(pc, counit):
    """Multiplicativity and both damped counit identities."""
    rep = Report()
    g = pc.group
    e = g.identity
    d1 = pc.dim(e)
    alg1 = pc.components[e]
    ok = True
    for a in range(d1):
        for b in range(d1):
            prod = counit(alg1.mul_vec(basis_vec(d1, a), basis_vec(d1, b)))
            if prod != counit.eps[a] * counit.eps[b]:
                rep.fail("counit multiplicative",
                         "eps(e%d e%d) != eps(e%d)eps(e%d)" % (a, b, a, b))
                ok = False
                break
        if not ok:
            break
    if ok:
        rep.ok("counit multiplicative")
    for p in g.elements():
        dp = pc.dim(p)
        if dp == 0:
            continue
        alg = pc.components[p]
        name = "counit identities at %s" % g.labels[p]
        wit = None
        t2 = pc.t2[(p, e)]
        t1 = pc.t1[(e, p)]
        for a in range(dp):
            for b in range(dp):
                ab = zeros_vec(dp)
                for k, c in alg.table[a][b]:
                    ab[k] = ab[k] + c
                # (I (x) eps)((a (x) 1) D(b)) == ab
                got = zeros_vec(dp)
                for r, v in t2.col_nz(a * d1 + b):
                    u, w = divmod(r, d1)
                    got[u] = got[u] + v * counit.eps[w]
                if got != ab:
                    wit = "(I x eps)((e%d x 1)D(e%d)) != e%d e%d" % (a, b, a, b)
                    break
                # (eps (x) I)(D(a)(1 (x) b)) == ab
                got = zeros_vec(dp)
                for r, v in t1.col_nz(a * dp + b):
                    u, w = divmod(r, dp)
                    got[w] = got[w] + v * counit.eps[u]
                if got != ab:
                    wit = "(eps x I)(D(e%d)(1 x e%d)) != e%d e%d" % (a, b, a, b)
                    break
            if wit:
                break
        rep.add(name, wit is None, wit)
    return rep


def solve_counit_linear(pc):
    """All functionals on A_1 satisfying the damped counit identities.

    Returns (particular solution or None, kernel basis).  Used to confirm
    the derived counit is the unique solution.
    """
    g = pc.group
    e = g.identity
    d1 = pc.dim(e)
    rows = []
    rhs = []
    for p in g.elements():
        dp = pc.dim(p)
        if dp == 0:
            continue
        alg = pc.components[p]
        t1 = pc.t1[(e, p)]
        for a in range(dp):
            for b in range(dp):
                ab = zeros_vec(dp)
                for k, c in alg.table[a][b]:
                    ab[k] = ab[k] + c
                coeff = [[QZERO] * d1 for _ in range(dp)]
                for r, v in t1.col_nz(a * dp + b):
                    u, w = divmod(r, dp)
                    coeff[w][u] = coeff[w][u] + v
                for k in range(dp):
                    rows.append(coeff[k])
                    rhs.append(ab[k])
    sys = Mat(len(rows), d1, rows)
    aug = Mat(len(rows), d1 + 1,
              [rows[i][:] + [rhs[i]] for i in range(len(rows))])
    red, pivots = aug.rref()
    if pivots and pivots[-1] == d1:
        particular = None
    else:
        particular = zeros_vec(d1)
        for r, c in enumerate(pivots):
            particular[c] = red.a[r][d1]
    return particular, sys.kernel_basis()


def derive_antipode(pc, counit):
    """Compute S_p(e_i) for every p and basis i; verify multiplier and
    antihomomorphism laws and the damped antipode identities."""
    g = pc.group
    e = g.identity
    d1 = pc.dim(e)
    eps = counit.eps
    mult = {}
    for p in g.elements():
        pi = g.inv[p]
        dp, dpi = pc.dim(p), pc.dim(pi)
        vals = []
        if dp > 0 and dpi == 0:
            raise Inconsistent("A_%s is nonzero but A_%s is zero"
                               % (g.labels[p], g.labels[pi]))
        inv1 = pc.t1_inv(p, pi) if dp else None
        inv2 = pc.t2_inv(pi, p) if dp else None
        algpi = pc.components[pi]
        for a in range(dp):
            L = Mat.zeros(dpi, dpi)
            R = Mat.zeros(dpi, dpi)
            for b in range(dpi):
                # S_p(e_a) e_b = (eps (x) I)((T1[p,p^-1])^-1(e_a (x) e_b))
                for r, v in inv1.col_nz(a * dpi + b):
                    u, w = divmod(r, dpi)
                    if eps[u] != 0:
                        L.a[w][b] = L.a[w][b] + v * eps[u]
                # e_b S_p(e_a) = (I (x) eps)((T2[p^-1,p])^-1(e_b (x) e_a))
                for r, v in inv2.col_nz(b * dp + a):
                    w, u = divmod(r, d1)
                    if eps[u] != 0:
                        R.a[w][b] = R.a[w][b] + v * eps[u]
            m = Multiplier(algpi, L, R)
            chk = m.check()
            if not chk.passed:
                raise MultiplierMismatch(
                    "left and right antipode actions at %s, basis %d: %s"
                    % (g.labels[p], a, chk.witness))
            vals.append(m)
        mult[p] = vals
    s = AntipodeFamily(mult)
    return s


def antipode_report(pc, counit, s):
    """Antihomomorphism law and both damped antipode identities."""
    rep = Report()
    g = pc.group
    e = g.identity
    d1 = pc.dim(e)
    for p in g.elements():
        dp = pc.dim(p)
        if dp == 0:
            continue
        pi = g.inv[p]
        dpi = pc.dim(pi)
        alg = pc.components[p]
        vals = s.mult[p]
        name = "antipode antihomomorphism at %s" % g.labels[p]
        wit = None
        for a in range(dp):
            for b in range(dp):
                lw = Mat.zeros(dpi, dpi)
                rw = Mat.zeros(dpi, dpi)
                for k, c in alg.table[a][b]:
                    for i in range(dpi):
                        for j in range(dpi):
                            if vals[k].left.a[i][j] != 0:
                                lw.a[i][j] = lw.a[i][j] + c * vals[k].left.a[i][j]
                            if vals[k].right.a[i][j] != 0:
                                rw.a[i][j] = rw.a[i][j] + c * vals[k].right.a[i][j]
                comp = vals[b].compose(vals[a])
                if lw != comp.left or rw != comp.right:
                    wit = "S(e%d e%d) != S(e%d)S(e%d)" % (a, b, b, a)
                    break
            if wit:
                break
        rep.add(name, wit is None, wit)

        # damped cancellation identities, for a in A_1 and b, c in A_p
        name = "antipode identities at %s" % g.labels[p]
        wit = None
        t2 = pc.t2[(p, pi)]
        t1 = pc.t1[(pi, p)]
        algp = pc.components[p]
        spi = s.mult[pi]
        for a in range(d1):
            for b in range(dp):
                for c in range(dp):
                    cb = vec_scale(counit.eps[a],
                                   algp.mul_vec(basis_vec(dp, c),
                                                basis_vec(dp, b)))
                    # m((I (x) S)((c (x) 1)D(a))(1 (x) b)) == eps(a) cb
                    got = zeros_vec(dp)
                    for r, v in t2.col_nz(c * d1 + a):
                        u, w = divmod(r, dpi)
                        sw_b = spi[w].left.column(b)
                        piece = algp.mul_vec(basis_vec(dp, u), sw_b)
                        got = vec_add(got, vec_scale(v, piece))
                    if got != cb:
                        wit = ("(I x S) identity fails at (a,b,c)=(%d,%d,%d)"
                               % (a, b, c))
                        break
                    # m((c (x) 1)(S (x) I)(D(a)(1 (x) b))) == eps(a) cb
                    got = zeros_vec(dp)
                    for r, v in t1.col_nz(a * dp + b):
                        u, w = divmod(r, dp)
                        c_su = spi[u].right.column(c)
                        piece = algp.mul_vec(c_su, basis_vec(dp, w))
                        got = vec_add(got, vec_scale(v, piece))
                    if got != cb:
                        wit = ("(S x I) identity fails at (a,b,c)=(%d,%d,%d)"
                               % (a, b, c))
                        break
                if wit:
                    break
            if wit:
                break
        rep.add(name, wit is None, wit)
    return rep


def derive_antipode_inverse(pc, counit, s):
    """The inverse antipode from the flipped coproduct (regular case).

    Recognises both families as element-valued (filling .elt), checks
    S'_{p^-1} o S_p = id and S_p o S'_{p^-1} = id, and returns S'.
    """
    g = pc.group
    pc_op = pc.opposite_coalgebra()
    counit_op = derive_counit(pc_op)
    if counit_op.eps != counit.eps:
        raise Inconsistent("flipped coproduct has a different counit")
    sp = derive_antipode(pc_op, counit)
    for fam in (s, sp):
        for p in g.elements():
            dp = pc.dim(p)
            pi = g.inv[p]
            dpi = pc.dim(pi)
            m = Mat.zeros(dpi, dp)
            for a in range(dp):
                col = element_from_multiplier(pc.components[pi],
                                              fam.mult[p][a], strict=True)
                for i, v in enumerate(col):
                    m.a[i][a] = v
            fam.elt[p] = m
    for p in g.elements():
        dp = pc.dim(p)
        pi = g.inv[p]
        if sp.elt[pi].mul(s.elt[p]) != Mat.identity(dp):
            raise NotInvertible("S'_%s o S_%s != id"
                                % (g.labels[pi], g.labels[p]))
        if s.elt[pi].mul(sp.elt[p]) != Mat.identity(dp):
            raise NotInvertible("S_%s o S'_%s != id"
                                % (g.labels[pi], g.labels[p]))
    return sp


def check_antipode_coproduct_identity(pc, s):
    """(1 (x) S_a(b)) D(S_ab(a)) == (S_b (x) S_a)[D'(a)(1 (x) b)] cellwise."""
    rep = Report()
    g = pc.group
    opp = pc.build_opposite()
    for al in g.elements():
        for be in g.elements():
            alb = g.op(al, be)
            dal, dbe, dalb = pc.dim(al), pc.dim(be), pc.dim(alb)
            if dal == 0 or dbe == 0 or dalb == 0:
                continue
            bi, ai = g.inv[be], g.inv[al]
            dbi, dai = pc.dim(bi), pc.dim(ai)
            name = "antipode-coproduct %s" % pc._cell_label(al, be)
            wit = None
            t1p = opp.t1p[(al, be)]
            for a in range(dalb):
                sa = s.elt[alb].column(a)   # in A_{(ab)^-1} = A_{b^-1 a^-1}
                for b in range(dal):
                    sb = s.elt[al].column(b)    # in A_{a^-1}
                    Z = pc.delta_elem_left(bi, ai, sb, sa)
                    lhs = [Z[u][v] for u in range(dbi) for v in range(dai)]
                    rhs = zeros_vec(dbi * dai)
                    for r, v in t1p.col_nz(a * dal + b):
                        u, w = divmod(r, dal)   # u in A_be, w in A_al
                        svec = s.elt[be].apply(basis_vec(dbe, u))
                        wvec = s.elt[al].apply(basis_vec(dal, w))
                        for i, x in enumerate(svec):
                            if x == 0:
                                continue
                            for j, y in enumerate(wvec):
                                if y != 0:
                                    rhs[i * dai + j] = rhs[i * dai + j] + v * x * y
                    if lhs != rhs:
                        wit = "basis pair (%d,%d)" % (a, b)
                        break
                if wit:
                    break
            rep.add(name, wit is None, wit)
    return rep


def check_hopf_unital(pc, s):
    """With unital components, the closed forms

        R1(a (x) b) = ((I (x) S)D(a))(1 (x) b)
        R2(a (x) b) = (a (x) 1)((S (x) I)D(b))

    must equal the exact inverses of T1 and T2 on every cell."""
    rep = Report()
    g = pc.group
    units = {}
    for p in g.elements():
        if pc.dim(p) == 0:
            continue
        u = pc.components[p].unit()
        if u is None:
            rep.fail("hopf-unital (components unital)",
                     "component at %s has no unit; the family is not Hopf"
                     % g.labels[p])
            return rep
        units[p] = u
    rep.ok("hopf-unital (components unital)")
    elt = {}
    for p in g.elements():
        dp = pc.dim(p)
        pi = g.inv[p]
        dpi = pc.dim(pi)
        m = Mat.zeros(dpi, dp)
        if dp:
            for a in range(dp):
                col = s.mult[p][a].left.apply(units[pi])
                for i, v in enumerate(col):
                    m.a[i][a] = v
        elt[p] = m
    for p in g.elements():
        for q in g.elements():
            pq = g.op(p, q)
            dp, dq, dpq = pc.dim(p), pc.dim(q), pc.dim(pq)
            if dp == 0 or dq == 0 or dpq == 0:
                continue
            qi = g.inv[q]
            dqi = pc.dim(qi)
            pi = g.inv[p]
            dpi = pc.dim(pi)
            algq = pc.components[q]
            algp = pc.components[p]
            r1 = Mat.zeros(dpq * dq, dp * dq)
            t1u = pc.t1[(pq, qi)]
            for a in range(dp):
                # D_{pq,q^-1}(e_a) as an element, via the unit of A_{q^-1}
                img = zeros_vec(dpq * dqi)
                for d, ud in enumerate(units[qi]):
                    if ud == 0:
                        continue
                    for r, v in t1u.col_nz(a * dqi + d):
                        img[r] = img[r] + ud * v
                for b in range(dq):
                    col = zeros_vec(dpq * dq)
                    for idx, v in enumerate(img):
                        if v == 0:
                            continue
                        u, w = divmod(idx, dqi)
                        sw = elt[qi].apply(basis_vec(dqi, w))
                        piece = algq.mul_vec(sw, basis_vec(dq, b))
                        for k, x in enumerate(piece):
                            if x != 0:
                                col[u * dq + k] = col[u * dq + k] + v * x
                    for r, v in enumerate(col):
                        if v != 0:
                            r1.a[r][a * dq + b] = v
            name = "hopf-unital R1 %s" % pc._cell_label(p, q)
            rep.add(name, r1 == pc.t1_inv(p, q),
                    None if r1 == pc.t1_inv(p, q)
                    else "closed form differs from (T1)^-1")

            r2 = Mat.zeros(dp * dpq, dp * dq)
            t2u = pc.t2[(pi, pq)]
            for b in range(dq):
                img = zeros_vec(dpi * dpq)
                for d, ud in enumerate(units[pi]):
                    if ud == 0:
                        continue
                    for r, v in t2u.col_nz(d * dq + b):
                        img[r] = img[r] + ud * v
                for a in range(dp):
                    col = zeros_vec(dp * dpq)
                    for idx, v in enumerate(img):
                        if v == 0:
                            continue
                        u, w = divmod(idx, dpq)
                        su = elt[pi].apply(basis_vec(dpi, u))
                        piece = algp.mul_vec(basis_vec(dp, a), su)
                        for k, x in enumerate(piece):
                            if x != 0:
                                col[k * dpq + w] = col[k * dpq + w] + v * x
                    for r, v in enumerate(col):
                        if v != 0:
                            r2.a[r][a * dq + b] = v
            name = "hopf-unital R2 %s" % pc._cell_label(p, q)
            rep.add(name, r2 == pc.t2_inv(p, q),
                    None if r2 == pc.t2_inv(p, q)
                    else "closed form differs from (T2)^-1")
    return rep
