"""Example generators and mutants.

Generators assemble T1/T2 matrices directly from closed-form coproduct
formulas; they share no code with the verification paths, so a bug in
either side shows up as a red check rather than cancelling out.
"""

from .algebra import ComponentAlgebra
from .coalgebra import PiCoalgebra
from .errors import MHGCError
from .groups import FiniteGroup
from .linalg import Mat
from .scalars import QONE

MUTANT_KINDS = ("swap-t1-legs", "zero-row", "non-subgroup-support",
                "degenerate-product")


def _function_component(n):
    """Pointwise function algebra on n points."""
    return ComponentAlgebra(
        n, [[[(i, QONE)] if i == j else [] for j in range(n)]
            for i in range(n)])


def function_algebra_example(g):
    """The family A_p = functions on G with D(f)(s, t) = f(q^-1 s q t).

    T1[p,q](d_x (x) d_y) = d_{q x y^-1 q^-1} (x) d_y
    T2[p,q](d_x (x) d_y) = d_x (x) d_{q^-1 x^-1 q y}
    """
    n = g.order
    comp = _function_component(n)
    components = [comp for _ in g.elements()]
    t1 = {}
    t2 = {}
    for p in g.elements():
        for q in g.elements():
            qi = g.inv[q]
            m1 = Mat.zeros(n * n, n * n)
            m2 = Mat.zeros(n * n, n * n)
            for x in g.elements():
                for y in g.elements():
                    s = g.op(g.op(q, g.op(x, g.inv[y])), qi)
                    m1.a[s * n + y][x * n + y] = QONE
                    t = g.op(g.op(qi, g.op(g.inv[x], q)), y)
                    m2.a[x * n + t][x * n + y] = QONE
            t1[(p, q)] = m1
            t2[(p, q)] = m2
    return PiCoalgebra(g, components, t1, t2)


def trivial_group_example(alg, t1, t2):
    """A single algebra with coproduct tensors, as a family over {e}."""
    g = FiniteGroup.trivial()
    return PiCoalgebra(g, [alg], {(0, 0): t1}, {(0, 0): t2})


def group_algebra_data(g):
    """Group algebra K[G] with D(u_x) = u_x (x) u_x; returns (alg, t1, t2)."""
    n = g.order
    alg = ComponentAlgebra(
        n, [[[(g.op(i, j), QONE)] for j in range(n)] for i in range(n)])
    t1 = Mat.zeros(n * n, n * n)
    t2 = Mat.zeros(n * n, n * n)
    for x in g.elements():
        for y in g.elements():
            t1.a[x * n + g.op(x, y)][x * n + y] = QONE
            t2.a[g.op(x, y) * n + y][x * n + y] = QONE
    return alg, t1, t2


def convolution_function_data(g):
    """Functions on G with D(f)(s, t) = f(st); returns (alg, t1, t2)."""
    n = g.order
    alg = _function_component(n)
    t1 = Mat.zeros(n * n, n * n)
    t2 = Mat.zeros(n * n, n * n)
    for x in g.elements():
        for y in g.elements():
            t1.a[g.op(x, g.inv[y]) * n + y][x * n + y] = QONE
            t2.a[x * n + g.op(g.inv[x], y)][x * n + y] = QONE
    return alg, t1, t2


def subgroup_supported_example(g, support):
    """Function-algebra family on a subgroup H, zero outside H.

    Components at p in H are functions on H; the coproduct formulas are
    those of the H-function-algebra example.
    """
    h = sorted(support)
    hset = set(h)
    hidx = {x: i for i, x in enumerate(h)}
    n = len(h)
    comp = _function_component(n)
    zero = ComponentAlgebra(0, [])
    components = [comp if p in hset else zero for p in g.elements()]

    def dim(p):
        return n if p in hset else 0

    t1 = {}
    t2 = {}
    for p in g.elements():
        for q in g.elements():
            pq = g.op(p, q)
            m1 = Mat.zeros(dim(p) * dim(q), dim(pq) * dim(q))
            m2 = Mat.zeros(dim(p) * dim(q), dim(p) * dim(pq))
            if p in hset and q in hset and pq in hset:
                qi = g.inv[q]
                for x in h:
                    for y in h:
                        s = g.op(g.op(q, g.op(x, g.inv[y])), qi)
                        m1.a[hidx[s] * n + hidx[y]][hidx[x] * n + hidx[y]] = QONE
                        t = g.op(g.op(qi, g.op(g.inv[x], q)), y)
                        m2.a[hidx[x] * n + hidx[t]][hidx[x] * n + hidx[y]] = QONE
            t1[(p, q)] = m1
            t2[(p, q)] = m2
    return PiCoalgebra(g, components, t1, t2)


def _flip_matrix(da, db):
    """Permutation matrix of a (x) b -> b (x) a."""
    m = Mat.zeros(db * da, da * db)
    for i in range(da):
        for j in range(db):
            m.a[j * da + i][i * db + j] = QONE
    return m


def mutant_example(base, kind):
    """A deliberately broken copy of base targeting one verification stage."""
    g = base.group
    if kind == "swap-t1-legs":
        cell = next((p, q) for p in g.elements() for q in g.elements()
                    if base.dim(p) == base.dim(q) and base.dim(p) > 0)
        p, q = cell
        t1 = dict(base.t1)
        t1[(p, q)] = _flip_matrix(base.dim(p), base.dim(q)).mul(t1[(p, q)])
        return PiCoalgebra(g, base.components, t1, base.t2)
    if kind == "zero-row":
        cell = next((p, q) for p in g.elements() for q in g.elements()
                    if base.t1[(p, q)].rows > 0)
        p, q = cell
        t1 = dict(base.t1)
        m = t1[(p, q)].copy()
        row = next((i for i in range(m.rows)
                    if any(v != 0 for v in m.a[i])), 0)
        m.a[row] = [v * 0 for v in m.a[row]]
        t1[(p, q)] = m
        return PiCoalgebra(g, base.components, t1, base.t2)
    if kind == "non-subgroup-support":
        e = g.identity
        bad = None
        for x in g.elements():
            if x == e:
                continue
            if g.op(x, x) not in (e, x):
                bad = {e, x}
                break
        if bad is None:
            # every non-identity element is an involution; drop the identity
            if g.order < 2:
                raise MHGCError("no non-subgroup support exists for the "
                                "trivial group")
            bad = {next(x for x in g.elements() if x != e)}
        zero = ComponentAlgebra(0, [])
        components = [base.components[p] if p in bad else zero
                      for p in g.elements()]

        def dim(p):
            return components[p].dim

        t1 = {}
        t2 = {}
        for p in g.elements():
            for q in g.elements():
                pq = g.op(p, q)
                if dim(p) and dim(q) and dim(pq):
                    t1[(p, q)] = base.t1[(p, q)]
                    t2[(p, q)] = base.t2[(p, q)]
                else:
                    t1[(p, q)] = Mat.zeros(dim(p) * dim(q), dim(pq) * dim(q))
                    t2[(p, q)] = Mat.zeros(dim(p) * dim(q), dim(p) * dim(pq))
        return PiCoalgebra(g, components, t1, t2)
    if kind == "degenerate-product":
        e = g.identity
        d = base.dim(e)
        dead = ComponentAlgebra(d, [[[] for _ in range(d)] for _ in range(d)])
        components = list(base.components)
        components[e] = dead
        return PiCoalgebra(g, components, base.t1, base.t2)
    raise MHGCError("unknown mutant kind %r (expected one of %s)"
                    % (kind, ", ".join(MUTANT_KINDS)))
