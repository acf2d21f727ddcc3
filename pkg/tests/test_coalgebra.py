import pytest

from mhgc.builders import (convolution_function_data, function_algebra_example,
                           group_algebra_data, mutant_example,
                           subgroup_supported_example, trivial_group_example)
from mhgc.errors import NotASubgroup
from mhgc.groups import FiniteGroup
from mhgc.linalg import Mat, basis_vec, zeros_vec
from mhgc.scalars import Q

Z2 = FiniteGroup.cyclic(2)
Z3 = FiniteGroup.cyclic(3)
S3 = FiniteGroup.symmetric(3)


# -- independent oracles ------------------------------------------------
# These evaluate the coproduct of the function-algebra family pointwise
# on the (s, t) grid, instead of using index formulas.

def delta_value(g, q, a, s, t):
    """D(d_a)(s, t) for the coproduct D(f)(s, t) = f(q^-1 s q t)."""
    return 1 if g.op(g.op(g.inv[q], g.op(s, q)), t) == a else 0


def oracle_t1(g, q):
    """T1(f (x) h)(s, t) = D(f)(s, t) h(t), entry by entry."""
    n = g.order
    m = Mat.zeros(n * n, n * n)
    for a in range(n):
        for b in range(n):
            for s in range(n):
                for t in range(n):
                    if delta_value(g, q, a, s, t) and t == b:
                        m.a[s * n + t][a * n + b] = Q(1)
    return m


def oracle_t2(g, q):
    """T2(f (x) h)(s, t) = f(s) D(h)(s, t)."""
    n = g.order
    m = Mat.zeros(n * n, n * n)
    for a in range(n):
        for b in range(n):
            for s in range(n):
                for t in range(n):
                    if s == a and delta_value(g, q, b, s, t):
                        m.a[s * n + t][a * n + b] = Q(1)
    return m


@pytest.mark.parametrize("g", [Z2, Z3, S3], ids=["z2", "z3", "s3"])
def test_generator_matches_pointwise_oracle(g):
    pc = function_algebra_example(g)
    for p in g.elements():
        for q in g.elements():
            assert pc.t1[(p, q)] == oracle_t1(g, q)
            assert pc.t2[(p, q)] == oracle_t2(g, q)


def test_z2_t1_action_and_rank():
    pc = function_algebra_example(Z2)
    t1 = pc.t1[(0, 1)]
    # T1 sends d_e (x) d_g to d_g (x) d_g
    col = t1.column(0 * 2 + 1)
    expect = zeros_vec(4)
    expect[1 * 2 + 1] = Q(1)
    assert col == expect
    assert t1.rank() == 4


def test_delta_left_action_pointwise():
    pc = function_algebra_example(Z3)
    g = Z3
    n = 3
    for p in range(3):
        for q in range(3):
            for a in range(n):
                for i in range(n):
                    for j in range(n):
                        x = basis_vec(n * n, i * n + j)
                        got = pc.delta_left_action(p, q, basis_vec(n, a), x)
                        want = [Q(delta_value(g, q, a, i, j)) * v for v in x]
                        assert got == want
                        # pointwise algebras are commutative: same on right
                        assert pc.delta_right_action(p, q, x,
                                                     basis_vec(n, a)) == want


@pytest.mark.parametrize("g", [Z2, Z3], ids=["z2", "z3"])
def test_function_algebra_axioms(g):
    pc = function_algebra_example(g)
    assert pc.verify_comultiplication().passed
    assert pc.verify_bijectivity().passed
    assert pc.verify_regularity().passed
    assert pc.support_subgroup() == set(g.elements())


def test_closed_form_t1_inverse():
    # R1(f)(s, t) = f(q s t^-1 q^-1, t), i.e. d_x (x) d_y -> d_{q^-1 x q y} (x) d_y
    g = Z3
    pc = function_algebra_example(g)
    n = 3
    for p in range(3):
        for q in range(3):
            inv = pc.t1_inv(p, q)
            want = Mat.zeros(n * n, n * n)
            for x in range(n):
                for y in range(n):
                    s = g.op(g.op(g.inv[q], g.op(x, q)), y)
                    want.a[s * n + y][x * n + y] = Q(1)
            assert inv == want


def test_group_algebra_z2():
    alg, t1, t2 = group_algebra_data(Z2)
    pc = trivial_group_example(alg, t1, t2)
    assert pc.verify_comultiplication().passed
    assert pc.verify_bijectivity().passed
    assert pc.verify_regularity().passed


def test_convolution_functions_z3():
    alg, t1, t2 = convolution_function_data(Z3)
    pc = trivial_group_example(alg, t1, t2)
    assert pc.verify_comultiplication().passed
    assert pc.verify_bijectivity().passed
    assert pc.verify_regularity().passed


def test_opposite_maps_closed_form():
    # D(d_a)(d_b (x) 1) = d_b (x) d_{q^-1 b^-1 q a}; the flipped map swaps legs
    g = Z3
    pc = function_algebra_example(g)
    opp = pc.build_opposite()
    n = 3
    for p in range(3):
        for q in range(3):
            m = opp.t1p[(p, q)]
            want = Mat.zeros(n * n, n * n)
            for a in range(n):
                for b in range(n):
                    t = g.op(g.op(g.inv[q], g.op(g.inv[b], q)), a)
                    want.a[t * n + b][a * n + b] = Q(1)
            assert m == want


def test_opposite_is_involutive():
    for pc in [function_algebra_example(Z3),
               trivial_group_example(*group_algebra_data(Z2))]:
        back = pc.opposite_coalgebra().opposite_coalgebra()
        assert back.group == pc.group
        for key in pc.t1:
            assert back.t1[key] == pc.t1[key]
            assert back.t2[key] == pc.t2[key]


def test_subgroup_supported_family():
    trans = next(x for x in S3.elements()
                 if x != S3.identity and S3.op(x, x) == S3.identity)
    h = {S3.identity, trans}
    pc = subgroup_supported_example(S3, h)
    assert pc.support_subgroup() == h
    assert pc.verify_comultiplication().passed
    assert pc.verify_bijectivity().passed
    assert pc.verify_regularity().passed


def test_mutant_swap_t1_legs():
    pc = mutant_example(function_algebra_example(Z2), "swap-t1-legs")
    assert all(c.check_nondegenerate().passed for c in pc.components)
    assert pc.verify_bijectivity().passed  # a flip stays invertible
    rep = pc.verify_comultiplication()
    assert not rep.passed
    assert rep.first_failure().witness


def test_mutant_zero_row():
    pc = mutant_example(function_algebra_example(Z2), "zero-row")
    assert all(c.check_nondegenerate().passed for c in pc.components)
    rep = pc.verify_bijectivity()
    assert not rep.passed
    assert "SingularMatrix" in rep.first_failure().witness


def test_mutant_degenerate_product():
    pc = mutant_example(function_algebra_example(Z2), "degenerate-product")
    assert not pc.components[Z2.identity].check_nondegenerate().passed


def test_mutant_non_subgroup_support():
    pc = mutant_example(function_algebra_example(Z3), "non-subgroup-support")
    with pytest.raises(NotASubgroup):
        pc.support_subgroup()
    pc = mutant_example(function_algebra_example(Z2), "non-subgroup-support")
    with pytest.raises(NotASubgroup):
        pc.support_subgroup()


def test_empty_support_is_allowed():
    from mhgc.algebra import ComponentAlgebra
    from mhgc.coalgebra import PiCoalgebra
    zero = ComponentAlgebra(0, [])
    z = Mat.zeros(0, 0)
    pc = PiCoalgebra(Z2, [zero, zero],
                     {(p, q): z for p in range(2) for q in range(2)},
                     {(p, q): z for p in range(2) for q in range(2)})
    assert pc.support_subgroup() == set()
    assert pc.verify_comultiplication().passed
    assert pc.verify_bijectivity().passed
