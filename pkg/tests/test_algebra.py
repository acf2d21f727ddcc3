import pytest

from mhgc.algebra import (ComponentAlgebra, Multiplier,
                          element_from_multiplier, extend_nondegenerate_hom,
                          multiplier_from_element, tensor_algebra)
from mhgc.errors import NotElement, NotNondegenerate
from mhgc.linalg import Mat, basis_vec
from mhgc.scalars import Q


def functions_on(n):
    """Pointwise function algebra on n points: e_i e_j = [i=j] e_i."""
    return ComponentAlgebra(
        n, [[[(i, Q(1))] if i == j else [] for j in range(n)]
            for i in range(n)])


def truncated_nilpotent():
    """x K[x] / (x^3): basis x, x^2; degenerate (x^2 kills everything)."""
    return ComponentAlgebra(2, [
        [[(1, Q(1))], []],
        [[], []],
    ])


def test_function_algebra_basics():
    a = functions_on(3)
    assert a.check_associative().passed
    assert a.check_nondegenerate().passed
    assert a.unit() == [Q(1), Q(1), Q(1)]
    assert a.mul_vec([Q(2), Q(0), Q(1)], [Q(1), Q(5), Q(3)]) == \
        [Q(2), Q(0), Q(3)]


def test_mult_matrices():
    a = functions_on(2)
    x = [Q(3), Q(-1)]
    L = a.left_mult_matrix(x)
    R = a.right_mult_matrix(x)
    for j in range(2):
        assert L.column(j) == a.mul_vec(x, basis_vec(2, j))
        assert R.column(j) == a.mul_vec(basis_vec(2, j), x)


def test_degenerate_detected():
    a = truncated_nilpotent()
    assert a.check_associative().passed
    chk = a.check_nondegenerate()
    assert not chk.passed
    assert chk.witness


def test_zero_product_degenerate():
    a = ComponentAlgebra(1, [[[]]])
    assert not a.check_nondegenerate().passed


def test_zero_dim_component():
    a = ComponentAlgebra(0, [])
    assert a.check_associative().passed
    assert a.check_nondegenerate().passed
    assert a.unit() is None


def test_non_associative_detected():
    # e0 e0 = e1, e0 e1 = e0, others zero: (e0 e0) e0 = e0 but e0 (e0 e0) = e0
    a = ComponentAlgebra(2, [
        [[(1, Q(1))], [(0, Q(1))]],
        [[], []],
    ])
    assert not a.check_associative().passed


def test_unit_missing():
    # x x = x, everything with y is zero: no unit can fix y
    a = ComponentAlgebra(2, [
        [[(0, Q(1))], []],
        [[], []],
    ])
    assert a.unit() is None


def test_multiplier_roundtrip():
    a = functions_on(3)
    x = [Q(1), Q(-2), Q(1, 3)]
    m = multiplier_from_element(a, x)
    assert m.check().passed
    assert element_from_multiplier(a, m) == x


def test_multiplier_not_element():
    a = truncated_nilpotent()
    m = Multiplier(a, Mat.identity(2), Mat.identity(2))
    assert m.check().passed  # the identity is a genuine multiplier
    assert element_from_multiplier(a, m) is None
    with pytest.raises(NotElement):
        element_from_multiplier(a, m, strict=True)


def test_multiplier_check_fails():
    a = functions_on(2)
    # L = swap is not a module map for this product
    swap = Mat.from_rows([[0, 1], [1, 0]])
    m = Multiplier(a, swap, swap)
    assert not m.check().passed


def test_multiplier_compose():
    a = functions_on(3)
    x = [Q(1), Q(2), Q(0)]
    y = [Q(0), Q(1), Q(5)]
    mx = multiplier_from_element(a, x)
    my = multiplier_from_element(a, y)
    assert mx.compose(my) == multiplier_from_element(a, a.mul_vec(x, y))


def test_tensor_algebra():
    a = functions_on(2)
    t = tensor_algebra(a, a)
    assert t.dim == 4
    assert t.check_associative().passed
    assert t.check_nondegenerate().passed
    assert t.unit() == [Q(1)] * 4


def test_extend_hom_identity_embedding():
    a = functions_on(2)
    phi = [multiplier_from_element(a, basis_vec(2, i)) for i in range(2)]
    m = Multiplier.one(a)
    ext = extend_nondegenerate_hom(a, a, phi, m)
    assert ext == Multiplier.one(a)
    mx = multiplier_from_element(a, [Q(2), Q(3)])
    ext = extend_nondegenerate_hom(a, a, phi, mx)
    assert ext == mx


def test_extend_hom_unit_embedding():
    # phi: K -> M(K^2) sending the one-point unit to the identity multiplier
    k1 = functions_on(1)
    b = functions_on(2)
    phi = [Multiplier.one(b)]
    mx = multiplier_from_element(k1, [Q(7)])
    ext = extend_nondegenerate_hom(k1, b, phi, mx)
    assert ext.left == Mat.from_rows([[7, 0], [0, 7]])


def test_extend_hom_degenerate_rejected():
    k1 = functions_on(1)
    b = functions_on(2)
    phi = [Multiplier(b, Mat.zeros(2, 2), Mat.zeros(2, 2))]
    with pytest.raises(NotNondegenerate):
        extend_nondegenerate_hom(k1, b, phi, Multiplier.one(k1))
