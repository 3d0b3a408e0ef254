import pytest

from ncdiff.algebra import Algebra, ZOO_NAMES, center, is_central, zoo
from ncdiff.bimodule import (Bimodule, character_bimodule, direct_sum, regular, submodule,
                             twisted)
from ncdiff.exactla import DimensionError, Matrix, Subspace

DIMS = {"Q": 1, "dual": 2, "trunc3": 3, "trunc4": 4, "m2": 4, "quat": 4, "ut2": 3, "gs3": 6}
CENTERS = {"Q": 1, "dual": 2, "trunc3": 3, "trunc4": 4, "m2": 1, "quat": 1, "ut2": 1, "gs3": 3}


def test_zoo_dims_and_validity(algebra):
    assert algebra.dim == DIMS[algebra.name]
    assert algebra.validate().ok
    assert algebra.center().dim == CENTERS[algebra.name]
    assert algebra.is_commutative() == (CENTERS[algebra.name] == DIMS[algebra.name])


def test_multiplication_tables():
    H = zoo("quat")
    assert H.multiply(H.element("i"), H.element("j")) == H.element("k")
    D = zoo("dual")
    eps = D.element("eps")
    assert D.multiply(eps, eps) == D.zero()
    M = zoo("m2")
    assert M.multiply(M.element("E11"), M.element("E12")) == M.element("E12")


def test_perturbed_table_fails_with_triple(m2):
    mul = [list(map(list, row)) for row in m2.mul]
    mul[0][0] = [2, 0, 0, 0]
    bad = Algebra("bad", m2.basis_labels, m2.unit, mul)
    rep = bad.validate()
    assert not rep.ok and "associativity" in rep.violation and len(rep.witness) == 3


def test_zero_unit_rejected():
    A = Algebra("z", ("x",), (0,), (((0,),),))
    assert not A.validate().ok


def test_shape_errors():
    with pytest.raises(DimensionError):
        Algebra("x", ("a", "b"), (1, 0), (((1,),),))


def test_center_of_m2(m2):
    assert center(m2) == Subspace.span([m2.unit], 4)
    assert is_central(m2, m2.unit)
    assert not is_central(m2, m2.element("E11"))


def test_gs3_center_is_class_sums():
    G = zoo("gs3")
    transp = tuple(Gx + Gy + Gz for Gx, Gy, Gz in zip(G.element("(12)"), G.element("(13)"),
                                                      G.element("(23)")))
    cycles = tuple(x + y for x, y in zip(G.element("(123)"), G.element("(132)")))
    assert G.center() == Subspace.span([G.unit, transp, cycles], 6)


def test_zoo_unknown():
    with pytest.raises(KeyError):
        zoo("nope")
    assert set(DIMS) == set(ZOO_NAMES)


# bimodules ---------------------------------------------------------------


def test_regular_bimodules(algebra):
    R = regular(algebra)
    assert R.dim == algebra.dim and R.validate().ok


def test_act_examples(dual, m2):
    R = regular(dual)
    assert R.act(dual.element("eps"), dual.unit, "left") == dual.element("eps")
    p = (3, 5)
    assert R.act(dual.unit, p) == tuple(R.field(x) for x in p)
    RM = regular(m2)
    assert RM.act(m2.element("E11"), m2.element("E22"), "left") == m2.zero()
    assert RM.left_matrix(m2.element("E11")) != RM.right_matrix(m2.element("E11"))
    RQ = regular(zoo("Q"))
    assert RQ.left[0] == RQ.right[0] == Matrix.identity(1)


def test_misconstructed_bimodule_fails(m2):
    R = regular(m2)
    M = Bimodule(m2, 4, R.left, R.left)
    rep = M.validate()
    assert not rep.ok and "right action" in rep.violation


def test_direct_sum_and_submodule():
    U = zoo("ut2")
    S = direct_sum(regular(U), regular(U))
    assert S.dim == 6 and S.validate().ok
    # the first summand is a sub-bimodule
    first = Subspace.span([tuple(1 if k == i else 0 for k in range(6)) for i in range(3)], 6)
    sub = submodule(S, first)
    assert sub.left == regular(U).left and sub.right == regular(U).right
    # E12 spans an ideal of ut2, E11 does not
    assert submodule(S, Subspace.span([(0, 1, 0, 0, 0, 0)], 6)).validate().ok
    with pytest.raises(ValueError):
        submodule(S, Subspace.span([(1, 0, 0, 0, 0, 0)], 6))


def test_twisted_needs_central_sigma(dual):
    # eps -> 2 eps is multiplicative but moves the (whole) center
    sigma = Matrix([[1, 0], [0, 2]])
    T = twisted(dual, sigma)
    rep = T.validate()
    assert not rep.ok and "center" in rep.violation


def test_character_bimodules():
    U = zoo("ut2")  # E11, E12, E22
    K = character_bimodule(U, (1, 0, 0), (0, 0, 1))
    assert K.validate().ok
    bad = character_bimodule(U, (1, 1, 0), (0, 0, 1))
    assert not bad.validate().ok
