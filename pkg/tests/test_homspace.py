import random

import pytest
from hypothesis import given, settings, strategies as st

from ncdiff.algebra import ZOO_NAMES, zoo
from ncdiff.bimodule import direct_sum, regular
from ncdiff.homspace import ACTIONS, HomSpace, LinearMap, act, delta, delta_bar, identity_map

from conftest import lm

coeffs = st.lists(st.integers(-2, 2), min_size=6, max_size=6)


def _elem(A, cs):
    return A.elem(cs[:A.dim])


def test_unit_acts_trivially(algebra):
    R = regular(algebra)
    phi = HomSpace(R, R).random_map(random.Random(1))
    for which in ACTIONS:
        assert act(algebra.unit, phi, which) == phi
    assert delta(algebra.unit, phi).is_zero()
    assert delta_bar(algebra.unit, phi).is_zero()


def test_action_examples(dual, m2):
    R = regular(dual)
    eps = dual.element("eps")
    assert act(eps, identity_map(R), "left").matrix == dual.left_matrix(eps)
    RM = regular(m2)
    E11 = m2.element("E11")
    assert act(E11, identity_map(RM), "left") != act(E11, identity_map(RM), "right")
    for i in range(4):
        a = m2.basis(i)
        assert delta(a, identity_map(RM)).is_zero()
        assert delta_bar(a, identity_map(RM)).is_zero()


def test_delta_of_E(dual, dual_ops):
    R = regular(dual)
    assert delta(dual.element("eps"), dual_ops["E"]) == lm(R, R, [[-1, 0], [0, 1]])


def test_commutative_deltas_agree(dual, dual_ops):
    for D in dual_ops.values():
        for i in range(2):
            assert delta(dual.basis(i), D) == delta_bar(dual.basis(i), D)


@pytest.mark.parametrize("name", ["m2", "ut2", "gs3"])
@settings(max_examples=15, deadline=None)
@given(a=coeffs, b=coeffs, seed=st.integers(0, 10**6))
def test_action_laws(name, a, b, seed):
    A = zoo(name)
    R = regular(A)
    phi = HomSpace(R, R).random_map(random.Random(seed))
    a, b = _elem(A, a), _elem(A, b)
    ab, ba = A.multiply(a, b), A.multiply(b, a)
    # a(b phi) = (ab) phi and (phi a) b = phi (ab)
    assert act(a, act(b, phi, "left"), "left") == act(ab, phi, "left")
    assert act(b, act(a, phi, "right"), "right") == act(ab, phi, "right")
    # bullet: p -> phi(a p); applying a then b gives p -> phi(a b p)
    assert act(b, act(a, phi, "bullet"), "bullet") == act(ab, phi, "bullet")
    # rbullet: p -> phi(p a); applying a then b gives p -> phi(p b a)
    assert act(b, act(a, phi, "rbullet"), "rbullet") == act(ba, phi, "rbullet")
    # the four actions pairwise commute for different slots
    for x, y in (("left", "bullet"), ("left", "right"), ("right", "rbullet"), ("bullet", "rbullet")):
        assert act(a, act(b, phi, y), x) == act(b, act(a, phi, x), y)


@pytest.mark.parametrize("name", ZOO_NAMES)
def test_operator_matrices_match_direct_actions(name):
    A = zoo(name)
    R = regular(A)
    H = HomSpace(R, R)
    phi = H.random_map(random.Random(7))
    v = H.to_vec(phi)
    for which in ACTIONS:
        for i in range(A.dim):
            assert H.from_vec(H.action_ops[which][i].apply(v)) == act(A.basis(i), phi, which)
    for i in range(A.dim):
        assert H.from_vec(H.delta_ops[i].apply(v)) == delta(A.basis(i), phi)
        assert H.from_vec(H.delta_bar_ops[i].apply(v)) == delta_bar(A.basis(i), phi)


def test_delta_is_linear_in_a(m2):
    R = regular(m2)
    phi = HomSpace(R, R).random_map(random.Random(3))
    a, b = m2.elem([1, 2, 0, -1]), m2.elem([0, 1, 1, 3])
    s = tuple(x + y for x, y in zip(a, b))
    assert delta(s, phi) == delta(a, phi) + delta(b, phi)


def test_rectangular_hom_space(dual):
    P = regular(dual)
    Q = direct_sum(P, P)
    H = HomSpace(P, Q)
    assert H.dim == 8
    phi = H.random_map(random.Random(0))
    assert H.from_vec(H.to_vec(phi)) == phi
    assert H.zero_order_left().dim == 4


def test_mismatched_maps():
    A, B = zoo("dual"), zoo("m2")
    f = identity_map(regular(A))
    g = identity_map(regular(B))
    with pytest.raises(ValueError):
        f @ g
    with pytest.raises(ValueError):
        LinearMap(regular(A), regular(A), g.matrix)
