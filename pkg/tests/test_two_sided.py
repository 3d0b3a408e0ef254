import dataclasses
import itertools

import pytest

from ncdiff.algebra import zoo
from ncdiff.bimodule import regular
from ncdiff.derivations import derivation_lie_algebra, inner_derivation
from ncdiff.diffop import (Form, MalformedWitness, TwoSidedWitness, check_two_sided,
                           derivation_composition_witness, lift, zero_witness)
from ncdiff.homspace import LinearMap, identity_map, zero_map


def test_zero_and_identity(m2):
    R = regular(m2)
    assert check_two_sided(zero_map(R, R), zero_witness(0))
    assert check_two_sided(zero_map(R, R), zero_witness(2))
    idw = TwoSidedWitness(0, base="left")
    assert check_two_sided(identity_map(R), idw)
    assert check_two_sided(identity_map(R), lift(identity_map(R), idw, 2))


def test_left_multiplication_base_tags(m2):
    R = regular(m2)
    Lc = LinearMap(R, R, m2.left_matrix(m2.element("E12")))
    assert not check_two_sided(Lc, TwoSidedWitness(0, base="left"))
    assert check_two_sided(Lc, TwoSidedWitness(0, base="right"))


def test_decomposed_zero_order_base(m2):
    R = regular(m2)
    c, q = m2.element("E11"), m2.element("E21")
    Rq = LinearMap(R, R, m2.right_matrix(q))
    D = LinearMap(R, R, m2.left_matrix(c)) @ Rq
    assert check_two_sided(D, TwoSidedWitness(0, base="left", base_terms=((c, Rq),)))
    assert not check_two_sided(D, TwoSidedWitness(0, base="left", base_terms=((q, Rq),)))
    assert not check_two_sided(D, TwoSidedWitness(0, base="left"))


@pytest.mark.parametrize("name", ["dual", "m2", "ut2", "trunc3"])
def test_single_and_pair_compositions(name):
    A = zoo(name)
    L = derivation_lie_algebra(A)
    for word in [(u,) for u in L.basis] + list(itertools.product(L.basis, repeat=2)):
        D, w = derivation_composition_witness(word)
        expected = word[0]
        for u in word[1:]:
            expected = expected @ u
        assert D == expected and w.order == len(word)
        assert check_two_sided(D, w)


def test_euler_square(dual):
    u = derivation_lie_algebra(dual).basis[0]
    assert u @ u == u
    D, w = derivation_composition_witness([u, u])
    assert w.order == 2 and check_two_sided(D, w)


def test_inner_pair_on_m2(m2):
    u = inner_derivation(m2, m2.element("E12"))
    v = inner_derivation(m2, m2.element("E21"))
    D, w = derivation_composition_witness([u, v])
    assert check_two_sided(D, w)


def test_triple_composition(dual):
    u = derivation_lie_algebra(dual).basis[0]
    D, w = derivation_composition_witness([u, u, u])
    assert w.order == 3 and check_two_sided(D, w)


def test_rejects_non_derivations(dual, dual_ops):
    with pytest.raises(ValueError):
        derivation_composition_witness([dual_ops["E"]])
    with pytest.raises(ValueError):
        derivation_composition_witness([])


def test_tampered_witness_fails(m2):
    u = inner_derivation(m2, m2.element("E12"))
    D, w = derivation_composition_witness([u])
    # a certificate for u does not certify 2u
    assert not check_two_sided(D.scale(2), w)
    term = w.left.terms[0]
    bad_term = dataclasses.replace(term, coeff=m2.element("E11"))
    bad = dataclasses.replace(w, left=Form((bad_term,)))
    assert not check_two_sided(D, bad)


def test_malformed_witnesses(m2):
    u = inner_derivation(m2, m2.element("E12"))
    D, w = derivation_composition_witness([u])
    with pytest.raises(MalformedWitness):
        check_two_sided(D, TwoSidedWitness(1, base="left"))
    with pytest.raises(MalformedWitness):
        check_two_sided(D, TwoSidedWitness(0, base="up"))
    term = w.left.terms[0]
    short = dataclasses.replace(term, deltas=term.deltas[:2])
    with pytest.raises(MalformedWitness):
        check_two_sided(D, dataclasses.replace(w, left=Form((short,))))
    with pytest.raises(MalformedWitness):
        lift(D, w, 0)


def test_mixed_sides_below_order_one_rejected():
    # on trunc3 delta = delta_bar, so each sub-witness below is valid on its own;
    # mixing sides across basis elements is still refused
    A = zoo("trunc3")
    u = derivation_lie_algebra(A).basis[0]
    D, w = derivation_composition_witness([u])
    term = w.left.terms[0]
    same = tuple(TwoSidedWitness(0, base="left") for _ in range(3))
    mixed = (TwoSidedWitness(0, base="left"), TwoSidedWitness(0, base="left"),
             TwoSidedWitness(0, base="right"))
    ok = dataclasses.replace(w, left=Form((dataclasses.replace(term, deltas=same),)))
    assert check_two_sided(D, ok)
    bad = dataclasses.replace(w, left=Form((dataclasses.replace(term, deltas=mixed),)))
    assert not check_two_sided(D, bad)
