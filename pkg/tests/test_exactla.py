from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ncdiff.exactla import (QQ, DimensionError, Matrix, Mod, PrimeField, Subspace, field_from_name,
                            image, intersect, kernel, preimage, rref, solve, span_sum, unit_vector)

small = st.integers(min_value=-3, max_value=3)


def matrices(max_r=4, max_c=4):
    return st.integers(1, max_r).flatmap(lambda r: st.integers(1, max_c).flatmap(
        lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


def test_rref_examples():
    assert rref(Matrix([[2, 4], [1, 2]])) == Matrix([[1, 2], [0, 0]])
    assert rref(Matrix.identity(3)) == Matrix.identity(3)
    assert rref(Matrix([[0, 1], [1, 0]])) == Matrix.identity(2)


def test_kernel_examples():
    assert kernel(Matrix([[1, 2], [0, 0]])) == Subspace.span([(-2, 1)], 2)
    assert kernel(Matrix.identity(3)).dim == 0
    assert kernel(Matrix.zeros(2, 3)) == Subspace.full(3)


def test_subspace_operations():
    e = [unit_vector(3, i) for i in range(3)]
    assert span_sum(Subspace.span([e[0]], 3), Subspace.span([e[1]], 3)) == Subspace.span(e[:2], 3)
    assert intersect(Subspace.span(e[:2], 3), Subspace.span(e[1:], 3)) == Subspace.span([e[1]], 3)
    V = Subspace.span([(1, 1, 0)], 3)
    assert preimage(Matrix.identity(3), V) == V


def test_rational_parsing():
    assert QQ("3/6") == Fraction(1, 2)
    assert QQ(" -2 ") == -2
    with pytest.raises(ZeroDivisionError):
        QQ("1/0")
    for bad in ("1.5", "1/2/3", "", "abc", "1e3"):
        with pytest.raises(ValueError):
            QQ(bad)
    with pytest.raises(TypeError):
        QQ(0.5)


def test_prime_field():
    F = field_from_name("Fp:7")
    assert F == PrimeField(7)
    assert F(3) * F(5) == F(1)
    assert F("1/3") * F(3) == F.one
    assert isinstance(F(10), Mod)
    with pytest.raises(ValueError):
        PrimeField(9)
    M = Matrix([[1, 2], [2, 4]], field=F)
    assert kernel(M).dim == 1


def test_dimension_errors():
    with pytest.raises(DimensionError):
        Matrix([[1, 2], [3]])
    with pytest.raises(DimensionError):
        Matrix.identity(2).apply((1, 2, 3))
    with pytest.raises(DimensionError):
        Matrix.identity(2) @ Matrix.identity(3)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity_and_kernel(rows):
    M = Matrix(rows)
    K = kernel(M)
    assert K.dim + M.rank() == M.ncols
    for v in K.basis:
        assert all(x == 0 for x in M.apply(v))
    assert image(M).dim == M.rank()


@settings(max_examples=60, deadline=None)
@given(matrices(), st.lists(small, min_size=4, max_size=4))
def test_preimage_property(rows, w):
    M = Matrix(rows)
    V = Subspace.span([tuple(w[:M.nrows])], M.nrows)
    P = preimage(M, V)
    for v in P.basis:
        assert V.contains(M.apply(v))
    # everything mapping into V is in P: test the kernel, which always does
    assert kernel(M).is_subspace_of(P)


@settings(max_examples=40, deadline=None)
@given(matrices(3, 3), st.lists(small, min_size=3, max_size=3))
def test_solve(rows, x):
    M = Matrix(rows)
    x = tuple(Fraction(v) for v in x[:M.ncols])
    b = M.apply(x)
    y = solve(M, b)
    assert y is not None and M.apply(y) == b


@settings(max_examples=40, deadline=None)
@given(matrices(3, 4), matrices(3, 4))
def test_sum_and_intersection_dims(r1, r2):
    n = 4
    U = Subspace.span([tuple(r + [0] * (n - len(r))) for r in r1], n)
    V = Subspace.span([tuple(r + [0] * (n - len(r))) for r in r2], n)
    assert (U + V).dim + (U & V).dim == U.dim + V.dim
    assert (U & V).is_subspace_of(U) and U.is_subspace_of(U + V)


def test_coordinates_roundtrip():
    S = Subspace.span([(1, 2, 3), (0, 1, 1)], 3)
    v = (2, 5, 7)
    assert S.vector(S.coordinates(v)) == v
    assert not S.contains((0, 0, 1))
