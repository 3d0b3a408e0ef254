"""Derivation spaces d(A, Q) and the Lie algebra of derivations of A."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import Algebra
from .bimodule import Bimodule, regular
from .exactla import Matrix, Subspace, kernel, unit_vector
from .homspace import HomSpace, LinearMap


def leibniz_defect(D: LinearMap, a, b):
    """D(ab) - D(a) b - a D(b) for an A-valued-in-Q map D on regular(A)."""
    A = D.source.algebra
    Q = D.target
    lhs = D(A.multiply(a, b))
    r1 = Q.right_matrix(b).apply(D(a))
    r2 = Q.left_matrix(a).apply(D(b))
    return tuple(x - y - z for x, y, z in zip(lhs, r1, r2))


def leibniz_violation(D: LinearMap):
    """First basis pair (i, j) where the Leibniz rule fails, or None."""
    A = D.source.algebra
    for i, j in itertools.product(range(A.dim), repeat=2):
        if any(x != 0 for x in leibniz_defect(D, A.basis(i), A.basis(j))):
            return (i, j)
    return None


def is_derivation(D: LinearMap) -> bool:
    return leibniz_violation(D) is None


def inner_derivation_into(Q: Bimodule, q) -> LinearMap:
    """a -> a q - q a as a map regular(A) -> Q."""
    A = Q.algebra
    cols = [tuple(x - y for x, y in zip(Q.left[i].apply(q), Q.right[i].apply(q)))
            for i in range(A.dim)]
    return LinearMap(regular(A), Q, Matrix.from_columns(cols, Q.dim, A.field))


def inner_derivation(A: Algebra, q) -> LinearMap:
    """a -> a q - q a on A."""
    return inner_derivation_into(regular(A), q)


@dataclass(frozen=True, eq=False)
class DerivationSpace:
    algebra: Algebra
    target: Bimodule
    space: Subspace
    inner: Subspace
    hom: HomSpace

    @property
    def dim(self):
        return self.space.dim

    @property
    def outer_dim(self):
        return self.space.dim - self.inner.dim

    def basis_maps(self):
        return self.hom.basis_maps(self.space)

    def contains(self, D: LinearMap) -> bool:
        return self.space.contains(self.hom.to_vec(D))


def _leibniz_system(H: HomSpace) -> Matrix:
    """Rows expressing D(e_i e_j) - D(e_i) e_j - e_i D(e_j) on hom coordinates."""
    A = H.algebra
    Q = H.Q
    n, m = A.dim, Q.dim
    zero = A.field.zero
    rows = []
    # coordinate of D(e_k) component t is index t*n + k
    for i, j in itertools.product(range(n), repeat=2):
        prod = A.mul[i][j]
        Rj, Li = Q.right[j], Q.left[i]
        for t in range(m):
            row = [zero] * H.dim
            for k, c in enumerate(prod):
                if c != 0:
                    row[t * n + k] += c
            for s in range(m):
                if Rj[t, s] != 0:
                    row[s * n + i] -= Rj[t, s]
                if Li[t, s] != 0:
                    row[s * n + j] -= Li[t, s]
            rows.append(tuple(row))
    return Matrix(rows, H.dim, A.field)


def derivation_space(A: Algebra, Q: Bimodule | None = None) -> DerivationSpace:
    """Kernel of the Leibniz system, with the inner derivations alongside."""
    Q = Q or regular(A)
    H = HomSpace(regular(A), Q)
    space = kernel(_leibniz_system(H))
    inner = H.span([inner_derivation_into(Q, unit_vector(Q.dim, t, Q.field))
                    for t in range(Q.dim)])
    return DerivationSpace(A, Q, space, inner, H)


@dataclass(frozen=True, eq=False)
class DerLie:
    """K-basis of derivations of A and brackets ``[u_i, u_j] = sum_k c[i][j][k] u_k``."""

    algebra: Algebra
    basis: tuple
    bracket: tuple
    space: DerivationSpace

    @property
    def dim(self):
        return len(self.basis)

    def coordinates(self, D: LinearMap):
        """Coordinates of a derivation in ``basis``."""
        S = self.space.space
        return S.coordinates(self.space.hom.to_vec(D))

    def element(self, coords) -> LinearMap:
        return self.space.hom.from_vec(self.space.space.vector(coords))

    def bracket_of(self, x, y):
        """Bracket of two coordinate vectors."""
        out = [self.algebra.field.zero] * self.dim
        for i, a in enumerate(x):
            if a == 0:
                continue
            for j, b in enumerate(y):
                if b == 0:
                    continue
                for k, c in enumerate(self.bracket[i][j]):
                    if c != 0:
                        out[k] += a * b * c
        return tuple(out)


def commutator(u: LinearMap, v: LinearMap) -> LinearMap:
    return u @ v - v @ u


def derivation_lie_algebra(A: Algebra) -> DerLie:
    ds = derivation_space(A)
    basis = tuple(ds.basis_maps())
    n = len(basis)
    S = ds.space
    bracket = []
    for i in range(n):
        row = []
        for j in range(n):
            w = ds.hom.to_vec(commutator(basis[i], basis[j]))
            if not S.contains(w):
                raise ArithmeticError("commutator of derivations left the derivation space")
            row.append(S.coordinates(w))
        bracket.append(tuple(row))
    return DerLie(A, basis, tuple(bracket), ds)


def center_stability_violation(ds: DerivationSpace):
    """(center basis index, derivation basis index, side) where z u or u z leaves the space."""
    A = ds.algebra
    Q = ds.target
    for k, z in enumerate(A.center().basis):
        for j, u in enumerate(ds.basis_maps()):
            zu = LinearMap(u.source, Q, Q.left_matrix(z) @ u.matrix)
            uz = LinearMap(u.source, Q, Q.right_matrix(z) @ u.matrix)
            if not ds.contains(zu):
                return (k, j, "left")
            if not ds.contains(uz):
                return (k, j, "right")
    return None


def bullet_witness(ds: DerivationSpace):
    """(derivation basis index, algebra basis index) with b -> u(a b) not a derivation."""
    A = ds.algebra
    for j, u in enumerate(ds.basis_maps()):
        for i in range(A.dim):
            ua = LinearMap(u.source, u.target, u.matrix @ A.left_matrix(A.basis(i)))
            if not ds.contains(ua):
                return (j, i)
    return None
