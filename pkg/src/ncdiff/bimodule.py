"""Two-sided modules over an :class:`Algebra`, central over its center."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import Algebra, Report
from .exactla import Matrix, block_diag, DimensionError, Subspace


@dataclass(frozen=True, eq=False)
class Bimodule:
    """Action matrices ``left[i]`` (p -> e_i p) and ``right[i]`` (p -> p e_i)."""

    algebra: Algebra
    dim: int
    left: tuple
    right: tuple
    name: str = "M"

    def __post_init__(self):
        A = self.algebra
        for side, mats in (("left", self.left), ("right", self.right)):
            if len(mats) != A.dim:
                raise DimensionError("%s action needs %d matrices, got %d"
                                     % (side, A.dim, len(mats)))
            for m in mats:
                if m.shape != (self.dim, self.dim):
                    raise DimensionError("%s action matrix has shape %s, expected %s"
                                         % (side, m.shape, (self.dim, self.dim)))
        object.__setattr__(self, "left", tuple(self.left))
        object.__setattr__(self, "right", tuple(self.right))

    @property
    def field(self):
        return self.algebra.field

    def __eq__(self, other):
        return (isinstance(other, Bimodule) and self.algebra == other.algebra
                and self.left == other.left and self.right == other.right)

    def __hash__(self):
        return hash((self.dim, self.left, self.right))

    def __repr__(self):
        return "Bimodule(%r over %s, dim=%d)" % (self.name, self.algebra.name, self.dim)

    def zero(self):
        return (self.field.zero,) * self.dim

    def left_matrix(self, a) -> Matrix:
        return _combine(self.left, a, self.dim, self.field)

    def right_matrix(self, a) -> Matrix:
        return _combine(self.right, a, self.dim, self.field)

    def act(self, a, p, side="left"):
        return act(self, a, p, side)

    def validate(self) -> Report:
        return validate(self)


def _combine(mats, a, n, field):
    if len(a) != len(mats):
        raise DimensionError("element has %d coordinates, algebra has dim %d"
                             % (len(a), len(mats)))
    nz = [i for i, x in enumerate(a) if x != 0]
    if len(nz) == 1 and a[nz[0]] == 1:
        return mats[nz[0]]
    out = Matrix.zeros(n, n, field)
    for x, m in zip(a, mats):
        if x != 0:
            out = out + m.scale(x)
    return out


def act(M: Bimodule, a, p, side="left"):
    """a p (side='left') or p a (side='right')."""
    if len(p) != M.dim:
        raise DimensionError("vector of length %d in a module of dim %d" % (len(p), M.dim))
    if side == "left":
        return M.left_matrix(a).apply(p)
    if side == "right":
        return M.right_matrix(a).apply(p)
    raise ValueError("side must be 'left' or 'right'")


def regular(A: Algebra) -> Bimodule:
    """A acting on itself by left and right multiplication."""
    n = A.dim
    return Bimodule(A, n, tuple(A.left_matrix(A.basis(i)) for i in range(n)),
                    tuple(A.right_matrix(A.basis(i)) for i in range(n)), name="regular")


def direct_sum(*mods: Bimodule, name: str | None = None) -> Bimodule:
    if not mods:
        raise ValueError("direct sum of no modules")
    A = mods[0].algebra
    if any(m.algebra != A for m in mods):
        raise ValueError("direct sum of modules over different algebras")
    f = A.field
    left = tuple(block_diag([m.left[i] for m in mods], f) for i in range(A.dim))
    right = tuple(block_diag([m.right[i] for m in mods], f) for i in range(A.dim))
    return Bimodule(A, sum(m.dim for m in mods), left, right,
                    name=name or "+".join(m.name for m in mods))


def twisted(A: Algebra, sigma: Matrix, name: str = "twisted") -> Bimodule:
    """A with the usual left action and right action p . a = p sigma(a).

    ``sigma`` is the matrix of an algebra endomorphism in the basis of A.
    Validation of the result catches a sigma that is not multiplicative or
    does not fix the center.
    """
    n = A.dim
    left = tuple(A.left_matrix(A.basis(i)) for i in range(n))
    right = tuple(A.right_matrix(sigma.column(i)) for i in range(n))
    return Bimodule(A, n, left, right, name=name)


def submodule(M: Bimodule, S: Subspace, name: str | None = None) -> Bimodule:
    """The bimodule structure on a subspace S stable under both actions."""
    A = M.algebra
    basis = S.basis

    def restrict(mat):
        cols = []
        for b in basis:
            img = mat.apply(b)
            if not S.contains(img):
                raise ValueError("subspace is not stable under the action")
            cols.append(S.coordinates(img))
        return Matrix.from_columns(cols, S.dim, A.field)

    left = tuple(restrict(m) for m in M.left)
    right = tuple(restrict(m) for m in M.right)
    return Bimodule(A, S.dim, left, right, name=name or M.name + "_sub")


def validate(M: Bimodule) -> Report:
    """Check both action homomorphisms, their commutation and centrality."""
    A = M.algebra
    n = A.dim
    eye = Matrix.identity(M.dim, A.field)
    for i, j in itertools.product(range(n), repeat=2):
        prod = A.multiply(A.basis(i), A.basis(j))
        if M.left_matrix(prod) != M.left[i] @ M.left[j]:
            return Report(False, "left action is not multiplicative on (%s, %s)"
                          % (A.basis_labels[i], A.basis_labels[j]), (i, j))
    if M.left_matrix(A.unit) != eye:
        return Report(False, "unit does not act as identity on the left")
    for i, j in itertools.product(range(n), repeat=2):
        prod = A.multiply(A.basis(i), A.basis(j))
        if M.right_matrix(prod) != M.right[j] @ M.right[i]:
            return Report(False, "right action is not multiplicative on (%s, %s)"
                          % (A.basis_labels[i], A.basis_labels[j]), (i, j))
    if M.right_matrix(A.unit) != eye:
        return Report(False, "unit does not act as identity on the right")
    for i, j in itertools.product(range(n), repeat=2):
        if M.left[i] @ M.right[j] != M.right[j] @ M.left[i]:
            return Report(False, "left and right actions do not commute on (%s, %s)"
                          % (A.basis_labels[i], A.basis_labels[j]), (i, j))
    for z in A.center().basis:
        if M.left_matrix(z) != M.right_matrix(z):
            return Report(False, "center acts differently from the two sides", (z,))
    return Report(True)


def character_bimodule(A: Algebra, left_chi, right_chi, name: str | None = None) -> Bimodule:
    """One-dimensional bimodule a p b = chi_l(a) chi_r(b) p for two characters of A.

    Characters are given by their values on the basis; validation catches
    values that are not multiplicative or disagree on the center.
    """
    f = A.field
    left = tuple(Matrix([[f(x)]], 1, f) for x in left_chi)
    right = tuple(Matrix([[f(x)]], 1, f) for x in right_chi)
    return Bimodule(A, 1, left, right, name=name or "K")
