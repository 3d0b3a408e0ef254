"""Hom_K(P, Q) with its four module actions and the two delta operators.

For a K-linear map ``phi: P -> Q`` and ``a`` in A:

========== ======================= ==============
action     value at p              matrix
========== ======================= ==============
``left``   a phi(p)                L^Q_a phi
``bullet`` phi(a p)                phi L^P_a
``right``  phi(p) a                R^Q_a phi
``rbullet`` phi(p a)               phi R^P_a
========== ======================= ==============

``delta(a, phi) = a phi - phi . a`` and ``delta_bar(a, phi) = phi a - a . phi``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property

from .bimodule import Bimodule
from .exactla import Matrix, Subspace, kron, DimensionError, vstack, kernel, _Echelon

ACTIONS = ("left", "bullet", "right", "rbullet")


@dataclass(frozen=True, eq=False)
class LinearMap:
    source: Bimodule
    target: Bimodule
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.shape != (self.target.dim, self.source.dim):
            raise DimensionError("matrix shape %s does not match %d -> %d"
                                 % (self.matrix.shape, self.source.dim, self.target.dim))

    def __call__(self, p):
        return self.matrix.apply(p)

    def _same(self, other):
        if self.source != other.source or self.target != other.target:
            raise DimensionError("maps between different modules")

    def __add__(self, other):
        self._same(other)
        return LinearMap(self.source, self.target, self.matrix + other.matrix)

    def __sub__(self, other):
        self._same(other)
        return LinearMap(self.source, self.target, self.matrix - other.matrix)

    def __neg__(self):
        return LinearMap(self.source, self.target, -self.matrix)

    def scale(self, c):
        return LinearMap(self.source, self.target, self.matrix.scale(c))

    def __rmul__(self, c):
        return self.scale(c)

    def __matmul__(self, other):
        """Composition self o other."""
        if other.target.dim != self.source.dim:
            raise DimensionError("cannot compose maps of incompatible shapes")
        return LinearMap(other.source, self.target, self.matrix @ other.matrix)

    def __eq__(self, other):
        return (isinstance(other, LinearMap) and self.matrix == other.matrix
                and self.source == other.source and self.target == other.target)

    def __hash__(self):
        return hash(self.matrix)

    def is_zero(self):
        return self.matrix.is_zero()

    def vec(self):
        return self.matrix.flat()

    def __repr__(self):
        return "LinearMap(%s -> %s, %r)" % (self.source.name, self.target.name, self.matrix)


def _check_algebra(P, Q):
    if P.algebra != Q.algebra:
        raise DimensionError("P and Q are modules over different algebras")


def compose(f: LinearMap, g: LinearMap) -> LinearMap:
    """f o g."""
    return f @ g


def zero_map(P: Bimodule, Q: Bimodule) -> LinearMap:
    return LinearMap(P, Q, Matrix.zeros(Q.dim, P.dim, P.field))


def identity_map(P: Bimodule) -> LinearMap:
    return LinearMap(P, P, Matrix.identity(P.dim, P.field))


def act(a, phi: LinearMap, which: str) -> LinearMap:
    """One of the four actions of ``a`` on ``phi`` (see module docstring)."""
    P, Q = phi.source, phi.target
    _check_algebra(P, Q)
    if len(a) != P.algebra.dim:
        raise DimensionError("element has %d coordinates, algebra has dim %d"
                             % (len(a), P.algebra.dim))
    m = phi.matrix
    if which == "left":
        out = Q.left_matrix(a) @ m
    elif which == "bullet":
        out = m @ P.left_matrix(a)
    elif which == "right":
        out = Q.right_matrix(a) @ m
    elif which == "rbullet":
        out = m @ P.right_matrix(a)
    else:
        raise ValueError("unknown action %r; expected one of %s" % (which, ACTIONS))
    return LinearMap(P, Q, out)


def delta(a, phi: LinearMap) -> LinearMap:
    return act(a, phi, "left") - act(a, phi, "bullet")


def delta_bar(a, phi: LinearMap) -> LinearMap:
    return act(a, phi, "right") - act(a, phi, "rbullet")


class HomSpace:
    """Coordinates on Hom_K(P, Q): row-major entries of the dim Q x dim P matrix.

    The actions and deltas by basis elements of A are available as square
    matrices acting on these coordinates, which turns every condition on
    operators into a linear system.
    """

    def __init__(self, P: Bimodule, Q: Bimodule):
        _check_algebra(P, Q)
        self.P = P
        self.Q = Q
        self.algebra = P.algebra
        self.field = P.field
        self.dim = P.dim * Q.dim

    def to_vec(self, phi: LinearMap):
        return phi.matrix.flat()

    def from_vec(self, v) -> LinearMap:
        return LinearMap(self.P, self.Q, Matrix.from_flat(v, self.Q.dim, self.P.dim, self.field))

    def basis_maps(self, S: Subspace):
        return [self.from_vec(b) for b in S.basis]

    def span(self, maps) -> Subspace:
        return Subspace(self.dim, [self.to_vec(m) for m in maps], self.field)

    def full(self) -> Subspace:
        return Subspace.full(self.dim, self.field)

    def zero(self) -> Subspace:
        return Subspace.zero(self.dim, self.field)

    @cached_property
    def _eye_p(self):
        return Matrix.identity(self.P.dim, self.field)

    @cached_property
    def _eye_q(self):
        return Matrix.identity(self.Q.dim, self.field)

    @cached_property
    def action_ops(self):
        """``{which: [matrix for each basis element]}`` on hom coordinates."""
        P, Q = self.P, self.Q
        return {
            "left": [kron(m, self._eye_p) for m in Q.left],
            "bullet": [kron(self._eye_q, m.T) for m in P.left],
            "right": [kron(m, self._eye_p) for m in Q.right],
            "rbullet": [kron(self._eye_q, m.T) for m in P.right],
        }

    @cached_property
    def delta_ops(self):
        ops = self.action_ops
        return [l - b for l, b in zip(ops["left"], ops["bullet"])]

    @cached_property
    def delta_bar_ops(self):
        ops = self.action_ops
        return [r - b for r, b in zip(ops["right"], ops["rbullet"])]

    def zero_order_left(self) -> Subspace:
        """{phi : delta_a phi = 0 for all a}: left A-module maps."""
        return kernel(vstack(self.delta_ops))

    def zero_order_right(self) -> Subspace:
        """{phi : delta_bar_a phi = 0 for all a}: right A-module maps."""
        return kernel(vstack(self.delta_bar_ops))

    def closure(self, S: Subspace, actions=("left", "bullet")) -> Subspace:
        """Smallest subspace containing S and stable under the given actions."""
        ops = [m for which in actions for m in self.action_ops[which]]
        ech = _Echelon(self.dim, self.field)
        pending = []
        for b in S.basis:
            if ech.add(b):
                pending.append(b)
        while pending:
            v = pending.pop()
            for m in ops:
                w = m.apply(v)
                if ech.add(w):
                    pending.append(w)
        return Subspace(self.dim, ech.basis(), self.field, _trusted=True)

    def is_stable(self, S: Subspace, which: str) -> bool:
        return all(S.contains(m.apply(b)) for m in self.action_ops[which] for b in S.basis)

    def random_map(self, rng: random.Random, lo=-3, hi=3) -> LinearMap:
        return self.from_vec([self.field(rng.randint(lo, hi)) for _ in range(self.dim)])

    def random_element(self, S: Subspace, rng: random.Random, lo=-3, hi=3) -> LinearMap:
        coeffs = [self.field(rng.randint(lo, hi)) for _ in range(S.dim)]
        return self.from_vec(S.vector(coeffs))
