"""First-order operators on two-sided modules and their decompositions."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..algebra import Report
from ..bimodule import Bimodule, regular
from ..derivations import is_derivation, leibniz_violation, inner_derivation_into
from ..exactla import Matrix, Subspace, kernel, vstack
from ..homspace import HomSpace, LinearMap, act, delta, delta_bar


class NotFirstOrder(ValueError):
    """The operator fails the two-sided first-order condition."""


def first_order_defect(D: LinearMap, a, p, b):
    """a D(p) b - a D(p b) - D(a p) b + D(a p b)."""
    P, Q = D.source, D.target
    La, Rb = Q.left_matrix(a), Q.right_matrix(b)
    pb = P.right_matrix(b).apply(p)
    ap = P.left_matrix(a).apply(p)
    apb = P.left_matrix(a).apply(pb)
    t1 = La.apply(Rb.apply(D(p)))
    t2 = La.apply(D(pb))
    t3 = Rb.apply(D(ap))
    t4 = D(apb)
    return tuple(w - x - y + z for w, x, y, z in zip(t1, t2, t3, t4))


def first_order_violation(D: LinearMap):
    """First basis triple (a, p, b) with a nonzero defect, or None."""
    A = D.source.algebra
    P = D.source
    for i, k, j in itertools.product(range(A.dim), range(P.dim), range(A.dim)):
        p = tuple(P.field.one if t == k else P.field.zero for t in range(P.dim))
        if any(x != 0 for x in first_order_defect(D, A.basis(i), p, A.basis(j))):
            return (i, k, j)
    return None


def is_first_order_ncg(D: LinearMap) -> bool:
    """Two-sided first-order test on all basis triples.

    The pointwise condition is the same expression as delta_a delta_bar_b D;
    both are evaluated and must agree.
    """
    pointwise = first_order_violation(D) is None
    A = D.source.algebra
    via_deltas = all(delta(A.basis(i), delta_bar(A.basis(j), D)).is_zero()
                     for i in range(A.dim) for j in range(A.dim))
    if pointwise != via_deltas:
        raise AssertionError("pointwise first-order test disagrees with delta form")
    return pointwise


def first_order_space(P: Bimodule, Q: Bimodule) -> Subspace:
    """Kernel of the stacked delta_a delta_bar_b conditions."""
    H = HomSpace(P, Q)
    n = H.algebra.dim
    mats = [H.delta_ops[i] @ H.delta_bar_ops[j] for i in range(n) for j in range(n)]
    return kernel(vstack(mats))


@dataclass(frozen=True, eq=False)
class FirstOrderDecomposition:
    """``forward[i] = p -> D(e_i p) - e_i D(p)``, ``backward[j] = p -> D(p e_j) - D(p) e_j``."""

    operator: LinearMap
    forward: tuple
    backward: tuple

    def _combine(self, maps, a):
        out = None
        for x, m in zip(a, maps):
            if x != 0:
                out = m.scale(x) if out is None else out + m.scale(x)
        return out if out is not None else maps[0].scale(0) if maps else None

    def forward_of(self, a) -> LinearMap:
        return self._combine(self.forward, a)

    def backward_of(self, b) -> LinearMap:
        return self._combine(self.backward, b)

    def reconstruct(self, a, p, b):
        """(fwd a)(p) b + a D(p) b + a (bwd b)(p)."""
        Q = self.operator.target
        La, Rb = Q.left_matrix(a), Q.right_matrix(b)
        t1 = Rb.apply(self.forward_of(a)(p))
        t2 = La.apply(Rb.apply(self.operator(p)))
        t3 = La.apply(self.backward_of(b)(p))
        return tuple(x + y + z for x, y, z in zip(t1, t2, t3))

    def check(self) -> Report:
        """Reconstruction, one-sided linearity and the two Leibniz rules."""
        D = self.operator
        P = D.source
        A = P.algebra
        n = A.dim
        ps = [tuple(P.field.one if t == k else P.field.zero for t in range(P.dim))
              for k in range(P.dim)]
        for i, k, j in itertools.product(range(n), range(P.dim), range(n)):
            a, b, p = A.basis(i), A.basis(j), ps[k]
            apb = P.left_matrix(a).apply(P.right_matrix(b).apply(p))
            if D(apb) != self.reconstruct(a, p, b):
                return Report(False, "reconstruction fails", (i, k, j))
        for i, j in itertools.product(range(n), repeat=2):
            a, b = A.basis(i), A.basis(j)
            f, g = self.forward[i], self.backward[i]
            # forward values are right A-linear, backward values left A-linear
            if act(b, f, "rbullet") != act(b, f, "right"):
                return Report(False, "forward value not right-linear", (i, j))
            if act(b, g, "bullet") != act(b, g, "left"):
                return Report(False, "backward value not left-linear", (i, j))
            ab = A.multiply(a, b)
            # fwd(ab) = fwd(a) . b + a fwd(b)
            if self.forward_of(ab) != act(b, f, "bullet") + act(a, self.forward[j], "left"):
                return Report(False, "forward map is not a derivation", (i, j))
            # bwd(ab) = p -> bwd(a)(p) b  +  p -> bwd(b)(p a)
            if self.backward_of(ab) != act(b, g, "right") + act(a, self.backward[j], "rbullet"):
                return Report(False, "backward map is not a derivation", (i, j))
        return Report(True)


def first_order_decompose(D: LinearMap) -> FirstOrderDecomposition:
    if not is_first_order_ncg(D):
        raise NotFirstOrder("operator fails the two-sided first-order condition at %s"
                            % (first_order_violation(D),))
    A = D.source.algebra
    fwd = tuple(-delta(A.basis(i), D) for i in range(A.dim))
    bwd = tuple(-delta_bar(A.basis(i), D) for i in range(A.dim))
    return FirstOrderDecomposition(D, fwd, bwd)


def forced_decomposition_reconstructs(D: LinearMap) -> bool:
    """Does D(apb) = (fwd a)(p) b + a D(p) b + a (bwd b)(p) hold with the forced maps?

    For derivations fwd(1) = bwd(1) = 0, so the reconstruction at b = 1 and a = 1 pins fwd
    and bwd down to these formulas; this therefore tests whether *any* pair
    of derivations reconstructs D.
    """
    A = D.source.algebra
    fwd = tuple(-delta(A.basis(i), D) for i in range(A.dim))
    bwd = tuple(-delta_bar(A.basis(i), D) for i in range(A.dim))
    return FirstOrderDecomposition(D, fwd, bwd).check().ok


def reconstruction_system(P: Bimodule, Q: Bimodule):
    """Linear system in (D, fwd_1..fwd_n, bwd_1..bwd_n): reconstruction, one-sided
    linearity and Leibniz for fwd/bwd.  Returns (matrix, hom dimension N)."""
    H = HomSpace(P, Q)
    A = H.algebra
    n, N = A.dim, H.dim
    ops = H.action_ops
    zero_blk = Matrix.zeros(N, N, H.field)
    eye = Matrix.identity(N, H.field)
    nblocks = 1 + 2 * n

    def row(blocks):
        cols = [zero_blk] * nblocks
        for pos, m in blocks:
            cols[pos] = cols[pos] + m
        return Matrix._raw(tuple(sum((c.rows[t] for c in cols), ()) for t in range(N)),
                           N * nblocks, H.field)

    F = lambda i: 1 + i
    B = lambda i: 1 + n + i
    rows = []
    for i, j in itertools.product(range(n), repeat=2):
        la, rb = ops["left"][i], ops["right"][j]
        ba, rbb = ops["bullet"][i], ops["rbullet"][j]
        # D(a p b) - fwd_a(p) b - a D(p) b - a bwd_b(p)
        rows.append(row([(0, rbb @ ba - la @ rb), (F(i), -rb), (B(j), -la)]))
        # fwd_i right-linear, bwd_i left-linear
        rows.append(row([(F(i), ops["rbullet"][j] - ops["right"][j])]))
        rows.append(row([(B(i), ops["bullet"][j] - ops["left"][j])]))
        prod = A.mul[i][j]
        # fwd(e_i e_j) - fwd_i . e_j - e_i fwd_j
        blocks = [(F(k), eye.scale(c)) for k, c in enumerate(prod) if c != 0]
        blocks += [(F(i), -ops["bullet"][j]), (F(j), -ops["left"][i])]
        rows.append(row(blocks))
        # bwd(e_i e_j) - bwd_i e_j - e_i-dot bwd_j
        blocks = [(B(k), eye.scale(c)) for k, c in enumerate(prod) if c != 0]
        blocks += [(B(i), -ops["right"][j]), (B(j), -ops["rbullet"][i])]
        rows.append(row(blocks))
    return vstack(rows), N


def reconstructible_space(P: Bimodule, Q: Bimodule) -> Subspace:
    """Projection to D of all solutions of ``reconstruction_system``."""
    M, N = reconstruction_system(P, Q)
    sol = kernel(M)
    return Subspace(N, [v[:N] for v in sol.basis], P.field)


# ---------------------------------------------------------------------------
# P = A: zero-order embeddings and splittings


def zero_order_embed(Q: Bimodule, q, side="left") -> LinearMap:
    """a -> a q (side='left') or a -> q a (side='right'), as a map A -> Q."""
    A = Q.algebra
    mats = Q.left if side == "left" else Q.right if side == "right" else None
    if mats is None:
        raise ValueError("side must be 'left' or 'right'")
    cols = [m.apply(q) for m in mats]
    return LinearMap(regular(A), Q, Matrix.from_columns(cols, Q.dim, A.field))


def unit_leibniz_violation(D: LinearMap):
    """First basis pair with D(ab) != D(a) b + a D(b) - a D(1) b, or None."""
    A = D.source.algebra
    Q = D.target
    d1 = D(A.unit)
    for i, j in itertools.product(range(A.dim), repeat=2):
        a, b = A.basis(i), A.basis(j)
        lhs = D(A.multiply(a, b))
        rhs = [x + y - z for x, y, z in zip(Q.right_matrix(b).apply(D(a)),
                                            Q.left_matrix(a).apply(D(b)),
                                            Q.left_matrix(a).apply(Q.right_matrix(b).apply(d1)))]
        if lhs != tuple(rhs):
            return (i, j)
    return None


@dataclass(frozen=True, eq=False)
class Splitting:
    zero_part: LinearMap
    deriv_part: LinearMap
    side: str


def split_first_order(D: LinearMap, side="left") -> Splitting:
    """D = D(1)-part + derivation; the D(1)-part is a -> a D(1) or a -> D(1) a."""
    if D.source != regular(D.source.algebra):
        raise ValueError("splitting needs an operator on the regular bimodule")
    bad = unit_leibniz_violation(D)
    if bad is not None:
        raise NotFirstOrder("D(ab) = D(a)b + aD(b) - aD(1)b fails on basis pair %s" % (bad,))
    A = D.source.algebra
    zero = zero_order_embed(D.target, D(A.unit), side)
    deriv = D - zero
    if not is_derivation(deriv):
        raise AssertionError("derivation part fails Leibniz at %s" % (leibniz_violation(deriv),))
    return Splitting(zero, deriv, side)


def splitting_gap(D: LinearMap) -> LinearMap:
    """Right derivation part minus left one; equals the inner derivation of D(1)."""
    left = split_first_order(D, "left").deriv_part
    right = split_first_order(D, "right").deriv_part
    return right - left


def inner_of_unit_value(D: LinearMap) -> LinearMap:
    return inner_derivation_into(D.target, D(D.source.algebra.unit))
