"""Order via iterated deltas: Delta has order <= r iff every
delta_{a_0} ... delta_{a_r} Delta vanishes.
"""

from __future__ import annotations

import itertools

from ..exactla import Subspace, preimage_all, vstack, kernel
from ..homspace import HomSpace, LinearMap, delta


def commutative_ladder(H: HomSpace, r_max: int) -> list:
    """Subspaces D_0, ..., D_r_max with D_r = {phi : delta_a phi in D_{r-1} for all a}.

    D_{-1} is the zero subspace.  Stops early (repeating the last level)
    once two consecutive levels agree.
    """
    levels = []
    prev = H.zero()
    for r in range(r_max + 1):
        cur = preimage_all(H.delta_ops, prev, H.dim, H.field)
        if levels and cur == levels[-1]:
            levels.extend([cur] * (r_max + 1 - r))
            break
        levels.append(cur)
        prev = cur
    return levels


def diff_space_commutative(P, Q, r: int) -> Subspace:
    """All Delta in Hom_K(P, Q) of commutative-style order at most r."""
    H = HomSpace(P, Q)
    return commutative_ladder(H, r)[r]


def order_commutative(D: LinearMap, r_max: int | None = None) -> int | None:
    """Least r <= r_max with all (r+1)-fold iterated deltas of D vanishing."""
    H = HomSpace(D.source, D.target)
    if r_max is None:
        r_max = H.dim
    v = H.to_vec(D)
    for r, level in enumerate(commutative_ladder(H, r_max)):
        if level.contains(v):
            return r
    return None


def iterated_deltas_vanish(D: LinearMap, r: int) -> bool:
    """Brute force: delta_{a_0} o ... o delta_{a_r} D = 0 over all basis tuples."""
    A = D.source.algebra
    frontier = [D]
    for _ in range(r + 1):
        frontier = [delta(A.basis(i), phi) for phi in frontier for i in range(A.dim)]
        frontier = [phi for phi in frontier if not phi.is_zero()]
        if not frontier:
            return True
    return not frontier


def iterated_delta_conditions(H: HomSpace, r: int):
    """Stacked matrices of delta_{a_0} o ... o delta_{a_r} over basis tuples."""
    mats = []
    for idx in itertools.product(range(H.algebra.dim), repeat=r + 1):
        m = H.delta_ops[idx[-1]]
        for i in reversed(idx[:-1]):
            m = H.delta_ops[i] @ m
        mats.append(m)
    return vstack(mats)


def first_order_condition_matrix(H: HomSpace):
    """Rows of b a D(p) - b D(a p) - a D(b p) + D(a b p) = 0 over basis a, b.

    Ordered like ``iterated_delta_conditions(H, 1)``: the outer index is b
    (applied last), the inner index a.
    """
    ops = H.action_ops
    mats = []
    n = H.algebra.dim
    for b in range(n):
        for a in range(n):
            lb, la = ops["left"][b], ops["left"][a]
            bb, ba = ops["bullet"][b], ops["bullet"][a]
            # b a D(p) - b D(a p) - a D(b p) + D(a b p)
            mats.append(lb @ la - lb @ ba - la @ bb + bb @ ba)
    return vstack(mats)


def commutative_space_direct(H: HomSpace, r: int) -> Subspace:
    """Oracle: kernel of all (r+1)-fold iterated delta conditions at once."""
    return kernel(iterated_delta_conditions(H, r))
