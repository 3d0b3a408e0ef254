"""Certificates for two-sided differential operators.

A two-sided operator of order r > 0 admits both a left form
``D = sum b_i Phi^i + D_{r-1}`` (with every ``delta_a Phi^i`` two-sided of order
r - 1) and a right form ``D = sum Phibar^i bbar_i + Dbar_{r-1}`` (with every
``delta_bar_a Phibar^i`` two-sided of order r - 1).  At order 0 the operator is
left zero order (``sum b_i Phi^i`` with ``delta Phi^i = 0``) or right zero order
(``sum Phi^i b_i`` with ``delta_bar Phi^i = 0``); an empty term list means the
operator itself lies in the kernel.

The set of two-sided operators is not a subspace at order 0, so ``for all a``
is only reduced to basis elements where that is sound: below a term of order 1
all zero-order sub-certificates of nonzero maps must use the same side.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..bimodule import regular
from ..derivations import is_derivation
from ..homspace import LinearMap, act, delta, delta_bar, zero_map, identity_map


class MalformedWitness(ValueError):
    """Witness structure does not fit the operator (depth, arity, shapes)."""


@dataclass(frozen=True, eq=False)
class Term:
    coeff: tuple           # b_i (left form) or bbar_i (right form)
    phi: LinearMap
    deltas: tuple          # one sub-witness per basis element of A


@dataclass(frozen=True, eq=False)
class Form:
    terms: tuple = ()
    rest: LinearMap | None = None
    rest_witness: "TwoSidedWitness | None" = None


@dataclass(frozen=True, eq=False)
class TwoSidedWitness:
    order: int
    base: str | None = None       # 'left' / 'right' at order 0
    base_terms: tuple = ()        # ((b, Phi), ...) at order 0
    left: Form | None = None
    right: Form | None = None


def zero_witness(order: int, side="left") -> TwoSidedWitness:
    if order == 0:
        return TwoSidedWitness(0, base=side)
    return TwoSidedWitness(order, left=Form(), right=Form())


# ---------------------------------------------------------------------------
# checking


def _sum(maps, like: LinearMap):
    out = zero_map(like.source, like.target)
    for m in maps:
        out = out + m
    return out


def check_two_sided(D: LinearMap, w: TwoSidedWitness) -> bool:
    """Verify a certificate exactly; raises MalformedWitness on structural errors."""
    return _check(D, w)


def _check(D, w):
    A = D.source.algebra
    if w.order < 0:
        raise MalformedWitness("negative order")
    if w.order == 0:
        if w.left is not None or w.right is not None:
            raise MalformedWitness("order-0 witness carries left/right forms")
        if w.base == "left":
            dop, side = delta, "left"
        elif w.base == "right":
            dop, side = delta_bar, "right"
        else:
            raise MalformedWitness("order-0 witness needs base 'left' or 'right'")
        basis = [A.basis(i) for i in range(A.dim)]
        if not w.base_terms:
            return all(dop(a, D).is_zero() for a in basis)
        total = _sum([act(b, phi, side) for b, phi in w.base_terms], D)
        if total != D:
            return False
        return all(dop(a, phi).is_zero() for _, phi in w.base_terms for a in basis)
    if w.base is not None or w.base_terms:
        raise MalformedWitness("base data on a witness of order %d" % w.order)
    if w.left is None or w.right is None:
        raise MalformedWitness("order-%d witness needs both forms" % w.order)
    return (_check_form(D, w.left, w.order, "left")
            and _check_form(D, w.right, w.order, "right"))


def _check_form(D, form, r, side):
    A = D.source.algebra
    dop = delta if side == "left" else delta_bar
    parts = [act(t.coeff, t.phi, side) for t in form.terms]
    if form.rest is not None:
        if form.rest_witness is None:
            raise MalformedWitness("rest map without witness")
        if form.rest_witness.order != r - 1:
            raise MalformedWitness("rest witness of order %d under order %d"
                                   % (form.rest_witness.order, r))
        parts.append(form.rest)
    if _sum(parts, D) != D:
        return False
    if form.rest is not None and not _check(form.rest, form.rest_witness):
        return False
    for t in form.terms:
        if len(t.deltas) != A.dim:
            raise MalformedWitness("term needs %d delta witnesses, has %d"
                                   % (A.dim, len(t.deltas)))
        sides = set()
        for i, sub in enumerate(t.deltas):
            if sub.order != r - 1:
                raise MalformedWitness("delta witness of order %d under order %d"
                                       % (sub.order, r))
            target = dop(A.basis(i), t.phi)
            if not _check(target, sub):
                return False
            if r == 1 and not target.is_zero():
                sides.add(sub.base)
        if len(sides) > 1:
            # left zero order for some basis a, right for others: not closed under sums
            return False
    return True


# ---------------------------------------------------------------------------
# canonical witnesses for compositions of derivations


def lift(D: LinearMap, w: TwoSidedWitness, order: int) -> TwoSidedWitness:
    """Re-express a witness of lower order as one of the given order."""
    if w.order > order:
        raise MalformedWitness("cannot lower the order of a witness")
    while w.order < order:
        w = TwoSidedWitness(w.order + 1, left=Form((), D, w), right=Form((), D, w))
    return w


def _as_terms(D, w):
    if w.base_terms:
        return w.base_terms
    one = D.source.algebra.unit
    return ((one, D),)


def add_witnessed(x, y):
    """Sum of two (map, witness) pairs of equal order."""
    (D1, w1), (D2, w2) = x, y
    if w1.order != w2.order:
        raise MalformedWitness("adding witnesses of different orders")
    D = D1 + D2
    if w1.order == 0:
        if w1.base != w2.base:
            raise MalformedWitness("zero-order witnesses on different sides do not add")
        return D, TwoSidedWitness(0, base=w1.base,
                                  base_terms=_as_terms(D1, w1) + _as_terms(D2, w2))
    return D, TwoSidedWitness(w1.order, left=_add_forms(w1.left, w2.left, D, w1.order),
                              right=_add_forms(w1.right, w2.right, D, w1.order))


def _add_forms(f1, f2, D, r):
    rests = [(f.rest, f.rest_witness) for f in (f1, f2) if f.rest is not None]
    if not rests:
        return Form(f1.terms + f2.terms)
    acc = rests[0]
    for nxt in rests[1:]:
        acc = add_witnessed(acc, nxt)
    return Form(f1.terms + f2.terms, acc[0], acc[1])


def _compose_all(maps, P):
    out = identity_map(P)
    for m in maps:
        out = out @ m
    return out


def _build(c, q, word, P, cache):
    """(p -> c W(p) q, witness of order len(word)) for a word of derivations."""
    A = P.algebra
    key = (c, q, tuple(id(u) for u in word))
    if key in cache:
        return cache[key]
    Lc = LinearMap(P, P, A.left_matrix(c))
    Rq = LinearMap(P, P, A.right_matrix(q))
    W = _compose_all(word, P)
    D = Lc @ Rq @ W
    k = len(word)
    if k == 0:
        res = (D, TwoSidedWitness(0, base="left", base_terms=((c, Rq),)))
        cache[key] = res
        return res
    positions = range(k)
    subsets = [S for size in range(1, k + 1) for S in itertools.combinations(positions, size)]

    def sub_witness(make):
        acc = (zero_map(P, P), zero_witness(k - 1))
        for S in subsets:
            rest_word = tuple(word[t] for t in positions if t not in S)
            piece = make(S, rest_word)
            Dp, wp = piece
            acc = add_witnessed(acc, (Dp, lift(Dp, wp, k - 1)))
        return acc

    neg = lambda v: tuple(-x for x in v)
    left_deltas, right_deltas = [], []
    for i in range(A.dim):
        a = A.basis(i)
        # delta_a (p -> W(p) q) = -sum_S u_S(a) W_{S^c}(p) q
        dm, dw = sub_witness(lambda S, rw: _build(
            neg(_compose_all([word[t] for t in S], P)(a)), q, rw, P, cache))
        left_deltas.append(dw)
        # delta_bar_a (p -> c W(p)) = -sum_S c W_{S^c}(p) u_S(a)
        dm, dw = sub_witness(lambda S, rw: _build(
            c, neg(_compose_all([word[t] for t in S], P)(a)), rw, P, cache))
        right_deltas.append(dw)
    left_phi = Rq @ W
    right_phi = Lc @ W
    w = TwoSidedWitness(
        k,
        left=Form((Term(c, left_phi, tuple(left_deltas)),)),
        right=Form((Term(q, right_phi, tuple(right_deltas)),)),
    )
    res = (D, w)
    cache[key] = res
    return res


def derivation_composition_witness(us):
    """Return (u_1 o ... o u_r, witness of order r) for derivations of A."""
    us = tuple(us)
    if not us:
        raise ValueError("need at least one derivation")
    P = us[0].source
    A = P.algebra
    R = regular(A)
    for u in us:
        if u.source != R or u.target != R:
            raise ValueError("derivations must be maps on the regular bimodule")
        if not is_derivation(u):
            raise ValueError("input is not a derivation of A")
    return _build(A.unit, A.unit, us, R, {})
