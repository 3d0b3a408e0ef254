"""Right and left Cartan pairs of a first-degree calculus (Q, d).

For the right pair the dual consists of maps u: Q -> A with u(q a) = u(q) a,
acted on by (b u)(q) = b u(q) and (u b)(q) = u(b q).  The left pair mirrors
everything: u(a q) = a u(q), (u b)(q) = u(q) b, (b u)(q) = u(q b).  In the
coordinates of Hom_K(Q, A) these are exactly the kernels of delta_bar and
delta, and the dual actions are two of the four standard actions, so one code
path serves both sides.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .algebra import Algebra, Report
from .bimodule import Bimodule, direct_sum, regular, submodule
from .cecalc import CECalculus, Cochain
from .derivations import is_derivation, leibniz_violation
from .diffop.first_order import is_first_order_ncg
from .exactla import Matrix, Subspace, intersect
from .homspace import HomSpace, LinearMap, act

# (coefficient on the value side, coefficient on the argument side)
_DUAL_ACTIONS = {"right": ("left", "bullet"), "left": ("right", "rbullet")}


@dataclass(frozen=True, eq=False)
class CartanPair:
    algebra: Algebra
    q_module: Bimodule
    d: LinearMap
    side: str
    dual: Subspace
    hom: HomSpace
    calc: CECalculus | None = None   # set when Q is O^1 A with the universal d
    o1_basis: tuple = field(default=())

    @property
    def outer_action(self):
        """Action name for b u on the right pair (u b on the left pair): b u(q)."""
        return _DUAL_ACTIONS[self.side][0]

    @property
    def inner_action(self):
        """Action name for u b on the right pair (b u on the left pair): u(b q)."""
        return _DUAL_ACTIONS[self.side][1]

    def basis_maps(self):
        return self.hom.basis_maps(self.dual)

    def contains(self, u: LinearMap) -> bool:
        return u.source == self.q_module and self.dual.contains(self.hom.to_vec(u))

    def hat(self, u: LinearMap) -> LinearMap:
        return hat(self, u)


def _dual_space(H: HomSpace, side):
    if side == "right":
        return H.zero_order_right()
    if side == "left":
        return H.zero_order_left()
    raise ValueError("side must be 'right' or 'left'")


def right_dual(Q: Bimodule) -> tuple:
    """(hom space, dual subspace) for u(q a) = u(q) a."""
    H = HomSpace(Q, regular(Q.algebra))
    return H, _dual_space(H, "right")


def left_dual(Q: Bimodule) -> tuple:
    """(hom space, dual subspace) for u(a q) = a u(q)."""
    H = HomSpace(Q, regular(Q.algebra))
    return H, _dual_space(H, "left")


def one_forms_module(calc: CECalculus) -> tuple:
    """(O^1 A as a bimodule, universal d: A -> O^1 A, basis of O^1 A as cochains)."""
    A = calc.algebra
    O1 = calc.generated_subalgebra(1)[1]
    ambient = direct_sum(*[regular(A)] * calc.n, name="forms") if calc.n else None
    if ambient is None:
        Q = Bimodule(A, 0, tuple(Matrix.zeros(0, 0, A.field) for _ in range(A.dim)),
                     tuple(Matrix.zeros(0, 0, A.field) for _ in range(A.dim)), name="O1")
    else:
        Q = submodule(ambient, O1, name="O1")
    cols = [O1.coordinates(calc.exact(A.basis(i)).coeffs) for i in range(A.dim)]
    d = LinearMap(regular(A), Q, Matrix.from_columns(cols, Q.dim, A.field))
    return Q, d, tuple(Cochain(calc, 1, b) for b in O1.basis)


def cartan_pair(A: Algebra, Q: Bimodule | None = None, d: LinearMap | None = None,
                side="right", calc: CECalculus | None = None) -> CartanPair:
    """Build a Cartan pair; with Q omitted, Q = O^1 A and d is the universal one."""
    basis = ()
    if Q is None:
        calc = calc or CECalculus(A)
        Q, d, basis = one_forms_module(calc)
    else:
        calc = None
        if d is None:
            raise ValueError("a module Q needs its derivation d")
    if d.source != regular(A) or d.target != Q:
        raise ValueError("d must be a map A -> Q")
    bad = leibniz_violation(d)
    if bad is not None:
        raise ValueError("d fails the Leibniz rule on basis pair %s" % (bad,))
    H = HomSpace(Q, regular(A))
    return CartanPair(A, Q, d, side, _dual_space(H, side), H, calc, basis)


def hat(cp: CartanPair, u: LinearMap) -> LinearMap:
    """a -> u(d a)."""
    if not cp.contains(u):
        raise ValueError("map is not in the %s dual of Q" % cp.side)
    return LinearMap(cp.d.source, u.target, u.matrix @ cp.d.matrix)


def _hat_unchecked(cp, u):
    return LinearMap(cp.d.source, u.target, u.matrix @ cp.d.matrix)


def action_closure_violation(cp: CartanPair):
    """(action, basis index, dual basis index) where the dual is not stable, or None."""
    A = cp.algebra
    for which in (cp.outer_action, cp.inner_action):
        for i in range(A.dim):
            for j, u in enumerate(cp.basis_maps()):
                if not cp.contains(act(A.basis(i), u, which)):
                    return (which, i, j)
    return None


def check_cartan_relations(cp: CartanPair, u: LinearMap | None = None, a=None, b=None) -> Report:
    """Both product relations of the hat morphism, exactly.

    Right pair: hat(b u)(a) = b hat(u)(a) and hat(u)(b a) = hat(u)(b) a + hat(u b)(a).
    Left pair:  hat(u b)(a) = hat(u)(a) b and hat(u)(a b) = a hat(u)(b) + hat(b u)(a).
    Omitted arguments range over basis elements; the witness is
    (relation, dual basis index, a index, b index).
    """
    A = cp.algebra
    R = regular(A)
    us = [u] if u is not None else cp.basis_maps()
    idx = lambda x: list(range(A.dim)) if x is None else [x]
    elem = lambda i: A.basis(i) if isinstance(i, int) else A.elem(i)
    right = cp.side == "right"
    for k, uu in enumerate(us):
        if not cp.contains(uu):
            return Report(False, "map is not in the dual", (k,))
        hu = _hat_unchecked(cp, uu)
        for ia, ib in itertools.product(idx(a), idx(b)):
            x, y = elem(ia), elem(ib)
            outer = _hat_unchecked(cp, act(y, uu, cp.outer_action))
            inner = _hat_unchecked(cp, act(y, uu, cp.inner_action))
            if right:
                first = outer(x) == R.left_matrix(y).apply(hu(x))
                lhs = hu(A.multiply(y, x))
                rhs = tuple(s + t for s, t in zip(A.multiply(hu(y), x), inner(x)))
            else:
                first = outer(x) == R.right_matrix(y).apply(hu(x))
                lhs = hu(A.multiply(x, y))
                rhs = tuple(s + t for s, t in zip(A.multiply(x, hu(y)), inner(x)))
            if not first:
                return Report(False, "first relation fails", (1, k, ia, ib))
            if lhs != rhs:
                return Report(False, "second relation fails", (2, k, ia, ib))
    return Report(True)


@dataclass(frozen=True)
class TwoSidedDualReport:
    one_sided_dim: int
    two_sided_dim: int
    two_sided_pass: bool
    failures: tuple             # two-sided basis indices whose hat fails (should be empty)
    outside: tuple              # ncg first-order flag for each complement basis vector

    @property
    def ok(self):
        return self.two_sided_pass


def two_sided_dual(cp: CartanPair) -> Subspace:
    H = cp.hom
    return intersect(H.zero_order_left(), H.zero_order_right())


def two_sided_dual_test(cp: CartanPair) -> TwoSidedDualReport:
    """hat(u) is first order (ncg sense) for u in the two-sided dual; record the rest."""
    H = cp.hom
    both = two_sided_dual(cp)
    failures = tuple(i for i, b in enumerate(both.basis)
                     if not is_first_order_ncg(_hat_unchecked(cp, H.from_vec(b))))
    outside = tuple(is_first_order_ncg(_hat_unchecked(cp, H.from_vec(b)))
                    for b in both.complement_basis(cp.dual))
    return TwoSidedDualReport(cp.dual.dim, both.dim, not failures, failures, outside)


def evaluation(cp: CartanPair, v: LinearMap) -> LinearMap:
    """The map O^1 A -> A, omega -> omega(v), for a derivation v."""
    if cp.calc is None:
        raise ValueError("evaluation needs Q = O^1 A with the universal d")
    calc = cp.calc
    A = cp.algebra
    coords = calc.der.coordinates(v)
    cols = []
    for w in cp.o1_basis:
        val = [A.field.zero] * A.dim
        for t, c in enumerate(coords):
            if c != 0:
                val = [s + c * x for s, x in zip(val, w.value((t,)))]
        cols.append(tuple(val))
    return LinearMap(cp.q_module, regular(A), Matrix.from_columns(cols, A.dim, A.field))


def noncommutative_vector_field(cp: CartanPair, a, v: LinearMap) -> LinearMap:
    """hat of a . ev_v: b -> a v(b) on the right pair, b -> v(b) a on the left pair."""
    ev = evaluation(cp, v)
    return hat(cp, act(cp.algebra.elem(a), ev, cp.outer_action))


def hat_not_derivation_witness(cp: CartanPair):
    """(dual basis index, Leibniz-violating basis pair) for the first non-derivation hat."""
    for k, u in enumerate(cp.basis_maps()):
        bad = leibniz_violation(_hat_unchecked(cp, u))
        if bad is not None:
            return k, bad
    return None


def hat_is_derivation(cp: CartanPair, u: LinearMap) -> bool:
    return is_derivation(hat(cp, u))
