"""The increasing filtrations I_0 <= I_1 <= ... of Hom_K(P, Q).

``left_filtration`` follows the quotient construction: I_r is the
sub-bimodule (for the actions ``left`` and ``bullet``) generated by the
preimage of the center of Hom/I_{r-1}.  ``left_filtration_recursive`` builds
the same chain from finite sums b_i Phi^i + Delta_{r-1}, without any fixpoint
iteration, and serves as an independent check.  ``right_filtration`` mirrors
the recursive form with delta_bar and right coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..bimodule import Bimodule
from ..exactla import Subspace, preimage_all, span_sum
from ..homspace import HomSpace, LinearMap, ACTIONS


@dataclass(frozen=True, eq=False)
class Filtration:
    P: Bimodule
    Q: Bimodule
    side: str
    levels: tuple
    stabilized_at: int | None
    hom: HomSpace
    notes: dict = field(default_factory=dict)

    @property
    def dims(self):
        return [S.dim for S in self.levels]

    def level(self, r: int) -> Subspace:
        """I_r; past the last stored level this is the top level if stabilized."""
        if r < len(self.levels):
            return self.levels[r]
        if self.stabilized_at is not None:
            return self.levels[-1]
        raise IndexError("level %d was not computed (r_max too small)" % r)

    def min_order(self, D: LinearMap) -> int | None:
        return min_order(D, self)


def _run(H: HomSpace, first: Subspace, step, r_max: int):
    levels = [first]
    stabilized = 0 if first.is_full() else None
    r = 0
    while stabilized is None and r < r_max:
        r += 1
        nxt = step(levels[-1])
        if nxt == levels[-1]:
            stabilized = r - 1
            break
        levels.append(nxt)
        if nxt.is_full():
            stabilized = r
    return tuple(levels), stabilized


def _default_rmax(H, r_max):
    return H.dim if r_max is None else r_max


def left_filtration(P: Bimodule, Q: Bimodule, r_max: int | None = None) -> Filtration:
    """I_0 = closure(ker delta), I_r = closure({phi : delta_a phi in I_{r-1}})."""
    H = HomSpace(P, Q)
    r_max = _default_rmax(H, r_max)
    closure = lambda S: H.closure(S, ("left", "bullet"))
    first = closure(H.zero_order_left())

    def step(prev):
        return closure(preimage_all(H.delta_ops, prev, H.dim, H.field))

    levels, stab = _run(H, first, step, r_max)
    return Filtration(P, Q, "left", levels, stab, H)


def left_filtration_recursive(P: Bimodule, Q: Bimodule, r_max: int | None = None) -> Filtration:
    """J_r = J_{r-1} + span{b Phi : b in A, delta_a Phi in J_{r-1} for all a}."""
    H = HomSpace(P, Q)
    r_max = _default_rmax(H, r_max)
    left_ops = H.action_ops["left"]

    def left_multiples(S, extra=None):
        vecs = [m.apply(b) for m in left_ops for b in S.basis]
        if extra is not None:
            vecs.extend(extra.basis)
        return Subspace(H.dim, vecs, H.field)

    first = left_multiples(H.zero_order_left())

    def step(prev):
        cands = preimage_all(H.delta_ops, prev, H.dim, H.field)
        return left_multiples(cands, prev)

    levels, stab = _run(H, first, step, r_max)
    return Filtration(P, Q, "left", levels, stab, H, {"construction": "recursive"})


def right_filtration(P: Bimodule, Q: Bimodule, r_max: int | None = None) -> Filtration:
    """R_r = R_{r-1} + closure_right({phi : delta_bar_a phi in R_{r-1}}).

    Only the action phi -> phi a is used to close; whether the levels are also
    stable under phi -> (p -> phi(p a)) is tested and stored in ``notes``.
    """
    H = HomSpace(P, Q)
    r_max = _default_rmax(H, r_max)
    closure = lambda S: H.closure(S, ("right",))
    first = closure(H.zero_order_right())

    def step(prev):
        cands = preimage_all(H.delta_bar_ops, prev, H.dim, H.field)
        return span_sum(closure(cands), prev)

    levels, stab = _run(H, first, step, r_max)
    rbullet_closed = all(H.is_stable(S, "rbullet") for S in levels)
    return Filtration(P, Q, "right", levels, stab, H, {"rbullet_closed": rbullet_closed})


def min_order(D: LinearMap, F: Filtration) -> int | None:
    """Least r with D in I_r; None when D is outside every computed level."""
    H = F.hom
    if D.source != F.P or D.target != F.Q:
        raise ValueError("operator does not belong to the filtered hom space")
    v = H.to_vec(D)
    for r, S in enumerate(F.levels):
        if S.contains(v):
            return r
    return None


def action_violations(F: Filtration):
    """(level, action, basis index) triples where a level is not stable."""
    H = F.hom
    out = []
    for r, S in enumerate(F.levels):
        for which in ACTIONS:
            for i, m in enumerate(H.action_ops[which]):
                if not all(S.contains(m.apply(b)) for b in S.basis):
                    out.append((r, which, i))
    return out
