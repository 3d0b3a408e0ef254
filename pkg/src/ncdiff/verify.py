"""The property suite run by ``ncdiff verify``.

Each check draws from its own generator seeded by (seed, check id), so
adding or reordering checks leaves the others' samples unchanged.
"""

from __future__ import annotations

import itertools
import random

from .bimodule import regular
from .cartan import (action_closure_violation, cartan_pair, check_cartan_relations,
                     hat_not_derivation_witness, two_sided_dual_test)
from .cecalc import LINEARITIES, CECalculus, dd_zero, graded_leibniz_check, vector_field_duality
from .derivations import (bullet_witness, center_stability_violation, commutator,
                          derivation_lie_algebra, derivation_space, is_derivation)
from .diffop.commutative import commutative_ladder
from .diffop.filtration import (action_violations, left_filtration, left_filtration_recursive,
                                min_order, right_filtration)
from .diffop.first_order import (first_order_decompose, first_order_space, inner_of_unit_value,
                                 reconstructible_space, split_first_order, splitting_gap)
from .diffop.two_sided import check_two_sided, derivation_composition_witness
from .homspace import HomSpace
from .report import recorded, verdict

# the converse reconstruction system grows like (2 dim A + 1) dim P dim Q
CONVERSE_MAX_HOM_DIM = 16


def _rng(seed, check_id):
    return random.Random("%s:%s" % (seed, check_id))


def _pairs(spec):
    mods = list(spec.modules.values())
    return [(P, Q) for P in mods for Q in mods]


def suite_algebra(spec, seed, trials):
    out = [verdict("algebra.validate", spec.algebra.validate().ok)]
    for name, M in sorted(spec.modules.items()):
        rep = M.validate()
        out.append(verdict("module.%s.validate" % name, rep.ok, violation=rep.violation))
    return out


def suite_derivations(spec, seed, trials):
    A = spec.algebra
    L = derivation_lie_algebra(A)
    ds = derivation_space(A)
    bad_basis = [i for i, u in enumerate(L.basis) if not is_derivation(u)]
    jacobi = []
    for i, j, k in itertools.combinations_with_replacement(range(L.dim), 3):
        x, y, z = L.basis[i], L.basis[j], L.basis[k]
        s = (commutator(x, commutator(y, z)) + commutator(y, commutator(z, x))
             + commutator(z, commutator(x, y)))
        if not s.is_zero():
            jacobi.append((i, j, k))
    inner_ok = ds.inner.is_subspace_of(ds.space)
    return [
        verdict("derivations.leibniz", not bad_basis, dim=L.dim, failures=bad_basis),
        verdict("derivations.jacobi", not jacobi, failures=jacobi),
        verdict("derivations.inner_subspace", inner_ok, inner=ds.inner.dim, outer=ds.outer_dim),
        verdict("derivations.center_stable", center_stability_violation(ds) is None),
        recorded("derivations.bullet_witness", witness=bullet_witness(ds)),
    ]


def suite_filtrations(spec, seed, trials, r_max=3):
    out = []
    for P, Q in _pairs(spec):
        tag = "%s,%s" % (P.name, Q.name)
        Lf = left_filtration(P, Q, r_max)
        Jf = left_filtration_recursive(P, Q, r_max)
        Rf = right_filtration(P, Q, r_max)
        same = Lf.levels == Jf.levels and Lf.stabilized_at == Jf.stabilized_at
        out.append(verdict("filtration.recursive[%s]" % tag, same,
                           primary=Lf.dims, recursive=Jf.dims))
        bad = action_violations(Lf) + action_violations(Rf)
        out.append(verdict("filtration.actions[%s]" % tag, not bad, violations=bad[:5],
                           count=len(bad)))
        out.append(recorded("filtration.right[%s]" % tag, dims=Rf.dims,
                            stabilized_at=Rf.stabilized_at, equals_left=Rf.levels == Lf.levels,
                            rbullet_closed=Rf.notes["rbullet_closed"]))
        if spec.algebra.is_commutative():
            ladder = commutative_ladder(Lf.hom, len(Lf.levels) - 1)
            out.append(verdict("commutative.agreement[%s]" % tag,
                               list(Lf.levels) == ladder[:len(Lf.levels)],
                               left=Lf.dims, commutative=[S.dim for S in ladder]))
    return out


def suite_composition(spec, seed, trials, max_order=2):
    """min_order(D1 o D2) <= n + m for D1 in I_n, D2 in I_m on the regular bimodule."""
    A = spec.algebra
    R = regular(A)
    F = left_filtration(R, R, 2 * max_order)
    H = F.hom
    rng = _rng(seed, "filtration.composition")
    bad = []
    for t in range(trials):
        n, m = rng.randint(0, max_order), rng.randint(0, max_order)
        D1 = H.random_element(F.level(n), rng)
        D2 = H.random_element(F.level(m), rng)
        k = min_order(D1 @ D2, F)
        if k is None or k > n + m:
            bad.append({"trial": t, "orders": [n, m], "composite": k})
    return [verdict("filtration.composition", not bad, trials=trials, violations=bad[:5])]


def suite_first_order(spec, seed, trials):
    out = []
    for P, Q in _pairs(spec):
        tag = "%s,%s" % (P.name, Q.name)
        H = HomSpace(P, Q)
        S = first_order_space(P, Q)
        rng = _rng(seed, "first_order.decomposition[%s]" % tag)
        bad = []
        samples = [H.random_element(S, rng) for _ in range(trials)] if S.dim else []
        for t, D in enumerate(samples):
            rep = first_order_decompose(D).check()
            if not rep.ok:
                bad.append({"trial": t, "violation": rep.violation, "at": rep.witness})
        out.append(verdict("first_order.decomposition[%s]" % tag, not bad,
                           dim=S.dim, trials=len(samples), violations=bad[:5]))
        if H.dim <= CONVERSE_MAX_HOM_DIM:
            out.append(verdict("first_order.converse[%s]" % tag,
                               reconstructible_space(P, Q) == S))
        F = left_filtration(P, Q, 3)
        orders = [min_order(D, F) for D in H.basis_maps(S)]
        out.append(recorded("first_order.left_order[%s]" % tag,
                            max_order=max((o for o in orders if o is not None), default=None),
                            outside_filtration=sum(o is None for o in orders)))
        if P.name == "regular":
            gaps = []
            for i, D in enumerate(H.basis_maps(S)):
                split_first_order(D, "left")
                split_first_order(D, "right")
                if splitting_gap(D) != inner_of_unit_value(D):
                    gaps.append(i)
            out.append(verdict("first_order.splitting[%s]" % tag, not gaps, failures=gaps))
    return out


def suite_ce(spec, seed, trials):
    A = spec.algebra
    calc = CECalculus(A)
    k_max = min(3, max(calc.n, 1))
    dims = [calc.cochain_space(k).dim for k in range(k_max + 1)]
    gen = [S.dim for S in calc.generated_subalgebra(k_max)]
    closure = []
    for k in range(k_max + 1):
        for phi in calc.basis(k):
            for i in range(A.dim):
                a = A.basis(i)
                if not (calc.is_cochain(phi.left_mul(a)) and calc.is_cochain(phi.right_mul(a))):
                    closure.append((k, i))
    lb = graded_leibniz_check(A, trials, seed, calc)
    du = [vector_field_duality(A, calc, lin) for lin in LINEARITIES]
    return [
        verdict("ce.dd_zero", dd_zero(calc, 2)),
        verdict("ce.o1_two_route", calc.o1_direct() == calc.cochain_space(1), dim=dims[1] if len(dims) > 1 else 0),
        verdict("ce.da_b", calc.da_b_identity_holds()),
        verdict("ce.module_closure", not closure, failures=closure[:5]),
        verdict("ce.generated_inside", all(
            S.is_subspace_of(calc.cochain_space(k)) for k, S in enumerate(calc.generated_subalgebra(k_max)))),
        verdict("ce.graded_leibniz", lb.ok, trials=lb.trials, violations=lb.violations[:5]),
    ] + [
        recorded("ce.duality[%s]" % r.linearity, der_dim=r.der_dim, one_forms_dim=r.one_forms_dim,
                 hom_dim=r.hom_dim, injective=r.injective, surjective=r.surjective)
        for r in du
    ] + [recorded("ce.dims", cochains=dims, generated=gen)]


def _cartan_checks(cp, tag):
    rel = check_cartan_relations(cp)
    ts = two_sided_dual_test(cp)
    closure = action_closure_violation(cp)
    return [
        verdict("cartan.relations[%s]" % tag, rel.ok, violation=rel.violation, at=rel.witness),
        verdict("cartan.dual_closure[%s]" % tag, closure is None, at=closure),
        verdict("cartan.two_sided_hats[%s]" % tag, ts.ok, two_sided_dim=ts.two_sided_dim,
                failures=ts.failures),
        recorded("cartan.one_sided_hats[%s]" % tag, one_sided_dim=ts.one_sided_dim,
                 first_order=sum(ts.outside), not_first_order=len(ts.outside) - sum(ts.outside)),
        recorded("cartan.hat_derivation[%s]" % tag, witness=hat_not_derivation_witness(cp)),
    ]


def suite_cartan(spec, seed, trials):
    A = spec.algebra
    out = []
    calc = CECalculus(A)
    R = regular(A)
    for side in ("right", "left"):
        out += _cartan_checks(cartan_pair(A, side=side, calc=calc), "O1,%s" % side)
        for i, d in enumerate(calc.der.basis):
            out += _cartan_checks(cartan_pair(A, R, d, side), "regular,d%d,%s" % (i, side))
    return out


def suite_two_sided(spec, seed, trials):
    A = spec.algebra
    L = derivation_lie_algebra(A)
    words = [(u,) for u in L.basis] + list(itertools.product(L.basis, repeat=2))
    bad = []
    for k, word in enumerate(words):
        D, w = derivation_composition_witness(word)
        if not check_two_sided(D, w):
            bad.append(k)
    return [verdict("two_sided.compositions", not bad, words=len(words), failures=bad)]


SUITE = (suite_algebra, suite_derivations, suite_filtrations, suite_composition,
         suite_first_order, suite_ce, suite_cartan, suite_two_sided)


def run_suite(spec, seed=0, trials=100) -> list:
    checks = []
    for fn in SUITE:
        checks.extend(fn(spec, seed, trials))
    return checks
