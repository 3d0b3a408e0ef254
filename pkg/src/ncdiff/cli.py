"""Command line interface: ``ncdiff <command> <spec> [options]``.

A spec argument is either a JSON spec file or the name of a zoo algebra.
Exit status is 0 when every check passes, 1 when any check fails and 2 on
bad input (unreadable or invalid spec, unknown operator or module).
"""

from __future__ import annotations

import argparse
import sys

from . import specfile
from .algebra import ZOO_NAMES, zoo
from .cartan import cartan_pair
from .cecalc import LINEARITIES, CECalculus, dd_zero, vector_field_duality
from .derivations import derivation_lie_algebra, derivation_space
from .diffop.commutative import order_commutative
from .diffop.filtration import (action_violations, left_filtration, left_filtration_recursive,
                                min_order, right_filtration)
from .diffop.first_order import first_order_violation, is_first_order_ncg
from .report import Report, recorded, verdict
from .specfile import SpecError
from . import verify as suite


class InputError(Exception):
    pass


def _spec(args):
    return specfile.resolve(args.spec)


def cmd_validate(args, rep):
    spec = _spec(args)
    rep.checks += suite.suite_algebra(spec, 0, 0)
    rep.tables["algebra"] = {"name": spec.algebra.name, "dim": spec.algebra.dim,
                             "field": spec.algebra.field.name,
                             "commutative": spec.algebra.is_commutative()}
    rep.tables["modules"] = {n: M.dim for n, M in spec.modules.items()}
    rep.tables["operators"] = {n: [specfile._module_name(spec, D.source),
                                   specfile._module_name(spec, D.target)]
                               for n, D in spec.operators.items()}


def cmd_zoo(args, rep):
    if args.action == "list":
        if args.name:
            raise InputError("zoo list takes no name")
        rep.tables["zoo"] = {n: zoo(n).dim for n in ZOO_NAMES}
        return None
    if not args.name:
        raise InputError("zoo export needs an algebra name")
    if args.name not in ZOO_NAMES:
        raise InputError("unknown zoo algebra %r; known: %s" % (args.name, ", ".join(ZOO_NAMES)))
    return specfile.export_zoo(args.name)


def cmd_order(args, rep):
    spec = _spec(args)
    D = spec.operator(args.operator)
    r_max = args.max_order
    d = args.definition
    table = {"operator": args.operator, "definition": d}
    if d == "commutative":
        table["order"] = order_commutative(D, r_max)
    elif d == "ncg-first":
        ok = is_first_order_ncg(D)
        table["first_order"] = ok
        table["violation"] = first_order_violation(D)
    else:
        build = left_filtration if d == "left" else right_filtration
        F = build(D.source, D.target, r_max)
        table["order"] = min_order(D, F)
        table["levels"] = F.dims
        table["stabilized_at"] = F.stabilized_at
    rep.tables["order"] = table


def cmd_filtration(args, rep):
    spec = _spec(args)
    P = spec.module(args.source)
    Q = spec.module(args.target)
    build = left_filtration if args.side == "left" else right_filtration
    F = build(P, Q, args.max_order)
    rep.tables["filtration"] = {"side": args.side, "source": P.name, "target": Q.name,
                                "hom_dim": F.hom.dim, "dims": F.dims,
                                "stabilized_at": F.stabilized_at}
    bad = action_violations(F)
    rep.checks.append(verdict("filtration.actions", not bad, count=len(bad)))
    if args.side == "left":
        J = left_filtration_recursive(P, Q, args.max_order)
        rep.checks.append(verdict("filtration.recursive", J.levels == F.levels, recursive=J.dims))
    else:
        rep.checks.append(recorded("filtration.rbullet_closed", value=F.notes["rbullet_closed"]))


def cmd_derivations(args, rep):
    spec = _spec(args)
    A = spec.algebra
    ds = derivation_space(A)
    L = derivation_lie_algebra(A)
    rep.tables["derivations"] = {
        "dim": ds.dim, "inner_dim": ds.inner.dim, "outer_dim": ds.outer_dim,
        "basis": [[list(r) for r in u.matrix.rows] for u in L.basis],
        "bracket": [[list(L.bracket[i][j]) for j in range(L.dim)] for i in range(L.dim)],
    }
    rep.checks += suite.suite_derivations(spec, 0, 0)


def cmd_ce(args, rep):
    spec = _spec(args)
    A = spec.algebra
    calc = CECalculus(A)
    k_max = args.max_degree
    cochain_dims = [calc.cochain_space(k).dim for k in range(k_max + 1)]
    gen = calc.generated_subalgebra(k_max)
    du = [vector_field_duality(A, calc, lin) for lin in LINEARITIES]
    rep.tables["ce"] = {"der_dim": calc.n, "cochains": cochain_dims,
                        "generated": [S.dim for S in gen]}
    rep.checks += [
        verdict("ce.dd_zero", dd_zero(calc, min(2, k_max))),
        verdict("ce.o1_two_route", calc.o1_direct() == calc.cochain_space(1)),
        verdict("ce.da_b", calc.da_b_identity_holds()),
    ] + [
        recorded("ce.duality[%s]" % r.linearity, der_dim=r.der_dim, one_forms_dim=r.one_forms_dim,
                 hom_dim=r.hom_dim, injective=r.injective, surjective=r.surjective)
        for r in du
    ]


def cmd_cartan(args, rep):
    spec = _spec(args)
    A = spec.algebra
    tables = {}
    for side in ("right", "left"):
        if args.q is None:
            cps = [("O1", cartan_pair(A, side=side))]
        else:
            Q = spec.module(args.q)
            if args.d is not None:
                ds = [(args.d, spec.operator(args.d))]
            elif Q.name == "regular":
                ds = [("d%d" % i, u) for i, u in enumerate(derivation_lie_algebra(A).basis)]
            else:
                raise InputError("--q %s needs --d <operator>" % args.q)
            try:
                cps = [("%s,%s" % (Q.name, name), cartan_pair(A, Q, d, side)) for name, d in ds]
            except ValueError as exc:
                raise InputError(str(exc)) from None
        for tag, cp in cps:
            full = "%s,%s" % (tag, side)
            rep.checks += suite._cartan_checks(cp, full)
            tables[full] = {"q_dim": cp.q_module.dim, "dual_dim": cp.dual.dim}
    rep.tables["cartan"] = tables


def cmd_verify(args, rep):
    spec = _spec(args)
    rep.checks += suite.run_suite(spec, args.seed, args.trials)
    rep.tables["suite"] = {"seed": args.seed, "trials": args.trials,
                           "algebra": spec.algebra.name}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ncdiff",
                                     description="Differential operators on finite-dimensional algebras.")
    parser.add_argument("--json", action="store_true", help="machine-readable report")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_spec(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("spec", help="spec file or zoo algebra name")
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        return p

    with_spec("validate", "check algebra, module and operator data")
    p = sub.add_parser("zoo", help="built-in algebras")
    p.add_argument("action", choices=["list", "export"])
    p.add_argument("name", nargs="?")
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    p = with_spec("order", "order of one operator")
    p.add_argument("--operator", required=True)
    p.add_argument("--definition", required=True,
                   choices=["commutative", "ncg-first", "left", "right"])
    p.add_argument("--max-order", type=int, default=None)
    p = with_spec("filtration", "dimension table of a filtration")
    p.add_argument("--side", choices=["left", "right"], default="left")
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--source", default="regular")
    p.add_argument("--target", default="regular")
    with_spec("derivations", "derivation Lie algebra")
    p = with_spec("ce", "Chevalley-Eilenberg calculus")
    p.add_argument("--max-degree", type=int, default=3)
    p = with_spec("cartan", "Cartan pairs")
    p.add_argument("--q", default=None, help="module name (default: one-forms with universal d)")
    p.add_argument("--d", default=None, help="operator A -> Q used as the derivation")
    p = with_spec("verify", "full property suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    return parser


COMMANDS = {"validate": cmd_validate, "order": cmd_order, "filtration": cmd_filtration,
            "derivations": cmd_derivations, "ce": cmd_ce, "cartan": cmd_cartan,
            "verify": cmd_verify}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    for name in ("max_order", "max_degree", "trials"):
        if getattr(args, name, None) is not None and getattr(args, name) < 0:
            print("ncdiff: --%s must be non-negative" % name.replace("_", "-"), file=stderr)
            return 2
    rep = Report(["ncdiff"] + argv)
    try:
        if args.command == "zoo":
            text = cmd_zoo(args, rep)
            if text is not None:
                stdout.write(text)
                return 0
        else:
            COMMANDS[args.command](args, rep)
    except (SpecError, InputError) as exc:
        print("ncdiff: %s" % exc, file=stderr)
        return 2
    stdout.write(rep.to_json() if args.json else rep.to_text())
    return rep.exit_code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
