"""Command-line front door; a thin client over the calculator modules.

Exit codes: 0 success, 1 usage error, 2 invalid semigroup, 3 internal
invariant violation, 4 budget exceeded, 5 conjecture counterexample found.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import derived, roots as roots_mod
from .degrees import classify
from .errors import (BudgetExceeded, EmptyGenerators,
                     InternalInvariantViolation, NonCoprime, NsdegError)
from .relideal import RelativeIdeal
from .semigroup import NumericalSemigroup, parse_generators
from .survey import ALL_CHECKS, SurveyConfig, format_summary, survey_run


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _gens(text: str) -> list[int]:
    try:
        return parse_generators(text)
    except (ValueError, EmptyGenerators) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _node_budget(default: int) -> int:
    raw = os.environ.get("NSDEG_BUDGET")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"error: NSDEG_BUDGET={raw!r} is not an integer")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nsdeg",
                     description="canonical degrees of numerical semigroup rings")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, with_gens=True):
        p = sub.add_parser(name, help=help_text)
        if with_gens:
            p.add_argument("gens", type=_gens, metavar="G",
                           help="comma-separated generators, e.g. 5,7,9")
        p.add_argument("--json", action="store_true", help="emit JSON")
        return p

    add("info", "semigroup invariants")
    add("degrees", "cdeg, bideg, tdeg and classification flags")

    p = add("ideal", "relative-ideal calculator")
    p.add_argument("--ideal-gens", type=_gens, required=True, metavar="L",
                   help="generators of the ideal, e.g. 5,7")
    p.add_argument("--op", choices=["dual", "bidual", "trace", "colon"],
                   help="operation applied to the ideal")
    p.add_argument("--rhs", type=_gens, metavar="L2",
                   help="right-hand generators for --op colon")

    p = add("mm", "the m:m ring and its degree formulas")
    p.add_argument("--iterate", type=int, default=1, metavar="N",
                   help="apply m:m repeatedly up to N steps")

    add("herzog", "Herzog-matrix exponents for a 3-generated semigroup")

    p = add("roots", "translation classes L with an n-fold sumset giving K")
    p.add_argument("--nmax", type=int, default=roots_mod.DEFAULT_NMAX,
                   metavar="N", help="largest exponent searched")

    p = add("survey", "exhaustive checks over all semigroups up to a genus",
            with_gens=False)
    p.add_argument("--max-genus", type=int, required=True, metavar="N")
    p.add_argument("--out", metavar="F", help="write one record per semigroup")
    p.add_argument("--format", choices=["jsonl", "csv"], default="jsonl")
    p.add_argument("--workers", type=int, default=1, metavar="N")
    p.add_argument("--checks", metavar="LIST",
                   help="comma-separated subset of: " + ",".join(ALL_CHECKS))

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _emit(args, payload: dict, text: str) -> None:
    print(json.dumps(payload) if args.json else text)


def _cmd_info(args) -> int:
    H = NumericalSemigroup(args.gens)
    d = H.to_dict()
    text = "\n".join([
        f"H = {H}",
        f"frobenius    {d['frobenius']}",
        f"conductor    {d['conductor']}",
        f"genus        {d['genus']}",
        f"multiplicity {d['multiplicity']}",
        f"type         {d['type']}",
        f"pf           {d['pf']}",
        f"symmetric    {d['symmetric']}",
    ])
    _emit(args, d, text)
    return 0


def _cmd_degrees(args) -> int:
    rep = classify(NumericalSemigroup(args.gens))
    d = rep.to_dict()
    text = "\n".join([
        f"H = <{','.join(map(str, rep.gens))}>  (type {rep.type}, "
        f"multiplicity {rep.multiplicity}, genus {rep.genus})",
        f"cdeg  {rep.cdeg}",
        f"bideg {rep.bideg}",
        f"tdeg  {rep.tdeg}",
        f"gorenstein        {rep.gorenstein}",
        f"almost_gorenstein {rep.almost_gorenstein}",
        f"nearly_gorenstein {rep.nearly_gorenstein}",
        f"goto              {rep.goto}",
    ])
    _emit(args, d, text)
    return 0


def _cmd_ideal(args) -> int:
    H = NumericalSemigroup(args.gens)
    I = RelativeIdeal.from_generators(H, args.ideal_gens)
    if args.op == "colon" and not args.rhs:
        print("nsdeg: error: --op colon needs --rhs", file=sys.stderr)
        return 1
    if args.op == "dual":
        I = I.dual()
    elif args.op == "bidual":
        I = I.bidual()
    elif args.op == "trace":
        I = I.trace()
    elif args.op == "colon":
        I = I.colon(RelativeIdeal.from_generators(H, args.rhs))
    d = I.to_dict()
    text = (f"min {d['min']}, conductor {d['conductor']}, "
            f"elements {d['elements']} then every larger integer")
    _emit(args, d, text)
    return 0


def _cmd_mm(args) -> int:
    H = NumericalSemigroup(args.gens)
    steps = derived.mm_report(H, args.iterate)
    if args.json:
        print(json.dumps({"steps": steps}))
        return 0
    for i, s in enumerate(steps, 1):
        flag = "PASS" if s["formula_ok"] and s["mc_canonical"] else "FAIL"
        print(f"step {i}: <{','.join(map(str, s['gens']))}> -> "
              f"A = <{','.join(map(str, s['mm_gens']))}>")
        print(f"  nu(A) = {s['nu']} (expected type+1 = {s['nu_expected']})")
        print(f"  cdeg(A): direct {s['cdeg_direct']}, "
              f"formula cdeg+e0-2r = {s['cdeg_formula']}  [{flag}]")
        print(f"  m*C canonical over A: {s['mc_canonical']}")
        print(f"  lambda(A/mC) = {s['lambda_a_mod_mc']}, "
              f"lambda(A/(mC)**) = {s['lambda_a_mod_mc_bidual']}, "
              f"difference {s['bideg_via_mc']}")
        print(f"  bideg(A) = {s['bideg_direct']}, tdeg(A) = {s['tdeg_direct']}")
    if not steps:
        print("full semigroup: m:m tower is trivial")
    return 0


def _cmd_herzog(args) -> int:
    H = NumericalSemigroup(args.gens)
    rep = derived.herzog_report(H)
    if args.json:
        print(json.dumps(rep))
        return 0
    print(f"H = <{','.join(map(str, rep['gens']))}>: "
          f"cdeg {rep['cdeg']}, bideg {rep['bideg']}")
    for d in rep["orderings"]:
        mark = "hypothesis holds" if d["hypothesis"] else "hypothesis fails"
        print(f"  ordering {d['ordering']}: "
              f"(a1,a2,b1,b2,c1,c2) = ({d['a1']},{d['a2']},{d['b1']},"
              f"{d['b2']},{d['c1']},{d['c2']}); {mark}; "
              f"a1*b2*c1 = {d['predicted_bideg']}; "
              f"cdeg candidates {d['cdeg_candidates']}")
    print(f"predicted bideg matches: {rep['predicted_bideg_ok']}; "
          f"cdeg in candidates: {rep['cdeg_candidates_ok']}")
    return 0


def _cmd_roots(args) -> int:
    H = NumericalSemigroup(args.gens)
    budget = _node_budget(roots_mod.DEFAULT_NODE_BUDGET)
    classes = roots_mod.rootset(H, args.nmax, node_budget=budget)
    payload = {"gens": list(H.gens),
               "classes": [rc.to_dict() for rc in classes]}
    if args.json:
        print(json.dumps(payload))
        return 0
    print(f"{len(classes)} root class(es) for {H} with nmax={args.nmax}")
    for rc in classes:
        d = rc.to_dict()
        print(f"  n={d['n']} irreducible={d['irreducible']} "
              f"ideal min {d['ideal']['min']} elements {d['ideal']['elements']}")
    return 0


def _cmd_survey(args) -> int:
    checks = ALL_CHECKS
    if args.checks:
        checks = tuple(c.strip() for c in args.checks.split(",") if c.strip())
    try:
        cfg = SurveyConfig(
            gmax=args.max_genus,
            checks=checks,
            out=args.out,
            fmt=args.format,
            workers=args.workers,
            node_budget=_node_budget(SurveyConfig.node_budget),
        )
    except ValueError as exc:
        print(f"nsdeg: error: --checks: {exc}", file=sys.stderr)
        return 1
    summary = survey_run(cfg)
    if args.json:
        print(json.dumps({
            "records": summary.records,
            "per_genus": summary.per_genus,
            "tallies": summary.tallies,
            "min_cdeg_minus_bideg": summary.min_cdeg_minus_bideg,
            "max_cdeg_minus_bideg": summary.max_cdeg_minus_bideg,
            "violations": summary.violations,
            "out": summary.out_path,
            "violations_out": summary.violations_path,
        }))
    else:
        print(format_summary(summary))
    return 5 if summary.violations else 0


def _cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("nsdeg.service:app", host=args.host, port=args.port)
    return 0


_COMMANDS = {
    "info": _cmd_info,
    "degrees": _cmd_degrees,
    "ideal": _cmd_ideal,
    "mm": _cmd_mm,
    "herzog": _cmd_herzog,
    "roots": _cmd_roots,
    "survey": _cmd_survey,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return _COMMANDS[args.command](args)
    except (EmptyGenerators, NonCoprime) as exc:
        print(f"nsdeg: invalid semigroup: {exc}", file=sys.stderr)
        return 2
    except InternalInvariantViolation as exc:
        print(f"nsdeg: internal invariant violation: {exc}", file=sys.stderr)
        return 3
    except BudgetExceeded as exc:
        print(f"nsdeg: budget exceeded: {exc}", file=sys.stderr)
        return 4
    except NsdegError as exc:
        print(f"nsdeg: error: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
