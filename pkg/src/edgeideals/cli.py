"""Command-line interface: ``edgeideals <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .betti import betti_table, invariants
from .closure import Interpretation, closure_generators, closure_witness, forbidden_subgraph_verdict
from .errors import ParseError, ResourceLimitError, UnitIdealError
from .formulas import FAMILIES, predict
from .graph import build_family, edge_ideal
from .harness import SUITES, Engine, EngineConfig, run_all, run_suite
from .ideal import MonomialIdeal, parse_ideal
from .linalg import FieldSpec
from .monomial import VariableContext, format_exponents
from .polarize import polarize


def _weights(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"weights must be comma-separated integers, got {text!r}") from None


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_argument_group("input (either --ideal or --family with --weights)")
    src.add_argument("--ideal", help='monomial ideal, e.g. "(x1^2*x2^2, x2*x3)"')
    src.add_argument("--nvars", type=int, help="ambient variable count (default: largest index used)")
    src.add_argument("--family", choices=FAMILIES, help="build the edge ideal of a weighted graph family")
    src.add_argument("--weights", type=_weights, help="edge weights, e.g. 2,1,1,1")
    src.add_argument("--power", type=int, default=1, help="take the t-th power of the ideal (default 1)")


def _load_ideal(args: argparse.Namespace) -> MonomialIdeal:
    if args.ideal and args.family:
        raise ParseError("give either --ideal or --family, not both")
    if args.ideal:
        ctx = VariableContext(args.nvars) if args.nvars else None
        ideal = parse_ideal(args.ideal, ctx)
    elif args.family:
        if not args.weights:
            raise ParseError("--family needs --weights")
        ideal = edge_ideal(build_family(args.family, args.weights))
    else:
        raise ParseError("no input: use --ideal or --family/--weights")
    if args.power < 1:
        raise ParseError("--power must be at least 1")
    return ideal.power(args.power)


def _emit(data: dict, path: Optional[str]) -> None:
    if path:
        Path(path).write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")


def cmd_betti(args: argparse.Namespace) -> int:
    ideal = _load_ideal(args)
    table = betti_table(ideal, args.field, args.method, args.lattice_cap)
    print(table.format())
    if args.multigraded:
        for (i, a), b in table.multigraded.items():
            print(f"  {i} {format_exponents(a, ideal.ctx.names)}: {b}")
    data = {"ideal": str(ideal), "field": str(args.field), **table.to_json(args.multigraded)}
    inv = invariants(table)
    data["invariants"] = {"reg": inv.reg, "pd": inv.pd, "depth": inv.depth}
    _emit(data, args.json)
    return 0


def cmd_invariants(args: argparse.Namespace) -> int:
    ideal = _load_ideal(args)
    inv = invariants(betti_table(ideal, args.field, args.method, args.lattice_cap))
    print(f"reg={inv.reg}, pd={inv.pd}, depth={inv.depth}")
    _emit({"ideal": str(ideal), "reg": inv.reg, "pd": inv.pd, "depth": inv.depth}, args.json)
    return 0


def cmd_predict(args: argparse.Namespace) -> int:
    preds = predict(args.family, args.weights, args.power)
    wanted = {"all": ("reg", "depth"), "reg": ("reg",), "depth": ("depth",)}[args.quantity]
    out = [p.to_json() for p in preds if p.quantity.invariant in wanted]
    data = {"family": args.family, "weights": args.weights, "t": args.power, "predictions": out}
    print(json.dumps(data, indent=2, sort_keys=True))
    _emit(data, args.json)
    return 0


def cmd_closure(args: argparse.Namespace) -> int:
    ideal = _load_ideal(args)
    witness = closure_witness(ideal)
    closed = witness is None
    print(f"integrally closed: {'yes' if closed else 'no'}")
    data: dict = {"ideal": str(ideal), "integrally_closed": closed}
    if witness is not None and args.witness:
        mono = format_exponents(witness, ideal.ctx.names)
        print(f"witness: {mono}")
        data["witness"] = list(witness)
    if args.generators:
        gens = closure_generators(ideal)
        print(f"closure: {gens}")
        data["closure"] = gens.to_json()
    if args.family and args.power == 1:
        verdict = forbidden_subgraph_verdict(build_family(args.family, args.weights), args.interpretation)
        status = "closed" if verdict.closed else "not closed"
        extra = "" if verdict.applicable else " (not applicable)"
        print(f"forbidden-subgraph test (reading {args.interpretation}): {status}{extra}: {verdict.reason}")
        data["forbidden_subgraph"] = {
            "interpretation": args.interpretation, "closed": verdict.closed,
            "applicable": verdict.applicable, "reason": verdict.reason,
            "obstruction": list(verdict.obstruction),
        }
    _emit(data, args.json)
    return 0


def cmd_polarize(args: argparse.Namespace) -> int:
    ideal = _load_ideal(args)
    pol, pmap = polarize(ideal)
    print(pol)
    for line in pmap.describe():
        print(f"  {line}")
    _emit({"ideal": str(ideal), "polarized": str(pol), "map": pmap.to_json()}, args.json)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    engine = Engine(EngineConfig(args.field, args.lattice_cap, workers=args.workers, cache_dir=args.cache_dir))
    if args.suite == "all":
        report = run_all(engine)
    else:
        report = run_suite(args.suite, engine, args.max_n, args.max_weight, args.max_power)
    summary = report.summary
    print(
        f"{report.suite}: {summary['total']} cases, {summary['match']} match, "
        f"{summary['bound_satisfied']} bound satisfied, {summary['mismatch']} mismatch, "
        f"{summary['skipped']} skipped"
    )
    for reason, n in summary["skipped_by_reason"].items():
        if n:
            print(f"  skipped ({reason}): {n}")
    for key, value in sorted(report.notes.items()):
        print(f"  {key}: {value}")
    for case in report.mismatches[:20]:
        print(f"  MISMATCH {json.dumps(case.to_json(), sort_keys=True)}")
    if args.timing:
        print(f"  wall clock: {report.elapsed:.1f}s")
    if args.json:
        Path(args.json).write_text(report.dumps(args.timing) + "\n")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgeideals",
        description="Betti numbers, regularity and depth of monomial ideals and weighted edge ideals.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field, default=FieldSpec(), help="gf:<prime> (default gf:32003) or rational")
    common.add_argument("--lattice-cap", type=int, default=50_000, help="largest lcm lattice to process")
    common.add_argument("--json", metavar="PATH", help="also write the result as JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("betti", parents=[common], help="graded Betti table of S/I")
    _add_input(p)
    p.add_argument("--method", choices=("koszul", "taylor"), default="koszul")
    p.add_argument("--multigraded", action="store_true", help="include multigraded entries")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("invariants", parents=[common], help="reg, pd and depth of S/I")
    _add_input(p)
    p.add_argument("--method", choices=("koszul", "taylor"), default="koszul")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("predict", help="closed-form predictions for a weighted star or path")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--weights", type=_weights, required=True)
    p.add_argument("--power", type=int, default=1)
    p.add_argument("--quantity", choices=("all", "reg", "depth"), default="all")
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("closure", help="integral closure test")
    _add_input(p)
    p.add_argument("--witness", action="store_true", help="print a monomial of the closure outside I")
    p.add_argument("--generators", action="store_true", help="print the generators of the closure")
    p.add_argument("--interpretation", choices=[i.value for i in Interpretation], default="B")
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("polarize", help="polarization of a monomial ideal")
    _add_input(p)
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_polarize)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--max-n", type=int)
    p.add_argument("--max-weight", type=int)
    p.add_argument("--max-power", type=int)
    p.add_argument("--cache-dir", help="directory for cached Betti tables")
    p.add_argument("--workers", type=int, default=1, help="worker processes for engine runs")
    p.add_argument("--timing", action="store_true", help="report wall-clock time")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, UnitIdealError, ResourceLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
