"""Command-line front end.

Exit status: 0 on success, 1 when a verification finds a mismatch, 2 on
usage or budget errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from triuniv import catalog
from triuniv.core import BudgetError, TargetParity, TriunivError, parse_sum
from triuniv.escalation import (
    NodeStatus,
    escalate,
    table1,
    table1_csv,
    universal_ternaries,
)
from triuniv.reduction import verify_oracles
from triuniv.representation import represents
from triuniv.truant import DEFAULT_BOUND, check_criterion, even_truant, random_sums, truant

OK, MISMATCH, USAGE = 0, 1, 2


def _bound(text: str) -> int:
    value = int(float(text)) if "e" in text.lower() else int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("bound must be positive")
    return value


def _write_json(path: str, command: str, params: dict, results, verdict: str) -> None:
    with open(path, "w") as fp:
        json.dump({"command": command, "params": params, "results": results, "verdict": verdict},
                  fp, indent=2, sort_keys=False)
        fp.write("\n")


def cmd_represent(args) -> int:
    print("true" if represents(parse_sum(args.sum), args.n) else "false")
    return OK


def cmd_truant(args) -> int:
    s = parse_sum(args.sum)
    if args.even:
        report = even_truant(s, args.bound - args.bound % 2)
    else:
        report = truant(s, args.bound)
    print(report)
    return OK


def cmd_escalate(args) -> int:
    parity = TargetParity(args.parity)
    root = escalate(args.max_arity, args.bound, parity=parity)
    print(f"escalation: parity={parity.value} max_arity={args.max_arity} bound={args.bound}")
    for k in range(1, args.max_arity + 1):
        layer = root.layer(k)
        counts = {status: sum(n.status is status for n in layer) for status in NodeStatus}
        proper = sum(bool(n.proper) for n in layer)
        print(f"arity {k}: candidates={len(layer)} certified={counts[NodeStatus.CERTIFIED]} "
              f"proper={proper} failing={counts[NodeStatus.FAILING]} "
              f"truncated={counts[NodeStatus.TRUNCATED]}")
    pruned = sum(n.pruned for n in root.walk())
    if pruned:
        print(f"chain pruning (heuristic) stopped {pruned} nodes")
    if args.json:
        params = {"max_arity": args.max_arity, "bound": args.bound, "parity": parity.value}
        _write_json(args.json, "escalate", params, root.to_dict(), "complete")
    return OK


def cmd_table1(args) -> int:
    result = table1(args.bound)
    for arity, s in result.rows():
        print(f"{arity}\t{s}")
    counts = result.counts()
    print(f"found {counts.get(3, 0)} ternary, {counts.get(4, 0)} quaternary, "
          f"{counts.get(5, 0)} quinary; {sum(counts.values())} total")
    print(result.diff_report())
    if args.csv:
        with open(args.csv, "w") as fp:
            fp.write(table1_csv(result))
    return OK if result.matches else MISMATCH


def cmd_verify_criterion(args) -> int:
    criterion = catalog.criterion(args.criterion)
    tree = [n.sum for n in escalate(args.tree_arity, args.bound).walk() if n.arity]
    extra = random_sums(args.random, args.max_coeff, args.max_arity, args.seed) if args.random else []
    check = check_criterion(criterion, tree + extra, args.bound)
    print(f"criterion {criterion.name}: targets {','.join(map(str, criterion.targets))} "
          f"({criterion.provenance})")
    print(f"population: {len(tree)} escalation nodes (arity <= {args.tree_arity}) + "
          f"{len(extra)} random sums (seed={args.seed}, max_coeff={args.max_coeff}, "
          f"max_arity={args.max_arity})")
    print(f"checked {check.checked} sums up to {check.bound}; {check.passing} pass the criterion")
    for s, passes, report in check.counterexamples:
        print(f"counterexample: {s} criterion={'pass' if passes else 'fail'} truant={report}")
    print("verdict: " + ("consistent" if check.ok else "MISMATCH"))
    return OK if check.ok else MISMATCH


def cmd_verify_liouville(args) -> int:
    found = universal_ternaries(args.bound)
    expected = sorted(catalog.liouville_triples())
    for s in found:
        print(f"universal up to {args.bound}: {s}")
    ok = found == expected
    print("verdict: " + ("matches the seven triples" if ok else "MISMATCH"))
    return OK if ok else MISMATCH


def cmd_verify_reduction(args) -> int:
    sums = [s for group in catalog.table1_expected().values() for s in group]
    report = verify_oracles(sums, args.bound)
    print(f"checked {report.sums} sums x even targets <= {args.bound} ({report.targets} pairs)")
    print(f"sweep vs odd-square disagreements: {len(report.disagreements)}")
    print(f"reduction successes: {report.reduction_hits}; unsound answers: {len(report.unsound)}")
    for s, target, swept, odd in report.disagreements[:20]:
        print(f"disagreement: {s} target={target} sweep={swept} odd-square={odd}")
    for s, target in report.unsound[:20]:
        print(f"unsound: {s} target={target}")
    print("verdict: " + ("consistent" if report.ok else "MISMATCH"))
    return OK if report.ok else MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="triuniv",
                                     description="Universal sums of triangular numbers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("represent", help="does the sum represent n?")
    p.add_argument("sum")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_represent)

    p = sub.add_parser("truant", help="least missed integer (or even integer)")
    p.add_argument("sum")
    p.add_argument("--even", action="store_true")
    p.add_argument("--bound", type=_bound, default=DEFAULT_BOUND)
    p.set_defaults(func=cmd_truant)

    p = sub.add_parser("escalate", help="build the candidate tree")
    p.add_argument("--max-arity", type=int, default=6)
    p.add_argument("--bound", type=_bound, default=DEFAULT_BOUND)
    p.add_argument("--parity", choices=[p.value for p in TargetParity], default="even")
    p.add_argument("--json", metavar="OUT")
    p.set_defaults(func=cmd_escalate)

    p = sub.add_parser("table1", help="proper even universal sums of arity 3..5")
    p.add_argument("--bound", type=_bound, default=DEFAULT_BOUND)
    p.add_argument("--csv", metavar="OUT")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("verify-criterion", help="criterion <=> bounded universality")
    p.add_argument("criterion", choices=["E8", "BK8", "kane-odd"])
    p.add_argument("--bound", type=_bound, default=DEFAULT_BOUND)
    p.add_argument("--random", type=int, default=0, metavar="R")
    p.add_argument("--max-coeff", type=int, default=50, metavar="C")
    p.add_argument("--max-arity", type=int, default=6, metavar="A")
    p.add_argument("--seed", type=int, default=0, metavar="S")
    p.add_argument("--tree-arity", type=int, default=5)
    p.set_defaults(func=cmd_verify_criterion)

    p = sub.add_parser("verify-liouville", help="universal ternary sums")
    p.add_argument("--bound", type=_bound, default=DEFAULT_BOUND)
    p.set_defaults(func=cmd_verify_liouville)

    p = sub.add_parser("verify-reduction", help="cross-check the three solvers on the table")
    p.add_argument("--bound", type=_bound, default=2000)
    p.set_defaults(func=cmd_verify_reduction)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, BudgetError) as exc:
        print(f"triuniv: error: {exc}", file=sys.stderr)
        return USAGE
    except TriunivError as exc:
        print(f"triuniv: {exc}", file=sys.stderr)
        return MISMATCH


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
