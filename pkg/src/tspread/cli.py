"""Command-line front end.

Exit codes: 0 ok, 2 parse error, 3 degenerate instance, 4 budget exceeded,
5 a closed form disagreed with its oracle.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable

from .fuzz import FuzzBounds, run_fuzz
from .hypergraph import DegenerateInstance, InstanceError
from .monomials import Budget, BudgetExceeded, DEFAULT_BUDGET
from .report import (EXIT_BUDGET, EXIT_DEGENERATE, EXIT_OK, EXIT_PARSE, EXIT_VIOLATION,
                     SCHEMA, ReportOptions, betti_section,
                     classify_section, dual_section, load_problem, powers_section,
                     primes_section, rees_section, resolve, build_report, tagged)
from .sorting import TheoremViolation


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("--budget-gens", type=int, default=DEFAULT_BUDGET.max_generators,
                   metavar="N", help="abort once a generator set exceeds N")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--force-oracle-only", action="store_true",
                   help="accept non-complete edge lists; skip every closed form")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tspread",
        description="Invariants of complete t-spread hypergraph edge ideals.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in [("generators", "minimal generators of the edge ideal"),
                        ("betti", "linear-strand Betti numbers, pd and depth"),
                        ("rees-binomials", "sorting and exchange binomials of the Rees algebra"),
                        ("primes", "minimal and associated primes"),
                        ("classify", "height, unmixed, Cohen-Macaulay, König"),
                        ("report", "every invariant in one document")]:
        p = sub.add_parser(name, help=help_)
        p.add_argument("instance")
        _common(p)
        if name == "report":
            p.add_argument("--kmax", type=int, default=0,
                           help="also include the power profile up to this k")
    p = sub.add_parser("dual", help="Alexander dual generators with provenance")
    p.add_argument("instance")
    p.add_argument("--method", choices=("closed", "oracle", "both"), default="both")
    _common(p)
    p = sub.add_parser("powers", help="bounded checks on powers of the edge ideal")
    p.add_argument("instance")
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--check", choices=("persistence", "ass", "ntf", "normal", "all"),
                   default="all")
    _common(p)
    p = sub.add_parser("fuzz", help="seeded closed-form vs oracle differentials")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-vertices", type=int, default=12)
    p.add_argument("--mutant", action="store_true",
                   help="drop the block separation condition from the dual (mutation test)")
    _common(p)
    return parser


def _ideal_doc(args, handler: Callable[..., dict[str, Any]]) -> dict[str, Any]:
    problem = load_problem(args.instance)
    pruned, h, I = resolve(problem, args.force_oracle_only)
    budget = Budget(max_generators=args.budget_gens)
    budget.check_generators(len(I), "edge ideal")
    return {"schema": SCHEMA, **handler(problem, pruned, h, I, budget)}


def _generators(args) -> dict[str, Any]:
    def run(problem, pruned, h, I, budget):
        removed = list(pruned.removed) if pruned is not None else []
        return {"pruned_vertices": removed,
                "generators": tagged("oracle" if pruned is None else "both-agree",
                                     count=len(I), monomials=[str(g) for g in I.gens])}
    return _ideal_doc(args, run)


def _betti(args):
    return _ideal_doc(args, lambda prob, pruned, h, I, b: {"betti": betti_section(I, pruned)})


def _rees(args):
    def run(problem, pruned, h, I, budget):
        if pruned is None:
            raise InstanceError("rees-binomials needs the complete hypergraph")
        return {"rees_binomials": rees_section(I)}
    return _ideal_doc(args, run)


def _dual(args):
    def run(problem, pruned, h, I, budget):
        method = args.method
        if pruned is None or not pruned.interval_form:
            if method == "closed":
                raise InstanceError("closed-form dual needs complete, interval-form parts")
            method = "oracle"
        return {"dual": dual_section(I, pruned, method, budget)}
    return _ideal_doc(args, run)


def _primes(args):
    return _ideal_doc(args, lambda prob, pruned, h, I, b: {"primes": primes_section(I, b)})


def _classify(args):
    def run(problem, pruned, h, I, budget):
        inst = pruned if pruned is not None else problem.instance
        return classify_section(I, inst, h, budget, oracle_only=pruned is None)
    return _ideal_doc(args, run)


def _powers(args):
    checks = ({"persistence", "ass", "normal"} if args.check == "all"
              else {args.check})
    normal_k = min(args.kmax, 2) if "normal" in checks else 0

    def run(problem, pruned, h, I, budget):
        return {"powers": powers_section(I, args.kmax, normal_k, checks, budget)}
    return _ideal_doc(args, run)


def _report(args):
    opts = ReportOptions(budget=Budget(max_generators=args.budget_gens),
                         powers_kmax=args.kmax or None, normal_kmax=min(args.kmax, 2),
                         force_oracle_only=args.force_oracle_only)
    return build_report(load_problem(args.instance), opts).to_json()


def _fuzz(args):
    summary = run_fuzz(args.seed, args.count, FuzzBounds(max_vertices=args.max_vertices),
                       mutant=args.mutant)
    return {"schema": SCHEMA, "fuzz": summary.to_json()}


COMMANDS = {"generators": _generators, "betti": _betti, "rees-binomials": _rees,
            "dual": _dual, "primes": _primes, "classify": _classify, "powers": _powers,
            "report": _report, "fuzz": _fuzz}


def render_table(doc: Any, indent: int = 0) -> str:
    """Flattened key/value view; lossy and not meant to be parsed."""
    pad = "  " * indent
    lines = []
    if isinstance(doc, dict):
        for k, v in doc.items():
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                lines.append(f"{pad}{k}:")
                lines.append(render_table(v, indent + 1))
            else:
                lines.append(f"{pad}{k:<24} {_cell(v)}")
    elif isinstance(doc, list):
        for item in doc:
            if isinstance(item, dict):
                lines.append(f"{pad}- " + ", ".join(f"{k}={_cell(v)}" for k, v in item.items()))
            else:
                lines.append(f"{pad}- {_cell(item)}")
    return "\n".join(lines)


def _flat_list(v: Any) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _cell(v: Any) -> str:
    if isinstance(v, list):
        return " ".join(map(str, v)) if v else "-"
    if v is None:
        return "-"
    return str(v)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = COMMANDS[args.command](args)
    except TheoremViolation as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except DegenerateInstance as exc:
        print(f"degenerate instance: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except InstanceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    if args.format == "json":
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        sys.stdout.write(render_table(doc) + "\n")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
