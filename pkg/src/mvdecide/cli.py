"""Batch command-line front end.

Decides problem instances over a chosen algebra backend and exposes the
reduction transformers as a term transpiler.  Exit codes: 0 all answers
yes, 1 some answer no, 2 usage or parse error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import cf, pwl, terms as tm
from .backends import (BehnckeLeptinBackend, ChainBackend, EffrosShenBackend,
                       FreeBackend, GammaElement, UnassignedVariable,
                       parse_assignment)
from .cf import CfNumber, StreamExhausted, cf_from_surd
from .engine import ProblemId, decide

EXIT_YES = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class UsageError(Exception):
    pass


def parse_algebra(spec: str, cf_budget: int | None = None):
    """Backend from a surface string like 'farey' or 'effros-shen:surd:-1,5,2'."""
    name, _, rest = spec.partition(":")
    try:
        if name == "farey":
            if rest:
                raise UsageError(f"'farey' takes no parameter: {spec!r}")
            return FreeBackend(1)
        if name == "free":
            return FreeBackend(int(rest))
        if name == "chain":
            return ChainBackend(int(rest))
        if name == "behncke-leptin":
            m, n = rest.split(",")
            return BehnckeLeptinBackend(int(m), int(n))
        if name == "effros-shen":
            return EffrosShenBackend(_parse_theta(rest, cf_budget))
    except UsageError:
        raise
    except (ValueError, cf.ThetaOutOfRange, cf.DIsPerfectSquare) as e:
        raise UsageError(f"bad algebra spec {spec!r}: {e}") from None
    raise UsageError(f"unknown algebra {spec!r}")


def _parse_theta(rest: str, cf_budget: int | None) -> CfNumber:
    kind, _, params = rest.partition(":")
    if kind == "golden":
        return CfNumber.golden()
    if kind == "inv-e":
        return CfNumber.inv_e()
    if kind == "surd":
        p, d, q = (int(x) for x in params.split(","))
        return cf_from_surd(p, d, q)
    if kind == "cf":
        pre_s, _, per_s = params.partition(";")
        pre = [int(x) for x in pre_s.split(",") if x.strip()]
        per = [int(x) for x in per_s.split(",") if x.strip()]
        return CfNumber.periodic(pre, per)
    if kind == "stream":
        with open(params) as fh:
            quots = [int(line) for line in fh if line.strip()]
        return CfNumber.from_stream(quots, budget=cf_budget,
                                    description=f"stream:{params}")
    raise UsageError(f"unknown theta spec {rest!r}")


_REDUCTIONS = {
    "order->zero": (2, tm.reduce_order),
    "word->zero": (2, tm.reduce_word),
    "ecc->zero": (2, tm.reduce_eccentricity),
    "central->zero": (1, tm.reduce_central),
}


def transpile(name: str, term_list) -> str:
    """Apply a named reduction transformer and render the result."""
    name = name.replace("→", "->")
    if name.startswith("zero->central"):
        _, _, n_s = name.partition(":")
        if len(term_list) != 1:
            raise UsageError("zero->central takes one term")
        n = int(n_s) if n_s else max(1, tm.max_var(term_list[0]))
        try:
            return tm.render(tm.reduce_rho(term_list[0], n))
        except tm.VariableIndexExceedsN as e:
            raise UsageError(str(e)) from None
    if name not in _REDUCTIONS:
        raise UsageError(f"unknown reduction {name!r}")
    arity, fn = _REDUCTIONS[name]
    if len(term_list) != arity:
        raise UsageError(f"{name} takes {arity} term(s), got {len(term_list)}")
    return tm.render(fn(*term_list))


def _format_point(p):
    if len(p) == 1:
        return str(p[0])
    return "(" + ", ".join(str(x) for x in p) + ")"


def _witness_text(wit):
    if wit is None:
        return None
    if isinstance(wit, GammaElement):
        if len(wit.coords) == 1:
            return f"element {wit.coords[0]}"
        return f"element ({wit.coords[0]},{wit.coords[1]})"
    point, value = wit
    return f"x = {_format_point(point)}, value {value}"


def _witness_json(wit):
    if wit is None:
        return None
    if isinstance(wit, GammaElement):
        return {"element": list(wit.coords)}
    point, value = wit
    return {"point": [str(x) for x in point], "value": str(value)}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="mvdecide",
        description="Exact decisions of the projection problems P1-P7 "
                    "over pluggable MV-algebra backends.")
    p.add_argument("--algebra", help="free:<n> | farey | chain:<k> | "
                   "effros-shen:{golden|inv-e|surd:P,D,Q|cf:pre;per|stream:path}"
                   " | behncke-leptin:<m>,<n>")
    p.add_argument("--problem", choices=[f"p{i}" for i in range(1, 8)])
    p.add_argument("--term", action="append", default=[],
                   help="term string; repeat for two-term problems")
    p.add_argument("--terms-file",
                   help="file with one instance per line, terms separated "
                        "by whitespace")
    p.add_argument("--assign", help="assignment file: lines 'X<i> = <literal>'")
    p.add_argument("--witness", action="store_true",
                   help="print a certifying witness when one exists")
    p.add_argument("--reduce", metavar="NAME",
                   help="transpile mode: order->zero | word->zero | "
                        "ecc->zero | central->zero | zero->central[:n]")
    p.add_argument("--cf-budget", type=int, default=10 ** 4)
    p.add_argument("--cell-budget", type=int, default=10 ** 6)
    p.add_argument("--format", choices=["text", "json-lines"], default="text")
    return p


def _load_instances(args):
    instances = []
    if args.terms_file:
        with open(args.terms_file) as fh:
            for raw in fh:
                line = raw.split("#", 1)[0].strip()
                if line:
                    instances.append([tm.parse(t) for t in line.split()])
    if args.term:
        instances.append([tm.parse(t) for t in args.term])
    if not instances:
        raise UsageError("no terms given (use --term or --terms-file)")
    return instances


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_YES

    try:
        return _run(args)
    except (UsageError, tm.TermSyntaxError, tm.VariableIndexExceedsN,
            UnassignedVariable, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (pwl.CellBudgetExceeded, StreamExhausted) as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET


def _run(args) -> int:
    if args.reduce:
        term_list = [tm.parse(t) for t in args.term]
        print(transpile(args.reduce, term_list))
        return EXIT_YES

    if not args.algebra or not args.problem:
        raise UsageError("--algebra and --problem are required "
                         "(or use --reduce)")
    backend = parse_algebra(args.algebra, args.cf_budget)
    problem = ProblemId[args.problem.upper()]
    instances = _load_instances(args)

    assignment = None
    if args.assign:
        if isinstance(backend, FreeBackend):
            raise UsageError("the free backend takes no assignment")
        with open(args.assign) as fh:
            assignment = parse_assignment(fh.read(), backend)

    all_yes = True
    for inst in instances:
        if len(inst) != problem.arity:
            raise UsageError(f"{problem.name} takes {problem.arity} term(s), "
                             f"got {len(inst)}")
        start = time.perf_counter()
        verdict = decide(problem, backend, inst, assignment,
                         cell_budget=args.cell_budget)
        elapsed = time.perf_counter() - start
        all_yes = all_yes and verdict.answer
        _emit(args, problem, verdict, elapsed)
    return EXIT_YES if all_yes else EXIT_NO


def _emit(args, problem, verdict, elapsed):
    answer = "yes" if verdict.answer else "no"
    if args.format == "json-lines":
        record = {
            "problem": problem.name.lower(),
            "algebra": args.algebra,
            "verdict": answer,
            "witness": _witness_json(verdict.witness),
            "quotients_consumed": verdict.quotients_consumed,
            "cells_built": verdict.cells_built,
            "elapsed": elapsed,
        }
        print(json.dumps(record))
    else:
        print(answer)
        if args.witness and verdict.witness is not None:
            print(f"witness: {_witness_text(verdict.witness)}")


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
