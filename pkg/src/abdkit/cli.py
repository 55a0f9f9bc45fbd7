"""Command-line front end: ``abdkit <command> [flags] <file|->``.

Exit status is 0 on success, 1 when solve answers no or check finds a
disagreement, 2 on usage, parse and limit errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import oracle
from .classifier import classify_decision
from .counting import count, count_brute_force
from .formula import FormulaError
from .generators import GeneratorError, generate, parse_genspec
from .model import Instance, InstanceError, Mode, format_instance, parse_instance
from .solvers import (
    Algorithm,
    AlgorithmMismatch,
    enumerate_explanations,
    instance_clone,
    solve,
)

OK, NO, ERROR = 0, 1, 2


class CliError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None


def _load(args) -> Instance:
    p = parse_instance(_read(args.input))
    if getattr(args, "mode_override", None):
        p = p.with_mode(args.mode_override)
    return p


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=False))
    else:
        print(text)


def cmd_solve(args) -> int:
    p = _load(args)
    r = solve(p, args.algorithm)
    lits = r.witness.to_strings() if r.witness is not None else None
    payload = {"status": "sat" if r else "unsat", "explanation": lits, "algorithm": r.algorithm}
    if r:
        text = "explanation: {" + ", ".join(lits) + "}" + f"  [{r.algorithm}]"
    else:
        text = f"no explanation  [{r.algorithm}]"
    _emit(args, payload, text)
    return OK if r else NO


def cmd_count(args) -> int:
    p = _load(args)
    if args.minimal and not p.positive:
        raise CliError("--minimal applies to positive-mode instances")
    r = count(p, minimal_only=args.minimal)
    _emit(args, {"count": r.value, "method": r.method}, f"{r.value}  [{r.method}]")
    return OK


def cmd_enumerate(args) -> int:
    p = _load(args)
    out = []
    for e in enumerate_explanations(p):
        if args.full_only and not e.is_full(p.hypotheses):
            continue
        out.append(e.to_strings())
    if args.json:
        print(json.dumps({"explanations": out}))
    else:
        for lits in out:
            print("{" + ", ".join(lits) + "}")
    return OK


def cmd_classify(args) -> int:
    p = _load(args)
    v = classify_decision(instance_clone(p), p.mode, p.class_tag)
    _emit(args, json.loads(v.to_json()), str(v))
    return OK


def cmd_clone(args) -> int:
    p = _load(args)
    c = instance_clone(p)
    _emit(args, {"clone": str(c)}, str(c))
    return OK


def cmd_gen(args) -> int:
    spec = parse_genspec(_read(args.input))
    if args.seed is not None:
        if spec.kind != "random":
            raise CliError("--seed applies to the random generator")
        spec = type(spec)(spec.kind, {**spec.payload, "seed": args.seed}, spec.target)
    g = generate(spec)
    text = format_instance(g.instance)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.json:
        print(json.dumps(g.metadata, sort_keys=True), file=sys.stderr)
    return OK


def cmd_check(args) -> int:
    p = _load(args)
    n = len(p.all_vars())
    if n > args.max_vars:
        raise CliError(f"instance has {n} variables, check is limited to {args.max_vars}")
    oracle.check_limits(p)
    problems = []
    r = solve(p, args.algorithm)
    truth = oracle.has_explanation(p)
    if bool(r) != truth:
        problems.append(f"solver says {r.status}, oracle says {truth}")
    if r.witness is not None and not oracle.tt_verify(p, r.witness):
        problems.append(f"witness {r.witness.to_strings()} fails truth-table verification")
    listed = list(enumerate_explanations(p))
    if set(listed) != set(oracle.brute_force_explanations(p)):
        problems.append("enumeration differs from the oracle")
    kind = "positive-all" if p.positive else "full"
    got = count(p).value
    want = count_brute_force(p, kind).value
    if got != want:
        problems.append(f"count {got} differs from brute force {want}")
    if args.json:
        print(json.dumps({"agree": not problems, "problems": problems}))
    else:
        print("agree" if not problems else "\n".join(problems))
    return OK if not problems else NO


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="abdkit", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def command(name: str, fn, help_: str, mode: bool = True):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("input", help="instance file, or - for standard input")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        if mode:
            sp.add_argument("--mode-override", choices=[m.value for m in Mode])
        sp.set_defaults(func=fn)
        return sp

    algos = [a.value for a in Algorithm]
    sp = command("solve", cmd_solve, "decide existence and print one explanation")
    sp.add_argument("--algorithm", choices=algos, default="auto")
    sp = command("count", cmd_count, "count full (or positive) explanations")
    sp.add_argument("--minimal", action="store_true", help="only subset-minimal positive ones")
    sp = command("enumerate", cmd_enumerate, "list explanations in lexicographic order")
    sp.add_argument("--full-only", action="store_true")
    command("classify", cmd_classify, "complexity verdict for the instance's region")
    command("clone", cmd_clone, "clone generated by the instance's connectives", mode=False)
    sp = command("gen", cmd_gen, "build an instance from a generator payload", mode=False)
    sp.add_argument("--seed", type=int)
    sp.add_argument("-o", "--output", help="write the instance here instead of stdout")
    sp = command("check", cmd_check, "cross-validate solver, counter and enumerator")
    sp.add_argument("--algorithm", choices=algos, default="auto")
    sp.add_argument("--max-vars", type=int, default=oracle.MAX_VARS)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (
        CliError,
        InstanceError,
        FormulaError,
        GeneratorError,
        AlgorithmMismatch,
        oracle.OracleLimitError,
    ) as exc:
        print(f"abdkit: error: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
