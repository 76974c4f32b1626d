"""Command-line front end.

Exit status: 0 for yes / success, 1 for no, 2 for input errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .constrained import dispatch_solve, verify_witness
from .core import SemiAutomaton, format_word, image
from .errors import AutomataError, InstanceTooLarge, InvalidWitness
from .formats import (
    dump_record,
    format_pdfa,
    format_semi_automaton,
    parse_pdfa,
    parse_semi_automaton,
    result_record,
)
from .hardness import parse_dimacs, reduce_sat, reduce_transporter, reduction_case
from .languages import BUILTIN_NAMES, builtin_constraint, classify_constraint, sigma_star
from .subset import (
    DEFAULT_MAX_STATES,
    set_transporter_search,
    set_transporter_unary_waa,
    subset_bfs,
    sync_into_subset,
)
from .waa import build_synchronizing_word, check_weakly_acyclic

YES, NO, INPUT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _confirm(ok):
    # witnesses are re-checked here even though every solver already verifies them
    if not ok:
        raise InvalidWitness("internal error: witness failed re-verification")


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_automaton(path) -> SemiAutomaton:
    return parse_semi_automaton(_read(path), source=path)


def _load_constraint(spec, alphabet=None):
    if spec in BUILTIN_NAMES:
        return builtin_constraint(spec, alphabet)
    if os.path.exists(spec):
        return parse_pdfa(_read(spec), source=spec)
    raise UsageError(f"--constraint {spec!r} is neither a built-in name ({', '.join(BUILTIN_NAMES)}) nor a file")


def _state_list(A, text, flag):
    if text is None:
        return None
    names = [s for s in text.split(",") if s]
    try:
        return A.states(names)
    except ValueError as exc:
        raise UsageError(f"{flag}: {exc}") from None


def _emit(args, decision, witness, method, label=None, explored=0, started=None):
    elapsed = (time.perf_counter() - started) * 1000 if (args.stats and started) else None
    if args.json:
        print(dump_record(result_record(decision, witness, method, label, explored, elapsed)))
    else:
        print("yes" if decision else "no")
        if args.witness and witness is not None:
            print(format_word(witness) if witness else "ε")
        if label is not None:
            d = label.as_dict()
            print(f"label: {d['language']} general={d['general']} waa={d['waa']}")
        if args.stats:
            print(f"method: {method}  states explored: {explored}  elapsed: {elapsed:.3f} ms")
    return YES if decision else NO


def cmd_check_waa(args):
    A = _load_automaton(args.automaton)
    result = check_weakly_acyclic(A)
    if result:
        print("weakly acyclic; topological order: " + " ".join(A.names[q] for q in result.order))
        return YES
    print("not weakly acyclic; cycle: " + " -> ".join(A.names[q] for q in result.cycle + result.cycle[:1]))
    return NO


def cmd_sync(args):
    started = time.perf_counter()
    A = _load_automaton(args.automaton)
    cert = check_weakly_acyclic(A)
    if cert:
        word, method, explored = build_synchronizing_word(cert), "waa/greedy", A.n
    else:
        B = sigma_star(A.alphabet)
        res = dispatch_solve(B, A, args.max_states)
        word, method, explored = res.witness, res.method, res.states_explored
    if word is not None:
        _confirm(len(image(A, None, word)) == 1)
    return _emit(args, word is not None, word, method, None, explored, started)


def cmd_constr_sync(args):
    started = time.perf_counter()
    A = _load_automaton(args.automaton)
    B = _load_constraint(args.constraint, A.alphabet)
    res = dispatch_solve(B, A, args.max_states)
    if res.witness is not None:
        _confirm(verify_witness(B, A, res.witness))
    return _emit(args, res.decision, res.witness, res.method, res.label, res.states_explored, started)


def cmd_into_subset(args):
    started = time.perf_counter()
    A = _load_automaton(args.automaton)
    if args.target is None:
        raise UsageError("into-subset needs --target")
    S = _state_list(A, args.set, "--set")
    T = _state_list(A, args.target, "--target")
    cert = check_weakly_acyclic(A)
    if not cert:
        raise UsageError("into-subset needs a weakly acyclic automaton; use 'transport' for general inputs")
    word = sync_into_subset(cert, S, T)
    if word is not None:
        _confirm(image(A, S, word) <= T)
    return _emit(args, word is not None, word, "waa/into-subset", None, A.n, started)


def cmd_from_subset(args):
    started = time.perf_counter()
    A = _load_automaton(args.automaton)
    if args.set is None:
        raise UsageError("from-subset needs --set")
    S = _state_list(A, args.set, "--set")
    if not S:
        raise UsageError("--set must be nonempty")
    xs, explored = subset_bfs(A, S.bits, lambda b: b & (b - 1) == 0, args.max_states)
    word = None if xs is None else tuple(A.alphabet[x] for x in xs)
    if word is not None:
        _confirm(len(image(A, S, word)) == 1)
    return _emit(args, word is not None, word, "search/subset-bfs", None, explored, started)


def cmd_transport(args):
    started = time.perf_counter()
    A = _load_automaton(args.automaton)
    if args.set is None or args.target is None:
        raise UsageError("transport needs --set and --target")
    S = _state_list(A, args.set, "--set")
    T = _state_list(A, args.target, "--target")
    cert = check_weakly_acyclic(A)
    if A.k == 1 and cert:
        word, method = set_transporter_unary_waa(cert, S, T), "waa/unary"
    else:
        word, method = set_transporter_search(A, S, T, args.max_states), "search/subset-bfs"
    if word is not None:
        _confirm(image(A, S, word) <= T)
    return _emit(args, word is not None, word, method, None, A.n, started)


def _write(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_reduce_sat(args):
    phi = parse_dimacs(_read(args.formula), source=args.formula)
    try:
        case = reduction_case(args.case)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    A, B = reduce_sat(phi, case)
    _write(args.output, format_semi_automaton(A))
    if args.constraint_out:
        _write(args.constraint_out, format_pdfa(B))
    if args.output not in (None, "-"):
        print(f"wrote {A.n}-state automaton for {case.target_language} to {args.output}", file=sys.stderr)
    return YES


def cmd_reduce_transport(args):
    A = _load_automaton(args.automaton)
    if args.set is None or args.target is None:
        raise UsageError("reduce-transport needs --set and --target")
    S = _state_list(A, args.set, "--set")
    T = _state_list(A, args.target, "--target")
    A2, B = reduce_transporter(A, S, T)
    _write(args.output, format_semi_automaton(A2))
    if args.constraint_out:
        _write(args.constraint_out, format_pdfa(B))
    return YES


def cmd_classify(args):
    alphabet = "abc" if args.constraint in ("sigma-star", "a-sigma-star-b") else None
    B = _load_constraint(args.constraint, alphabet)
    label = classify_constraint(B)
    if args.json:
        print(json.dumps({"schema": 1, "label": label.as_dict()}, sort_keys=True, indent=2))
    else:
        d = label.as_dict()
        print(f"language: {d['language']}")
        print(f"general: {d['general']}")
        print(f"waa: {d['waa']}")
    return YES


def cmd_selftest(args):
    from .selftest import run_selftest

    ok = run_selftest(seed=args.seed, rounds=args.rounds, out=sys.stdout)
    return YES if ok else NO


def build_parser():
    parser = argparse.ArgumentParser(
        prog="waasync",
        description="Synchronization problems for weakly acyclic automata.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON result record")
    common.add_argument("--witness", action="store_true", help="print the witness word")
    common.add_argument("--stats", action="store_true", help="include timing information")
    common.add_argument(
        "--max-states", type=int, default=DEFAULT_MAX_STATES,
        help=f"guard for exhaustive searches (default {DEFAULT_MAX_STATES}; 0 disables)",
    )
    common.add_argument("--set", help="comma-separated state names for S")
    common.add_argument("--target", help="comma-separated state names for T")
    common.add_argument("--seed", type=int, default=0)

    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, automaton=True):
        p = sub.add_parser(name, parents=[common], help=help_)
        if automaton:
            p.add_argument("automaton", help="semi-automaton file ('-' for stdin)")
        p.set_defaults(func=func)
        return p

    add("check-waa", cmd_check_waa, "test weak acyclicity")
    add("sync", cmd_sync, "find a synchronizing word")
    p = add("constr-sync", cmd_constr_sync, "find a synchronizing word inside a constraint language")
    p.add_argument("--constraint", required=True, help="built-in name or constraint file")
    add("into-subset", cmd_into_subset, "map S (default Q) into --target")
    add("from-subset", cmd_from_subset, "synchronize the states of --set")
    add("transport", cmd_transport, "map --set into --target")
    p = add("reduce-sat", cmd_reduce_sat, "SAT formula to constrained synchronization", automaton=False)
    p.add_argument("--case", required=True, help="target constraint language, e.g. 'a(b+c)*'")
    p.add_argument("formula", help="DIMACS CNF file")
    p.add_argument("-o", "--output", help="output automaton file (default stdout)")
    p.add_argument("--constraint-out", help="also write the constraint automaton here")
    p = add("reduce-transport", cmd_reduce_transport, "SetTransporter to constrained synchronization")
    p.add_argument("-o", "--output", help="output automaton file (default stdout)")
    p.add_argument("--constraint-out", help="also write the constraint automaton here")
    p = add("classify", cmd_classify, "complexity label of a constraint", automaton=False)
    p.add_argument("--constraint", required=True, help="built-in name or constraint file")
    p = add("selftest", cmd_selftest, "randomized consistency checks", automaton=False)
    p.add_argument("--rounds", type=int, default=200)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else YES
    if getattr(args, "max_states", None) == 0:
        args.max_states = None
    try:
        return args.func(args)
    except InstanceTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except (AutomataError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
