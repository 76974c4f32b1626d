"""Quick randomized cross-checks between the polynomial algorithms and exhaustive search."""
from __future__ import annotations

import sys

import numpy as np

from .constrained import dispatch_solve, solve_c_then_tail, solve_generic, solve_suffix_c, verify_witness
from .core import image
from .generate import all_cnfs, random_state_set, random_waa
from .hardness import REDUCTION_CASES, brute_force_sat, reduce_sat, reduce_transporter
from .languages import reference_pdfa
from .subset import set_transporter_search, subset_bfs, sync_into_subset
from .waa import maximal_states, sink_states, synchronizing_state


def _check_sinks(rng, rounds):
    for _ in range(rounds):
        A = random_waa(int(rng.integers(1, 9)), int(rng.integers(1, 4)), rng)
        if maximal_states(A) != sink_states(A):
            return False
        word, _ = subset_bfs(A, (1 << A.n) - 1, lambda b: b & (b - 1) == 0, None)
        if (synchronizing_state(A) is not None) != (word is not None):
            return False
    return True


def _check_into_subset(rng, rounds):
    for _ in range(rounds):
        A = random_waa(int(rng.integers(1, 9)), int(rng.integers(1, 4)), rng)
        T = A.states(random_state_set(A.n, rng))
        w = sync_into_subset(A, None, T)
        if (w is not None) != (set_transporter_search(A, None, T, None) is not None):
            return False
        if w is not None and not image(A, None, w) <= T:
            return False
    return True


def _check_poly(rng, rounds):
    for _ in range(rounds):
        A = random_waa(int(rng.integers(1, 9)), 3, rng)
        for name, solve in (
            ("(a+b)*c", lambda: solve_suffix_c(A)),
            ("(a+b)*ca*", lambda: solve_c_then_tail(A, "a")),
            ("(a+b)*cc*", lambda: solve_c_then_tail(A, "c")),
        ):
            B = reference_pdfa(name)
            w = solve()
            if (w is not None) != (solve_generic(B, A, None) is not None):
                return False
            if w is not None and not verify_witness(B, A, w):
                return False
    return True


def _check_transporter(rng, rounds):
    for _ in range(rounds):
        A = random_waa(int(rng.integers(1, 8)), int(rng.integers(1, 4)), rng)
        S = random_state_set(A.n, rng, nonempty=True)
        T = random_state_set(A.n, rng, nonempty=True)
        A2, B = reduce_transporter(A, S, T)
        if dispatch_solve(B, A2, None).decision != (set_transporter_search(A, S, T, None) is not None):
            return False
    return True


def _check_sat(rng, rounds):
    formulas = list(all_cnfs(2, 2))
    picks = rng.choice(len(formulas), size=min(rounds, len(formulas)), replace=False)
    for i in picks:
        phi = formulas[int(i)]
        sat = brute_force_sat(phi) is not None
        for case in REDUCTION_CASES.values():
            A, B = reduce_sat(phi, case)
            if (solve_generic(B, A, None) is not None) != sat:
                return False
    return True


def run_selftest(seed=0, rounds=200, out=sys.stdout) -> bool:
    rng = np.random.default_rng(seed)
    checks = [
        ("maximal states are sinks; sync decision", _check_sinks),
        ("sync-into-subset vs search", _check_into_subset),
        ("polynomial solvers vs generic", _check_poly),
        ("transporter reduction", _check_transporter),
        ("SAT reductions (2 vars, 2 clauses)", _check_sat),
    ]
    ok = True
    for name, check in checks:
        passed = check(rng, rounds)
        ok &= passed
        print(f"{'PASS' if passed else 'FAIL'}  {name}", file=out)
    return ok
