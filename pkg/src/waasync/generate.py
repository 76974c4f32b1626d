"""Random instances for property tests, benchmarks and the self-test."""
from __future__ import annotations

import itertools

import numpy as np

from .core import Alphabet, ConstraintPdfa, SemiAutomaton
from .hardness import CnfFormula

__all__ = [
    "random_waa",
    "random_synchronizing_waa",
    "random_automaton",
    "random_pdfa",
    "random_state_set",
    "all_cnfs",
]

LETTERS = "abcdefgh"


def _rng(seed):
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def random_waa(n, k, seed=None, loop_prob=0.5, letters=None) -> SemiAutomaton:
    """Random weakly acyclic automaton.

    A hidden random order fixes which states may follow which; each transition
    is a self-loop with probability ``loop_prob`` and otherwise jumps to a
    uniformly chosen later state.  State indices are shuffled against that
    order, so the identity is rarely a valid topological sort.
    """
    rng = _rng(seed)
    letters = LETTERS[:k] if letters is None else letters
    rank = rng.permutation(n)  # rank[q] = position of q in the hidden order
    by_rank = np.argsort(rank)
    delta = np.empty((n, k), dtype=np.int64)
    for q in range(n):
        r = rank[q]
        for x in range(k):
            if r == n - 1 or rng.random() < loop_prob:
                delta[q, x] = q
            else:
                delta[q, x] = by_rank[rng.integers(r + 1, n)]
    return SemiAutomaton(Alphabet(letters), delta)


def random_synchronizing_waa(n, k=3, seed=None) -> SemiAutomaton:
    """Large synchronizing WAA: state ``n-1`` is the only sink, every other state
    has at least one forward transition.  Vectorized for ``n`` in the 1e5 range."""
    rng = _rng(seed)
    q = np.arange(n)[:, None]
    span = np.maximum(n - 1 - q, 1)
    forward = q + 1 + (rng.random((n, k)) * span).astype(np.int64)
    forward = np.minimum(forward, n - 1)
    loops = rng.random((n, k)) < 0.5
    delta = np.where(loops, q, forward)
    # guarantee one forward edge per non-final state
    forced = rng.integers(0, k, size=n)
    delta[np.arange(n), forced] = forward[np.arange(n), forced]
    delta[n - 1, :] = n - 1
    return SemiAutomaton(Alphabet(LETTERS[:k]), delta)


def random_automaton(n, k, seed=None, letters=None) -> SemiAutomaton:
    rng = _rng(seed)
    letters = LETTERS[:k] if letters is None else letters
    return SemiAutomaton(Alphabet(letters), rng.integers(0, n, size=(n, k)))


def random_pdfa(n, letters="abc", seed=None, defined_prob=0.7) -> ConstraintPdfa:
    """Random partial DFA with ``n`` states; at least one state accepts."""
    rng = _rng(seed)
    k = len(letters)
    mu = [
        [int(rng.integers(0, n)) if rng.random() < defined_prob else None for _ in range(k)]
        for _ in range(n)
    ]
    accepting = [p for p in range(n) if rng.random() < 0.5] or [int(rng.integers(0, n))]
    return ConstraintPdfa(Alphabet(letters), mu, 0, accepting)


def random_state_set(n, seed=None, nonempty=False) -> list:
    rng = _rng(seed)
    while True:
        members = [q for q in range(n) if rng.random() < 0.5]
        if members or not nonempty:
            return members


def all_cnfs(num_vars, num_clauses):
    """Every CNF with exactly ``num_clauses`` non-tautological clauses over
    ``num_vars`` variables, as a multiset of clauses (order ignored)."""
    lits = [l for v in range(1, num_vars + 1) for l in (v, -v)]
    clauses = [
        c
        for r in range(1, num_vars + 1)
        for c in itertools.combinations(lits, r)
        if not any(-l in c for l in c)
    ]
    for combo in itertools.combinations_with_replacement(clauses, num_clauses):
        yield CnfFormula(num_vars, combo)
