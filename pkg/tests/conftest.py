"""Shared fixtures and brute-force oracles.

The oracles here work on plain dicts and frozensets and never call into the
library, so agreement with them is real evidence rather than self-consistency.
"""
import itertools
from collections import deque
from pathlib import Path

import pytest

from waasync import ConstraintPdfa, SemiAutomaton

DATA = Path(__file__).parent / "data"


def table(A):
    """Transition dict {(q, letter): q'} of a semi-automaton."""
    return {(q, x): int(A.delta[q, i]) for q in range(A.n) for i, x in enumerate(A.alphabet)}


def naive_image(A, S, word):
    t = table(A)
    cur = set(S)
    for x in word:
        cur = {t[q, x] for q in cur}
    return cur


def transport_oracle(A, S, T):
    """Shortest-length existence check for a word mapping S into T (plain BFS over frozensets)."""
    t = table(A)
    start, T = frozenset(S), frozenset(T)
    seen = {start}
    queue = deque([(start, 0)])
    while queue:
        cur, d = queue.popleft()
        if cur <= T:
            return d
        for x in A.alphabet:
            nxt = frozenset(t[q, x] for q in cur)
            if nxt not in seen:
                seen.add(nxt)
                queue.append((nxt, d + 1))
    return None


def sync_oracle(A):
    """True iff some word sends all of Q to a single state."""
    t = table(A)
    start = frozenset(range(A.n))
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if len(cur) == 1:
            return True
        for x in A.alphabet:
            nxt = frozenset(t[q, x] for q in cur)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return False


def naive_accepts(B, word):
    """Recursive evaluation of a partial DFA."""
    def run(p, rest):
        if not rest:
            return p in B.accepting
        nxt = B.mu[p][B.alphabet.index(rest[0])]
        return nxt is not None and run(nxt, rest[1:])
    return run(B.initial, tuple(word))


def constrained_oracle(B, A, max_len):
    """Length of the shortest word in L(B) of length <= max_len synchronizing A, by enumeration."""
    for length in range(max_len + 1):
        for word in itertools.product(tuple(A.alphabet), repeat=length):
            if naive_accepts(B, word) and len(naive_image(A, range(A.n), word)) == 1:
                return length
    return None


def has_nontrivial_cycle(A):
    """Exhaustive check over words of length <= n for q -u-> q with a letter of u not looping at q."""
    t = table(A)
    letters = tuple(A.alphabet)
    for q in range(A.n):
        for length in range(1, A.n + 1):
            for word in itertools.product(letters, repeat=length):
                p = q
                for x in word:
                    p = t[p, x]
                if p == q and any(t[q, x] != q for x in word):
                    return True
    return False


def all_words(letters, max_len):
    for length in range(max_len + 1):
        yield from itertools.product(letters, repeat=length)


@pytest.fixture
def W1():
    return SemiAutomaton.from_transitions("ab", [0, 1, 2], {
        (0, "a"): 1, (0, "b"): 0,
        (1, "a"): 2, (1, "b"): 2,
        (2, "a"): 2, (2, "b"): 2,
    })


@pytest.fixture
def W2():
    return SemiAutomaton("abc", [[1, 0, 0], [1, 1, 2], [2, 2, 2]])


@pytest.fixture
def W3():
    return SemiAutomaton("abc", [[0, 0, 1], [1, 1, 2], [2, 2, 2]])


@pytest.fixture
def two_sinks():
    # 0 branches to two separate sinks
    return SemiAutomaton("ab", [[1, 2], [1, 1], [2, 2]])


@pytest.fixture
def single():
    return SemiAutomaton("abc", [[0, 0, 0]])


@pytest.fixture
def unary_path():
    return SemiAutomaton("a", [[1], [2], [2]])


@pytest.fixture
def b_star():
    return ConstraintPdfa("ab", [[None, 0]], 0, [0])


# --- acceptance report ------------------------------------------------------

ACCEPTANCE = {}


@pytest.fixture
def acceptance():
    """Record one criterion's outcome; printed in the terminal summary."""
    def record(number, title, ok, detail=""):
        ACCEPTANCE[number] = (title, ok, detail)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[number]
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
