"""Subset synchronization: Sync-Into-Subset, Sync-From-Subset and SetTransporter.

For weakly acyclic automata, "map S into T" is decided in polynomial time when
S already contains every sink reachable from it: the answer is yes exactly when
those sinks lie in T.  The general problems are solved here by breadth-first
search over reachable subsets, guarded by an instance-size limit.
"""
from __future__ import annotations

from collections import deque

from .core import SemiAutomaton
from .errors import AlphabetMismatch, EmptyInput, InstanceTooLarge, PreconditionViolated
from .waa import reachable_maximal_from, require_waa

__all__ = [
    "DEFAULT_MAX_STATES",
    "sync_into_subset",
    "sync_from_subset_search",
    "set_transporter_search",
    "set_transporter_unary_waa",
    "subset_bfs",
]

DEFAULT_MAX_STATES = 20


def _guard(A: SemiAutomaton, max_states):
    if max_states is not None and A.n > max_states:
        raise InstanceTooLarge(A.n, max_states)


def _decode(A, xs):
    return tuple(A.alphabet[x] for x in xs)


def sync_into_subset(waa, S, T):
    """Word ``w`` with ``delta(S, w) ⊆ T`` on a WAA, or None if none exists.

    Requires that ``S`` contain all sinks reachable from it (pass ``S=None``
    for the whole state set).  The witness is the canonical sweep word (every
    letter once, in alphabet order) repeated, cut off as soon as the image is
    inside ``T``.
    """
    cert = require_waa(waa)
    A = cert.automaton
    S, T = A.states(S), A.states(T)
    R = reachable_maximal_from(cert, S)
    if not R <= S:
        missing = sorted(R - S)
        raise PreconditionViolated(
            f"S must contain every sink reachable from it; missing {[A.names[q] for q in missing]}"
        )
    if not R <= T:
        return None
    bits, target = S.bits, T.bits
    letters = []
    rounds = 0
    # n-1 sweeps move every non-sink of S into a sink
    while bits & ~target:
        if rounds >= max(A.n - 1, 1):
            raise AssertionError("sweep word failed to reach the target; automaton is not weakly acyclic")
        for x in range(A.k):
            bits = A.image_bits(bits, x)
            letters.append(x)
            if not bits & ~target:
                break
        rounds += 1
    return _decode(A, letters)


def subset_bfs(A: SemiAutomaton, start: int, accept, max_states=DEFAULT_MAX_STATES):
    """Shortest, lexicographically least letter-index word from bitset ``start``
    to a bitset satisfying ``accept``.  Returns ``(word or None, explored)``."""
    _guard(A, max_states)
    if accept(start):
        return (), 1
    parent = {start: None}
    queue = deque([start])
    k = A.k
    image_bits = A.image_bits
    while queue:
        cur = queue.popleft()
        for x in range(k):
            nxt = image_bits(cur, x)
            if nxt in parent:
                continue
            parent[nxt] = (cur, x)
            if accept(nxt):
                word = []
                node = nxt
                while parent[node] is not None:
                    node, letter = parent[node]
                    word.append(letter)
                word.reverse()
                return tuple(word), len(parent)
            queue.append(nxt)
    return None, len(parent)


def sync_from_subset_search(A: SemiAutomaton, S, max_states=DEFAULT_MAX_STATES):
    """Shortest lex-least ``w`` with ``|delta(S, w)| = 1``, or None (exhaustive search)."""
    S = A.states(S)
    if not S:
        raise EmptyInput("S must be nonempty")
    word, _ = subset_bfs(A, S.bits, lambda b: b & (b - 1) == 0, max_states)
    return None if word is None else _decode(A, word)


def set_transporter_search(A: SemiAutomaton, S, T, max_states=DEFAULT_MAX_STATES):
    """Shortest lex-least ``w`` with ``delta(S, w) ⊆ T``, or None (exhaustive search)."""
    S, T = A.states(S), A.states(T)
    if not S:
        return ()
    if not T:
        return None
    outside = ~T.bits
    word, _ = subset_bfs(A, S.bits, lambda b: b & outside == 0, max_states)
    return None if word is None else _decode(A, word)


def set_transporter_unary_waa(waa, S, T):
    """SetTransporter on a unary WAA: only ``a^0 .. a^(n-1)`` need testing,
    since the images stop changing after ``n-1`` steps.  Returns the least
    such power whose image lies in ``T``, or None."""
    cert = require_waa(waa)
    A = cert.automaton
    if A.k != 1:
        raise AlphabetMismatch(f"unary alphabet required, got {list(A.alphabet)}")
    S, T = A.states(S), A.states(T)
    bits, outside = S.bits, ~T.bits
    for i in range(A.n):
        if not bits & outside:
            return (A.alphabet[0],) * i
        bits = A.image_bits(bits, 0)
    return None
