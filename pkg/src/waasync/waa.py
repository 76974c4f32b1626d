"""Weakly acyclic automata: recognition, sinks and linear-time synchronization.

An automaton is weakly acyclic (WAA) when its only simple cycles are
self-loops, i.e. its states can be topologically sorted once self-loops are
ignored.  In a WAA the maximal states are exactly the sinks, and the automaton
is synchronizing iff there is a unique sink reachable from every state.
"""
from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order

from .core import SemiAutomaton, StateSet
from .errors import WaaRequired

__all__ = [
    "WaaCertificate",
    "NotWaa",
    "check_weakly_acyclic",
    "require_waa",
    "maximal_states",
    "sink_states",
    "synchronizing_state",
    "shortest_words_to",
    "build_synchronizing_word",
    "reachable_maximal_from",
]


@dataclass(frozen=True, eq=False)
class WaaCertificate:
    """Proof that ``automaton`` is weakly acyclic: a topological order of its states.

    ``order[i]`` is the i-th state; every transition goes from a state to itself
    or to a state later in ``order``.
    """

    automaton: SemiAutomaton
    order: tuple
    position: tuple = field(repr=False)

    def __bool__(self):
        return True


@dataclass(frozen=True)
class NotWaa:
    """Evidence that an automaton is not weakly acyclic: a cycle of distinct states."""

    cycle: tuple

    def __bool__(self):
        return False


def _certificate(A: SemiAutomaton, order) -> WaaCertificate:
    order = np.asarray(order, dtype=np.int64)
    position = np.empty(A.n, dtype=np.int64)
    position[order] = np.arange(A.n)
    return WaaCertificate(A, tuple(order.tolist()), tuple(position.tolist()))


def check_weakly_acyclic(A: SemiAutomaton):
    """Topologically sort ``A`` with self-loops removed.

    Returns a :class:`WaaCertificate` (ties broken by smallest state index) or a
    :class:`NotWaa` carrying a cycle through at least two distinct states.
    """
    n, k = A.n, A.k
    src = np.repeat(np.arange(n), k)
    dst = A.delta.ravel()
    keep = src != dst
    # unique (src, dst) edges without self-loops, sorted by src then dst
    edges = np.unique(src[keep] * n + dst[keep])
    src, dst = edges // n, edges % n
    indptr = np.searchsorted(src, np.arange(n + 1))
    indeg = np.bincount(dst, minlength=n).tolist()
    starts, targets = indptr.tolist(), dst.tolist()
    heap = [q for q in range(n) if indeg[q] == 0]
    order = []
    pop, push = heapq.heappop, heapq.heappush
    while heap:
        q = pop(heap)
        order.append(q)
        for t in targets[starts[q]:starts[q + 1]]:
            indeg[t] -= 1
            if indeg[t] == 0:
                push(heap, t)
    if len(order) == n:
        return _certificate(A, order)
    succ = [targets[starts[q]:starts[q + 1]] for q in range(n)]
    return NotWaa(_find_cycle(succ, indeg))


def _find_cycle(succ, indeg):
    # every leftover state still has a leftover predecessor; walk backwards until a repeat
    pred = {}
    for q, targets in enumerate(succ):
        if indeg[q] == 0:
            continue
        for t in targets:
            if indeg[t] > 0:
                pred.setdefault(t, q)
    start = min(pred)
    seen = {}
    path = []
    q = start
    while q not in seen:
        seen[q] = len(path)
        path.append(q)
        q = pred[q]
    cycle = path[seen[q]:]
    cycle.reverse()
    i = cycle.index(min(cycle))
    return tuple(cycle[i:] + cycle[:i])


def require_waa(obj) -> WaaCertificate:
    """Accept a certificate or an automaton; raise :class:`WaaRequired` if not weakly acyclic."""
    if isinstance(obj, WaaCertificate):
        return obj
    if isinstance(obj, SemiAutomaton):
        result = check_weakly_acyclic(obj)
        if not result:
            raise WaaRequired(f"automaton has a non-trivial cycle {list(result.cycle)}", result.cycle)
        return result
    raise WaaRequired(f"expected a weakly acyclic SemiAutomaton, got {type(obj).__name__}")


def sink_states(A: SemiAutomaton) -> StateSet:
    delta = A.delta
    mask = np.all(delta == np.arange(A.n)[:, None], axis=1)
    return A.states(np.flatnonzero(mask).tolist())


def maximal_states(waa) -> StateSet:
    """Maximal states of a WAA under reachability; these are precisely its sinks."""
    cert = require_waa(waa)
    A = cert.automaton
    rows = A.rows
    # maximal = nothing strictly larger is reachable in one step
    bits = 0
    for q in range(A.n):
        if all(t == q for t in rows[q]):
            bits |= 1 << q
    return StateSet(A.n, bits)


def _reverse_graph(A: SemiAutomaton) -> csr_matrix:
    n, k = A.n, A.k
    src = np.repeat(np.arange(n), k)
    dst = A.delta.ravel()
    data = np.ones(src.size, dtype=np.int8)
    return csr_matrix((data, (dst, src)), shape=(n, n))


def synchronizing_state(waa):
    """The synchronizing state of a WAA, or None when it is not synchronizing.

    Linear time: find the sinks, require exactly one, then check that a reverse
    breadth-first search from it reaches every state.
    """
    cert = require_waa(waa)
    A = cert.automaton
    delta = A.delta
    is_sink = np.all(delta == np.arange(A.n)[:, None], axis=1)
    sinks = np.flatnonzero(is_sink)
    if sinks.size != 1:
        return None
    s = int(sinks[0])
    if A.n == 1:
        return s
    reached = breadth_first_order(_reverse_graph(A), s, directed=True, return_predecessors=False)
    return s if reached.size == A.n else None


def shortest_words_to(A: SemiAutomaton, target: int):
    """For every state, the letter-index sequence of the shortest, lexicographically
    least word leading to ``target`` (None if unreachable)."""
    n, k, rows = A.n, A.k, A.rows
    back = [[] for _ in range(n)]
    for q, row in enumerate(rows):
        for t in set(row):
            if t != q:
                back[t].append(q)
    dist = [-1] * n
    dist[target] = 0
    queue = deque([target])
    while queue:
        t = queue.popleft()
        for q in back[t]:
            if dist[q] < 0:
                dist[q] = dist[t] + 1
                queue.append(q)
    # cheapest letter choice per state in canonical letter order
    nxt = [None] * n
    for q in range(n):
        if dist[q] > 0:
            for x in range(k):
                t = rows[q][x]
                if dist[t] == dist[q] - 1:
                    nxt[q] = (x, t)
                    break
    words = [None] * n
    for q in sorted(range(n), key=lambda q: dist[q]):
        if dist[q] == 0:
            words[q] = ()
        elif dist[q] > 0:
            x, t = nxt[q]
            words[q] = (x,) + words[t]
    return words


def build_synchronizing_word(waa):
    """Greedy synchronizing word for a WAA, or None if it is not synchronizing.

    Each round appends a shortest word that drives one still-unsynchronized
    state (the earliest in topological order) into the sink, which removes at
    least one state from the current image.  The result has length at most
    ``(n-1)**2``; it is not necessarily a shortest synchronizing word.
    """
    cert = require_waa(waa)
    A = cert.automaton
    s = synchronizing_state(cert)
    if s is None:
        return None
    words = shortest_words_to(A, s)
    current = (1 << A.n) - 1
    sink_bit = 1 << s
    letters = []
    position = cert.position
    while current != sink_bit:
        pending = [q for q in _iter_bits(current & ~sink_bit)]
        q = min(pending, key=position.__getitem__)
        w = words[q]
        letters.extend(w)
        current = A.word_image_bits(current, w)
    return tuple(A.alphabet[x] for x in letters)


def _iter_bits(bits):
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def reachable_maximal_from(waa, S) -> StateSet:
    """Sinks reachable from some state of ``S``."""
    cert = require_waa(waa)
    A = cert.automaton
    S = A.states(S)
    rows = A.rows
    seen = set(S)
    stack = list(S)
    while stack:
        q = stack.pop()
        for t in rows[q]:
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return A.states(q for q in seen if all(t == q for t in rows[q]))
