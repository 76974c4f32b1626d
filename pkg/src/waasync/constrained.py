"""Constrained synchronization: find a synchronizing word inside L(B).

``solve_generic`` is exact for any input automaton: breadth-first search over
pairs (constraint state, image of Q).  For weakly acyclic inputs and the
constraints ``(a+b)*c``, ``(a+b)*ca*`` and ``(a+b)*cc*`` (up to renaming of
letters) the polynomial solvers reduce the question to Sync-Into-Subset on the
{a, b}-restriction.  ``dispatch_solve`` picks the right route.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import comb

from .core import ConstraintPdfa, SemiAutomaton, StateSet, image, pdfa_accepts, restrict_alphabet
from .errors import AlphabetMismatch, InstanceTooLarge, UnsupportedForClassification
from .languages import POLY_LANGUAGES, ConstraintLabel, classify_constraint, equivalent, sigma_star
from .subset import DEFAULT_MAX_STATES, sync_into_subset
from .waa import (
    WaaCertificate,
    _certificate,
    build_synchronizing_word,
    check_weakly_acyclic,
    require_waa,
    synchronizing_state,
)

__all__ = [
    "shortest_bound",
    "witness_length_bound",
    "verify_witness",
    "solve_generic",
    "solve_suffix_c",
    "solve_c_then_tail",
    "SolveResult",
    "dispatch_solve",
]


def shortest_bound(waa, B: ConstraintPdfa) -> int:
    """``|P| * n(n-1)/2``, the quadratic length estimate for constrained synchronizing words.

    This undercounts by up to ``|P| - 1`` letters (the stretch after the last
    change of the image); see :func:`witness_length_bound` for a sound bound.
    """
    cert = require_waa(waa)
    return B.n * comb(cert.automaton.n, 2)


def witness_length_bound(waa, B: ConstraintPdfa) -> int:
    """``|P| * n(n-1)/2 + |P| - 1``: a sound upper bound on the length of a
    shortest synchronizing word in L(B) for a weakly acyclic input.

    At most ``n(n-1)/2`` letters change the image of Q, and between two
    changes (and before the first, after the last) a shortest word cannot
    repeat a constraint state.
    """
    cert = require_waa(waa)
    return B.n * comb(cert.automaton.n, 2) + B.n - 1


def _check_alphabets(B: ConstraintPdfa, A: SemiAutomaton):
    if not B.alphabet.same_letters(A.alphabet):
        raise AlphabetMismatch(
            f"constraint alphabet {list(B.alphabet)} differs from automaton alphabet {list(A.alphabet)}"
        )


def verify_witness(B: ConstraintPdfa, A: SemiAutomaton, w) -> bool:
    """True iff ``w`` is in L(B) and synchronizes A."""
    _check_alphabets(B, A)
    return pdfa_accepts(B, w) and len(image(A, None, w)) == 1


def _product_bfs(B, A, max_states):
    if max_states is not None and A.n > max_states:
        raise InstanceTooLarge(A.n, max_states)
    _check_alphabets(B, A)
    k = A.k
    bcol = [B.alphabet.index(x) for x in A.alphabet]
    mu = [[row[c] for c in bcol] for row in B.mu]
    accepting = B.accepting
    width = max(B.n - 1, 1).bit_length()
    start_S = (1 << A.n) - 1
    start = (start_S << width) | B.initial

    def accept(p, S):
        return p in accepting and S & (S - 1) == 0

    if accept(B.initial, start_S):
        return (), 1
    parent = {start: None}
    queue = deque([start])
    image_bits = A.image_bits
    pmask = (1 << width) - 1
    while queue:
        key = queue.popleft()
        p, S = key & pmask, key >> width
        row = mu[p]
        for x in range(k):
            q = row[x]
            if q is None:
                continue
            T = image_bits(S, x)
            nkey = (T << width) | q
            if nkey in parent:
                continue
            parent[nkey] = (key, x)
            if accept(q, T):
                word = []
                node = nkey
                while parent[node] is not None:
                    node, letter = parent[node]
                    word.append(letter)
                word.reverse()
                return tuple(A.alphabet[x] for x in word), len(parent)
            queue.append(nkey)
    return None, len(parent)


def solve_generic(B: ConstraintPdfa, A: SemiAutomaton, max_states=DEFAULT_MAX_STATES):
    """Shortest, lexicographically least synchronizing word of A in L(B), or None.

    Exponential in general; refuses automata with more than ``max_states``
    states unless the guard is lifted (``max_states=None``).
    """
    word, _ = _generic_with_stats(B, A, max_states)
    return word


def _generic_with_stats(B, A, max_states):
    word, explored = _product_bfs(B, A, max_states)
    if word is not None:
        cert = check_weakly_acyclic(A)
        if cert:
            bound = witness_length_bound(cert, B)
            assert len(word) <= bound, f"witness of length {len(word)} exceeds bound {bound}"
    return word, explored


def _roles(A: SemiAutomaton, roles):
    roles = tuple(roles) if roles is not None else ("a", "b", "c")
    if len(roles) != 3 or len(set(roles)) != 3 or set(roles) != set(A.alphabet):
        raise AlphabetMismatch(
            f"polynomial solvers need a ternary automaton with letter roles {roles}; "
            f"got alphabet {list(A.alphabet)}"
        )
    return roles


def _restricted_cert(cert: WaaCertificate, letters) -> WaaCertificate:
    # the topological order stays valid on any sub-alphabet
    return _certificate(restrict_alphabet(cert.automaton, letters), cert.order)


def solve_suffix_c(waa, roles=None):
    """Synchronizing word in ``(a+b)*c`` for a weakly acyclic automaton, or None.

    ``roles`` names the automaton letters playing a, b and c (default the
    letters themselves).  With sink ``s`` and ``T = {q : delta(q, c) = s}``,
    a word exists iff the {a, b}-restriction can map Q into T.
    """
    cert = require_waa(waa)
    A = cert.automaton
    a, b, c = _roles(A, roles)
    s = synchronizing_state(cert)
    if s is None:
        return None
    T = StateSet(A.n, A.preimage_bits(1 << s, A.alphabet.index(c)))
    w = sync_into_subset(_restricted_cert(cert, (a, b)), None, T)
    if w is None:
        return None
    return w + (c,)


def solve_c_then_tail(waa, tail, roles=None):
    """Synchronizing word in ``(a+b)*c tail*`` for a weakly acyclic automaton, or None.

    ``tail`` is the letter playing a (language ``(a+b)*ca*``) or c (language
    ``(a+b)*cc*``).  For each ``i`` up to n the set ``S_i`` of states sent to
    the sink by ``tail^i`` is pulled back through c and tested as a
    Sync-Into-Subset target; the sets stop changing after n steps.
    """
    cert = require_waa(waa)
    A = cert.automaton
    a, b, c = _roles(A, roles)
    if tail not in (a, c):
        raise AlphabetMismatch(f"tail letter must be {a!r} or {c!r}, got {tail!r}")
    s = synchronizing_state(cert)
    if s is None:
        return None
    restricted = _restricted_cert(cert, (a, b))
    tx, cx = A.alphabet.index(tail), A.alphabet.index(c)
    S = 1 << s
    tried = set()
    for i in range(A.n + 1):
        T = A.preimage_bits(S, cx)
        if T not in tried:
            tried.add(T)
            w = sync_into_subset(restricted, None, StateSet(A.n, T))
            if w is not None:
                return w + (c,) + (tail,) * i
        nxt = A.preimage_bits(S, tx)
        if nxt == S:
            break
        S = nxt
    return None


@dataclass(frozen=True)
class SolveResult:
    decision: bool
    witness: tuple | None
    method: str
    label: ConstraintLabel | None
    states_explored: int


def dispatch_solve(B: ConstraintPdfa, A: SemiAutomaton, max_states=DEFAULT_MAX_STATES) -> SolveResult:
    """Decide L(B)-constrained synchronization of A by the cheapest exact route.

    Weakly acyclic inputs with a polynomial constraint (up to renaming) or
    with the unconstrained language go to the polynomial algorithms;
    everything else goes to :func:`solve_generic`.  Witnesses are verified
    before they are returned.
    """
    _check_alphabets(B, A)
    try:
        label = classify_constraint(B)
    except UnsupportedForClassification:
        label = None
    cert = check_weakly_acyclic(A)
    word = None
    method = None
    explored = A.n
    if cert and label is not None and label.language_id in POLY_LANGUAGES:
        ren = dict(label.renaming)
        roles = (ren["a"], ren["b"], ren["c"])
        if label.language_id == "(a+b)*c":
            word, method = solve_suffix_c(cert, roles), "poly/suffix-c"
        elif label.language_id == "(a+b)*ca*":
            word, method = solve_c_then_tail(cert, ren["a"], roles), "poly/c-then-a"
        else:
            word, method = solve_c_then_tail(cert, ren["c"], roles), "poly/c-then-c"
    elif cert and len(B.alphabet) == len(A.alphabet) and equivalent(B, sigma_star(B.alphabet)):
        word, method = build_synchronizing_word(cert), "waa/greedy"
    else:
        word, explored = _generic_with_stats(B, A, max_states)
        method = "generic"
    if word is not None and not verify_witness(B, A, word):
        raise AssertionError(f"solver {method} produced an invalid witness {word!r}")
    return SolveResult(word is not None, word, method, label, explored)
