"""Built-in constraint languages, minimization and language equivalence.

The twelve two-state ternary languages whose constrained synchronization
problem is PSPACE-complete for general input automata are shipped as PDFAs.
Nine of them stay NP-complete for weakly acyclic input automata; for
``(a+b)*c``, ``(a+b)*ca*`` and ``(a+b)*cc*`` the problem becomes polynomial.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import permutations

from .core import Alphabet, ConstraintPdfa
from .errors import AlphabetMismatch, UnsupportedForClassification

__all__ = [
    "PSPACE_LANGUAGES",
    "NP_HARD_LANGUAGES",
    "POLY_LANGUAGES",
    "BUILTIN_NAMES",
    "ConstraintLabel",
    "reference_pdfa",
    "builtin_constraint",
    "sigma_star",
    "a_sigma_star_b",
    "minimize",
    "trim_size",
    "equivalent",
    "classify_constraint",
]

# (loops at start state, letters start -> 1, loops at state 1); state 1 accepts
_SPECS = {
    "a(b+c)*": ("", "a", "bc"),
    "(a+b+c)(a+b)*": ("", "abc", "ab"),
    "(a+b)(a+c)*": ("", "ab", "ac"),
    "(a+b)*c": ("ab", "c", ""),
    "(a+b)*ca*": ("ab", "c", "a"),
    "(a+b)*c(a+b)*": ("ab", "c", "ab"),
    "(a+b)*cc*": ("ab", "c", "c"),
    "a*b(a+c)*": ("a", "b", "ac"),
    "a*(b+c)(a+b)*": ("a", "bc", "ab"),
    "a*b(b+c)*": ("a", "b", "bc"),
    "(a+b)*c(b+c)*": ("ab", "c", "bc"),
    "a*(b+c)(b+c)*": ("a", "bc", "bc"),
}

PSPACE_LANGUAGES = tuple(_SPECS)
POLY_LANGUAGES = ("(a+b)*c", "(a+b)*ca*", "(a+b)*cc*")
NP_HARD_LANGUAGES = tuple(x for x in PSPACE_LANGUAGES if x not in POLY_LANGUAGES)
BUILTIN_NAMES = PSPACE_LANGUAGES + ("sigma-star", "a-sigma-star-b")

P = "P"
NP_COMPLETE = "NP-complete"
PSPACE_COMPLETE = "PSPACE-complete"


@dataclass(frozen=True)
class ConstraintLabel:
    """Complexity of constrained synchronization for a constraint language.

    ``language_id`` is the matched reference expression (over a, b, c) or
    ``"Other"``; ``renaming`` maps the reference letters a, b, c to the
    constraint's own letters when a match was found.
    """

    language_id: str
    general_complexity: str
    waa_complexity: str
    renaming: tuple = ()

    def as_dict(self):
        return {
            "language": self.language_id,
            "general": self.general_complexity,
            "waa": self.waa_complexity,
            "renaming": dict(self.renaming) if self.renaming else None,
        }


def reference_pdfa(name: str, alphabet=None) -> ConstraintPdfa:
    """One of the twelve reference languages as a two-state PDFA over a, b, c."""
    loop0, step, loop1 = _SPECS[name]
    alphabet = Alphabet("abc") if alphabet is None else alphabet
    if not isinstance(alphabet, Alphabet):
        alphabet = Alphabet(alphabet)
    if set(alphabet) != set("abc"):
        raise AlphabetMismatch(f"{name} is defined over the letters a, b, c; got {list(alphabet)}")
    mu = [[None] * 3 for _ in range(2)]
    for x in loop0:
        mu[0][alphabet.index(x)] = 0
    for x in step:
        mu[0][alphabet.index(x)] = 1
    for x in loop1:
        mu[1][alphabet.index(x)] = 1
    return ConstraintPdfa(alphabet, mu, 0, [1])


def sigma_star(alphabet) -> ConstraintPdfa:
    alphabet = alphabet if isinstance(alphabet, Alphabet) else Alphabet(alphabet)
    return ConstraintPdfa(alphabet, [[0] * len(alphabet)], 0, [0])


def a_sigma_star_b(alphabet, first=None, last=None) -> ConstraintPdfa:
    """``first · Σ* · last`` where Σ is every other letter.

    By default ``first``/``last`` are the last two letters of the alphabet,
    which is where the transporter reduction puts its fresh letters.
    """
    alphabet = alphabet if isinstance(alphabet, Alphabet) else Alphabet(alphabet)
    if len(alphabet) < 2:
        raise AlphabetMismatch("a-sigma-star-b needs at least two letters")
    first = alphabet[-2] if first is None else first
    last = alphabet[-1] if last is None else last
    f, l = alphabet.index(first), alphabet.index(last)
    if f == l:
        raise AlphabetMismatch("first and last letters must differ")
    mu = [[None] * len(alphabet) for _ in range(3)]
    mu[0][f] = 1
    for x in range(len(alphabet)):
        if x not in (f, l):
            mu[1][x] = 1
    mu[1][l] = 2
    return ConstraintPdfa(alphabet, mu, 0, [2])


def builtin_constraint(name: str, alphabet=None) -> ConstraintPdfa:
    """Constraint PDFA for a built-in name.

    ``sigma-star`` and ``a-sigma-star-b`` depend on the input alphabet, which
    must then be given.
    """
    if name in _SPECS:
        return reference_pdfa(name, alphabet)
    if name in ("sigma-star", "a-sigma-star-b"):
        if alphabet is None:
            raise ValueError(f"{name} needs the input automaton's alphabet")
        return sigma_star(alphabet) if name == "sigma-star" else a_sigma_star_b(alphabet)
    raise KeyError(f"unknown constraint name {name!r}; known: {', '.join(BUILTIN_NAMES)}")


def _complete(B: ConstraintPdfa):
    """Reachable part of B completed with a dead state; returns (rows, accepting flags)."""
    k = len(B.alphabet)
    index = {B.initial: 0}
    order = [B.initial]
    queue = deque([B.initial])
    dead = None
    rows = []
    while queue:
        p = queue.popleft()
        row = []
        for x in range(k):
            t = B.step(p, x)
            if t is None:
                if dead is None:
                    dead = -1
                row.append(-1)
                continue
            if t not in index:
                index[t] = len(order)
                order.append(t)
                queue.append(t)
            row.append(index[t])
        rows.append(row)
    acc = [p in B.accepting for p in order]
    if dead is not None:
        d = len(rows)
        rows = [[d if t == -1 else t for t in row] for row in rows]
        rows.append([d] * k)
        acc.append(False)
    return rows, acc


def minimize(B: ConstraintPdfa):
    """Minimal complete DFA of L(B) by partition refinement.

    Returns ``(rows, accepting, initial)`` with state 0 initial and states
    numbered in breadth-first order, so equal languages over the same
    alphabet give identical results.
    """
    rows, acc = _complete(B)
    block = [1 if a else 0 for a in acc]
    while True:
        sig = {}
        new = []
        for q, row in enumerate(rows):
            key = (block[q],) + tuple(block[t] for t in row)
            new.append(sig.setdefault(key, len(sig)))
        if len(sig) == len(set(block)):
            block = new
            break
        block = new
    # renumber blocks in BFS order from the initial state
    number = {block[0]: 0}
    queue = deque([0])
    reps = {block[0]: 0}
    while queue:
        q = queue.popleft()
        for t in rows[q]:
            b = block[t]
            if b not in number:
                number[b] = len(number)
                reps[b] = t
                queue.append(t)
    m = len(number)
    out_rows = [None] * m
    out_acc = [False] * m
    for b, i in number.items():
        q = reps[b]
        out_rows[i] = tuple(number[block[t]] for t in rows[q])
        out_acc[i] = acc[q]
    return tuple(out_rows), tuple(out_acc), 0


def trim_size(B: ConstraintPdfa) -> int:
    """State count of the minimal partial DFA for L(B) (dead state dropped)."""
    rows, acc, _ = minimize(B)
    live = {q for q, a in enumerate(acc) if a}
    changed = True
    while changed:
        changed = False
        for q, row in enumerate(rows):
            if q not in live and any(t in live for t in row):
                live.add(q)
                changed = True
    return max(len(live), 1)


def equivalent(B1: ConstraintPdfa, B2: ConstraintPdfa) -> bool:
    """Language equality via emptiness of the symmetric difference of the products."""
    if not B1.alphabet.same_letters(B2.alphabet):
        raise AlphabetMismatch("constraints over different alphabets")
    r1, a1 = _complete(B1)
    r2, a2 = _complete(B2)
    cols2 = [B2.alphabet.index(x) for x in B1.alphabet]
    seen = {(0, 0)}
    queue = deque([(0, 0)])
    while queue:
        p, q = queue.popleft()
        if a1[p] != a2[q]:
            return False
        for x in range(len(B1.alphabet)):
            nxt = (r1[p][x], r2[q][cols2[x]])
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return True


def classify_constraint(B: ConstraintPdfa) -> ConstraintLabel:
    """Complexity label of L(B)-constrained synchronization.

    Covers constraints whose minimal PDFA has at most two states over at most
    three letters.  Anything larger raises
    :class:`UnsupportedForClassification`; it can still be solved exhaustively.
    """
    size = trim_size(B)
    k = len(B.alphabet)
    if size <= 1 or (size == 2 and k <= 2):
        return ConstraintLabel("Other", P, P)
    if size > 2 or k > 3:
        raise UnsupportedForClassification(
            f"classification covers at most 2 states and 3 letters; got {size} states, {k} letters"
        )
    for name in PSPACE_LANGUAGES:
        for image in permutations(B.alphabet.letters):
            renaming = dict(zip("abc", image))
            ref = reference_pdfa(name)
            mu = [[None] * 3 for _ in range(2)]
            for p in range(2):
                for x, letter in enumerate("abc"):
                    mu[p][B.alphabet.index(renaming[letter])] = ref.step(p, x)
            candidate = ConstraintPdfa(B.alphabet, mu, 0, [1])
            if equivalent(B, candidate):
                waa = P if name in POLY_LANGUAGES else NP_COMPLETE
                return ConstraintLabel(name, PSPACE_COMPLETE, waa, tuple(sorted(renaming.items())))
    return ConstraintLabel("Other", P, P)
