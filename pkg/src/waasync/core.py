"""Alphabets, complete semi-automata, partial constraint automata, state sets and words.

States are dense indices ``0..n-1``; names are only labels for I/O.  Letters
are short strings, and the order in which an :class:`Alphabet` lists them is
the canonical order used for every lexicographic tie-break in the package.
Words are plain tuples of letters.
"""
from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import AlphabetMismatch, EmptyAlphabet

__all__ = [
    "Alphabet",
    "StateSet",
    "SemiAutomaton",
    "ConstraintPdfa",
    "as_word",
    "format_word",
    "image",
    "preimage",
    "pdfa_accepts",
    "restrict_alphabet",
    "rename_letters",
    "is_sink",
]

Word = tuple  # tuple[str, ...]


class Alphabet:
    """Ordered set of distinct letters."""

    def __init__(self, letters: Iterable[str]):
        letters = tuple(str(x) for x in letters)
        if not letters:
            raise EmptyAlphabet("alphabet must contain at least one letter")
        index = {}
        for i, x in enumerate(letters):
            if not x or any(ch.isspace() for ch in x) or x.startswith("#"):
                raise AlphabetMismatch(f"invalid letter token {x!r}")
            if x in index:
                raise AlphabetMismatch(f"duplicate letter {x!r}")
            index[x] = i
        self._letters = letters
        self._index = index

    @property
    def letters(self) -> tuple:
        return self._letters

    def index(self, letter: str) -> int:
        try:
            return self._index[letter]
        except KeyError:
            raise AlphabetMismatch(f"letter {letter!r} not in alphabet {list(self._letters)}") from None

    def encode(self, word) -> list:
        return [self.index(x) for x in as_word(word)]

    def same_letters(self, other: "Alphabet") -> bool:
        return set(self._letters) == set(other._letters)

    def __len__(self):
        return len(self._letters)

    def __iter__(self):
        return iter(self._letters)

    def __contains__(self, letter):
        return letter in self._index

    def __getitem__(self, i):
        return self._letters[i]

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self._letters == other._letters

    def __hash__(self):
        return hash(self._letters)

    def __repr__(self):
        return f"Alphabet({list(self._letters)!r})"


def as_word(w) -> Word:
    """Normalise ``w`` to a tuple of letters.

    Strings containing whitespace are split on it; other strings are split into
    characters, which is the right reading whenever every letter is a single
    character.
    """
    if isinstance(w, str):
        if any(ch.isspace() for ch in w):
            return tuple(w.split())
        return tuple(w)
    return tuple(w)


def format_word(word) -> str:
    word = as_word(word)
    if all(len(x) == 1 for x in word):
        return "".join(word)
    return " ".join(word)


class StateSet:
    """Immutable subset of ``{0, ..., n-1}`` stored as an int bitset."""

    __slots__ = ("n", "bits")

    def __init__(self, n: int, bits: int = 0):
        if bits < 0 or bits >> n:
            raise ValueError(f"bitset {bits:#x} has members outside 0..{n - 1}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("StateSet is immutable")

    @classmethod
    def of(cls, n: int, states: Iterable[int]) -> "StateSet":
        bits = 0
        for q in states:
            q = int(q)
            if not 0 <= q < n:
                raise ValueError(f"state {q} out of range 0..{n - 1}")
            bits |= 1 << q
        return cls(n, bits)

    @classmethod
    def full(cls, n: int) -> "StateSet":
        return cls(n, (1 << n) - 1)

    @classmethod
    def empty(cls, n: int) -> "StateSet":
        return cls(n, 0)

    def _check(self, other):
        if not isinstance(other, StateSet):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(f"state sets over {self.n} and {other.n} states cannot be combined")
        return other

    def __or__(self, other):
        other = self._check(other)
        return StateSet(self.n, self.bits | other.bits)

    def __and__(self, other):
        other = self._check(other)
        return StateSet(self.n, self.bits & other.bits)

    def __sub__(self, other):
        other = self._check(other)
        return StateSet(self.n, self.bits & ~other.bits)

    def __xor__(self, other):
        other = self._check(other)
        return StateSet(self.n, self.bits ^ other.bits)

    def complement(self) -> "StateSet":
        return StateSet(self.n, ((1 << self.n) - 1) & ~self.bits)

    def __le__(self, other):
        other = self._check(other)
        return self.bits & ~other.bits == 0

    def __lt__(self, other):
        return self <= other and self.bits != other.bits

    def __ge__(self, other):
        return self._check(other) <= self

    def __gt__(self, other):
        return self._check(other) < self

    issubset = __le__

    def __eq__(self, other):
        if not isinstance(other, StateSet):
            return NotImplemented
        return self.n == other.n and self.bits == other.bits

    def __hash__(self):
        return hash((self.n, self.bits))

    def __len__(self):
        return self.bits.bit_count()

    def __bool__(self):
        return self.bits != 0

    def __contains__(self, q):
        return 0 <= q < self.n and (self.bits >> q) & 1 == 1

    def __iter__(self):
        return iter(_members(self.bits))

    def __repr__(self):
        return f"StateSet({sorted(self)})"


def _members(bits: int) -> list:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


# above this many states the per-letter byte tables cost more than they save
_TABLE_LIMIT = 64


class SemiAutomaton:
    """Complete deterministic transition system ``(alphabet, Q, delta)``.

    ``delta[q, x]`` is the successor of state ``q`` under the letter with index
    ``x``.  Instances are immutable; the transition array is read-only.
    """

    def __init__(self, alphabet, delta, names: Sequence[str] | None = None):
        if not isinstance(alphabet, Alphabet):
            alphabet = Alphabet(alphabet)
        delta = np.array(delta, dtype=np.int64)
        if delta.ndim != 2 or delta.shape[0] < 1 or delta.shape[1] != len(alphabet):
            raise ValueError(
                f"transition table must have shape (n >= 1, {len(alphabet)}), got {delta.shape}"
            )
        n = delta.shape[0]
        if delta.size and (delta.min() < 0 or delta.max() >= n):
            raise ValueError("transition target out of range")
        if names is None:
            names = tuple(str(q) for q in range(n))
        else:
            names = tuple(str(x) for x in names)
            if len(names) != n or len(set(names)) != n:
                raise ValueError("state names must be n distinct labels")
        delta.setflags(write=False)
        self._alphabet = alphabet
        self._delta = delta
        self._names = names

    @classmethod
    def from_transitions(cls, letters, states, transitions) -> "SemiAutomaton":
        """Build from ``{(state_name, letter): state_name}``; every pair must be present."""
        alphabet = letters if isinstance(letters, Alphabet) else Alphabet(letters)
        states = [str(s) for s in states]
        pos = {s: i for i, s in enumerate(states)}
        table = [[-1] * len(alphabet) for _ in states]
        for (src, letter), dst in transitions.items():
            table[pos[str(src)]][alphabet.index(letter)] = pos[str(dst)]
        for q, row in enumerate(table):
            for x, t in enumerate(row):
                if t < 0:
                    raise ValueError(f"missing transition for ({states[q]}, {alphabet[x]})")
        return cls(alphabet, table, states)

    @property
    def alphabet(self) -> Alphabet:
        return self._alphabet

    @property
    def delta(self) -> np.ndarray:
        return self._delta

    @property
    def names(self) -> tuple:
        return self._names

    @property
    def n(self) -> int:
        return self._delta.shape[0]

    @property
    def k(self) -> int:
        return self._delta.shape[1]

    @cached_property
    def rows(self) -> list:
        """Transition table as nested Python lists (faster scalar access)."""
        return self._delta.tolist()

    @cached_property
    def _name_index(self) -> dict:
        return {s: i for i, s in enumerate(self._names)}

    def state(self, name) -> int:
        """Index of a state given its name (or its index)."""
        if isinstance(name, (int, np.integer)):
            if not 0 <= name < self.n:
                raise ValueError(f"state {name} out of range")
            return int(name)
        try:
            return self._name_index[str(name)]
        except KeyError:
            raise ValueError(f"unknown state {name!r}") from None

    def states(self, members=None) -> StateSet:
        """Coerce ``members`` (names, indices or a StateSet) into a StateSet; None means Q."""
        if members is None:
            return StateSet.full(self.n)
        if isinstance(members, StateSet):
            if members.n != self.n:
                raise ValueError(f"state set over {members.n} states used with {self.n}-state automaton")
            return members
        return StateSet.of(self.n, (self.state(s) for s in members))

    def step(self, q: int, x: int) -> int:
        return self.rows[q][x]

    def run(self, q: int, word) -> int:
        rows = self.rows
        for x in self._alphabet.encode(word):
            q = rows[q][x]
        return q

    @cached_property
    def _tables(self):
        n, rows = self.n, self.rows
        tables = []
        for x in range(self.k):
            target = [1 << rows[q][x] for q in range(n)]
            per_chunk = []
            for base in range(0, n, 8):
                t = [0] * 256
                for m in range(1, 256):
                    low = (m & -m).bit_length() - 1
                    q = base + low
                    t[m] = t[m & (m - 1)] | (target[q] if q < n else 0)
                per_chunk.append(t)
            tables.append(per_chunk)
        return tables

    def image_bits(self, bits: int, x: int) -> int:
        """Image of the bitset ``bits`` under the letter with index ``x``."""
        out = 0
        if self.n <= _TABLE_LIMIT:
            chunks = self._tables[x]
            c = 0
            while bits:
                out |= chunks[c][bits & 255]
                bits >>= 8
                c += 1
            return out
        rows = self.rows
        while bits:
            low = bits & -bits
            out |= 1 << rows[low.bit_length() - 1][x]
            bits ^= low
        return out

    def word_image_bits(self, bits: int, xs) -> int:
        for x in xs:
            bits = self.image_bits(bits, x)
        return bits

    def preimage_bits(self, bits: int, x: int) -> int:
        out = 0
        for q, row in enumerate(self.rows):
            if (bits >> row[x]) & 1:
                out |= 1 << q
        return out

    def __eq__(self, other):
        if not isinstance(other, SemiAutomaton):
            return NotImplemented
        return (
            self._alphabet == other._alphabet
            and self._names == other._names
            and np.array_equal(self._delta, other._delta)
        )

    def __hash__(self):
        return hash((self._alphabet, self._names, self._delta.tobytes()))

    def __repr__(self):
        return f"SemiAutomaton(n={self.n}, alphabet={list(self._alphabet)!r})"


class ConstraintPdfa:
    """Partial DFA ``(alphabet, P, mu, p0, F)`` used as a constraint.

    ``mu[p][x]`` is a state index or ``None`` where the transition is undefined.
    """

    def __init__(self, alphabet, mu, initial: int = 0, accepting=(), names=None):
        if not isinstance(alphabet, Alphabet):
            alphabet = Alphabet(alphabet)
        k = len(alphabet)
        rows = []
        for row in mu:
            row = tuple(None if t is None or t < 0 else int(t) for t in row)
            if len(row) != k:
                raise ValueError(f"each PDFA row needs {k} entries")
            rows.append(row)
        n = len(rows)
        if n < 1:
            raise ValueError("constraint automaton needs at least one state")
        for row in rows:
            for t in row:
                if t is not None and not 0 <= t < n:
                    raise ValueError("PDFA transition target out of range")
        if not 0 <= initial < n:
            raise ValueError("initial state out of range")
        accepting = frozenset(int(p) for p in accepting)
        if any(not 0 <= p < n for p in accepting):
            raise ValueError("accepting state out of range")
        if names is None:
            names = tuple(str(p) for p in range(n))
        else:
            names = tuple(str(x) for x in names)
            if len(names) != n or len(set(names)) != n:
                raise ValueError("state names must be n distinct labels")
        self._alphabet = alphabet
        self._mu = tuple(rows)
        self._initial = int(initial)
        self._accepting = accepting
        self._names = names

    @classmethod
    def from_transitions(cls, letters, states, transitions, initial, accepting) -> "ConstraintPdfa":
        alphabet = letters if isinstance(letters, Alphabet) else Alphabet(letters)
        states = [str(s) for s in states]
        pos = {s: i for i, s in enumerate(states)}
        table = [[None] * len(alphabet) for _ in states]
        for (src, letter), dst in transitions.items():
            table[pos[str(src)]][alphabet.index(letter)] = pos[str(dst)]
        return cls(alphabet, table, pos[str(initial)], [pos[str(p)] for p in accepting], states)

    @property
    def alphabet(self) -> Alphabet:
        return self._alphabet

    @property
    def mu(self) -> tuple:
        return self._mu

    @property
    def initial(self) -> int:
        return self._initial

    @property
    def accepting(self) -> frozenset:
        return self._accepting

    @property
    def names(self) -> tuple:
        return self._names

    @property
    def n(self) -> int:
        return len(self._mu)

    def step(self, p: int, x: int):
        return self._mu[p][x]

    def __eq__(self, other):
        if not isinstance(other, ConstraintPdfa):
            return NotImplemented
        return (
            self._alphabet == other._alphabet
            and self._mu == other._mu
            and self._initial == other._initial
            and self._accepting == other._accepting
            and self._names == other._names
        )

    def __hash__(self):
        return hash((self._alphabet, self._mu, self._initial, self._accepting))

    def __repr__(self):
        return f"ConstraintPdfa(n={self.n}, alphabet={list(self._alphabet)!r})"


def image(A: SemiAutomaton, S, w) -> StateSet:
    """``delta(S, w)``: the set of states reached from ``S`` by reading ``w``."""
    S = A.states(S)
    xs = A.alphabet.encode(w)
    return StateSet(A.n, A.word_image_bits(S.bits, xs))


def preimage(A: SemiAutomaton, S, x: str) -> StateSet:
    """``{q : delta(q, x) in S}`` for a single letter ``x``."""
    S = A.states(S)
    return StateSet(A.n, A.preimage_bits(S.bits, A.alphabet.index(x)))


def pdfa_accepts(B: ConstraintPdfa, w) -> bool:
    p = B.initial
    for x in B.alphabet.encode(w):
        p = B.step(p, x)
        if p is None:
            return False
    return p in B.accepting


def restrict_alphabet(A: SemiAutomaton, letters) -> SemiAutomaton:
    """Keep only the transitions labelled by ``letters`` (in the order given)."""
    letters = as_word(letters) if isinstance(letters, str) else tuple(letters)
    if not letters:
        raise EmptyAlphabet("cannot restrict to an empty alphabet")
    cols = [A.alphabet.index(x) for x in letters]
    return SemiAutomaton(Alphabet(letters), A.delta[:, cols], A.names)


def rename_letters(A, mapping: dict, order=None):
    """Rename letters of a SemiAutomaton or ConstraintPdfa.

    ``mapping`` sends old letter -> new letter and must be injective; letters it
    does not mention keep their name.  The result lists its letters in ``order``
    if given, otherwise in the renamed original order.
    """
    new = [mapping.get(x, x) for x in A.alphabet]
    if len(set(new)) != len(new):
        raise AlphabetMismatch(f"renaming {mapping} is not injective on {list(A.alphabet)}")
    order = tuple(new) if order is None else tuple(order)
    if sorted(order) != sorted(new):
        raise AlphabetMismatch(f"order {list(order)} is not a permutation of {new}")
    cols = [new.index(x) for x in order]
    if isinstance(A, SemiAutomaton):
        return SemiAutomaton(Alphabet(order), A.delta[:, cols], A.names)
    mu = [[row[c] for c in cols] for row in A.mu]
    return ConstraintPdfa(Alphabet(order), mu, A.initial, A.accepting, A.names)


def is_sink(A: SemiAutomaton, q) -> bool:
    q = A.state(q)
    return all(t == q for t in A.rows[q])
