"""SAT reductions to constrained synchronization of weakly acyclic automata.

Each clause becomes a strand of states ``q[i,1] .. q[i,n+1]``; reading the
strand letter for a literal of the clause at column ``j`` escapes to the sink
``qf``.  A reset letter collects every state at the strand heads (or in
``qf``), so a synchronizing word of the right shape encodes an assignment
satisfying every clause.

Three base constructions cover the nine NP-hard constraint languages, each
up to a renaming of the letters:

* ``CASE1`` -- reset letter ``a`` keeps column 1, kills the rest.
* ``CASE4`` -- an extra column 0 that only letter ``c`` leaves, so the reset
  can be read once, anywhere.
* ``CASE8`` -- column 0 left by the strand letter ``c``; ``a`` kills columns 2+.

The module also holds the SetTransporter reduction and a DIMACS reader.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from .core import Alphabet, SemiAutomaton, as_word, rename_letters
from .errors import (
    AlphabetMismatch,
    DegenerateFormula,
    EmptyInput,
    InvalidWitness,
    NotSatisfying,
    ParseError,
)
from .languages import a_sigma_star_b, reference_pdfa
from .constrained import verify_witness

__all__ = [
    "CnfFormula",
    "ReductionCase",
    "REDUCTION_CASES",
    "reduction_case",
    "reduce_sat",
    "assignment_to_word",
    "word_to_assignment",
    "reduce_transporter",
    "parse_dimacs",
    "format_dimacs",
    "brute_force_sat",
]


@dataclass(frozen=True)
class CnfFormula:
    """CNF over variables ``1..num_vars``; literals are signed ints as in DIMACS."""

    num_vars: int
    clauses: tuple

    def __post_init__(self):
        if self.num_vars < 1:
            raise DegenerateFormula("need at least one variable")
        clauses = []
        for c in self.clauses:
            lits = frozenset(int(l) for l in c)
            if not lits:
                raise DegenerateFormula("empty clause")
            for l in lits:
                if l == 0 or abs(l) > self.num_vars:
                    raise DegenerateFormula(f"literal {l} outside 1..{self.num_vars}")
                if -l in lits:
                    raise DegenerateFormula(f"clause {sorted(lits, key=abs)} contains x{abs(l)} and its negation")
            clauses.append(lits)
        object.__setattr__(self, "clauses", tuple(clauses))

    def satisfied_by(self, assignment) -> bool:
        """``assignment[j-1]`` is the value of variable ``j``."""
        return all(any((l > 0) == bool(assignment[abs(l) - 1]) for l in c) for c in self.clauses)


def brute_force_sat(phi: CnfFormula):
    """First satisfying assignment in lexicographic order (False < True), or None."""
    for bits in itertools.product((False, True), repeat=phi.num_vars):
        if phi.satisfied_by(bits):
            return bits
    return None


@dataclass(frozen=True)
class ReductionCase:
    """How to build hardness instances for one constraint language.

    ``renaming`` maps the base construction's letters a, b, c to the letters
    used in the output.  ``pad`` prepends a variable occurring in no clause,
    which lets the first strand letter be forced by the language.
    """

    target_language: str
    base: str
    renaming: tuple = (("a", "a"), ("b", "b"), ("c", "c"))
    pad: bool = False

    @property
    def letter_map(self) -> dict:
        return dict(self.renaming)


def _swap(x, y):
    m = {"a": "a", "b": "b", "c": "c"}
    m[x], m[y] = y, x
    return tuple(sorted(m.items()))


REDUCTION_CASES = {
    "a(b+c)*": ReductionCase("a(b+c)*", "CASE1"),
    "(a+b+c)(a+b)*": ReductionCase("(a+b+c)(a+b)*", "CASE1", _swap("a", "c")),
    "(a+b)(a+c)*": ReductionCase("(a+b)(a+c)*", "CASE1", _swap("a", "b")),
    "(a+b)*c(a+b)*": ReductionCase("(a+b)*c(a+b)*", "CASE4"),
    "a*b(a+c)*": ReductionCase("a*b(a+c)*", "CASE4", _swap("b", "c")),
    "a*(b+c)(a+b)*": ReductionCase("a*(b+c)(a+b)*", "CASE4"),
    # a second reset b after advancing with c would kill every strand, so the
    # column-0 construction is unsound here; a padded CASE1 forces the leading b
    "a*b(b+c)*": ReductionCase("a*b(b+c)*", "CASE1", pad=True),
    "(a+b)*c(b+c)*": ReductionCase("(a+b)*c(b+c)*", "CASE8"),
    "a*(b+c)(b+c)*": ReductionCase("a*(b+c)(b+c)*", "CASE1"),
}


def reduction_case(language: str) -> ReductionCase:
    try:
        return REDUCTION_CASES[language]
    except KeyError:
        raise KeyError(f"no reduction for {language!r}; choose one of {list(REDUCTION_CASES)}") from None


def _case(case) -> ReductionCase:
    return case if isinstance(case, ReductionCase) else reduction_case(case)


# (letter for x_j = True, letter for x_j = False, first column) per base
_STRAND = {"CASE1": ("c", "b", 1), "CASE4": ("b", "a", 0), "CASE8": ("b", "c", 0)}


def _base_automaton(phi: CnfFormula, base: str, pad: bool) -> SemiAutomaton:
    n = phi.num_vars + (1 if pad else 0)
    m = len(phi.clauses)
    true_letter, false_letter, first = _STRAND[base]
    cols = list(range(first, n + 2))
    names = [f"q{i},{j}" for i in range(1, m + 1) for j in cols] + ["qf"]
    index = {name: k for k, name in enumerate(names)}
    f = index["qf"]
    L = {"a": 0, "b": 1, "c": 2}
    rows = [[f, f, f] for _ in names]

    def q(i, j):
        return index[f"q{i},{j}"]

    for i, clause in enumerate(phi.clauses, start=1):
        for j in range(1, n + 1):
            var = j - 1 if pad else j
            here = q(i, j)
            nxt = q(i, j + 1)
            # the true-letter escapes on a positive literal, the false-letter on a negative one
            rows[here][L[true_letter]] = f if var in clause else nxt
            rows[here][L[false_letter]] = f if -var in clause else nxt
        last = q(i, n + 1)
        rows[last][L[true_letter]] = last
        rows[last][L[false_letter]] = last
        if base == "CASE1":
            rows[q(i, 1)][L["a"]] = q(i, 1)
        elif base == "CASE4":
            rows[q(i, 0)] = [q(i, 0), q(i, 0), q(i, 1)]
            rows[q(i, 1)][L["c"]] = q(i, 1)
        else:
            rows[q(i, 0)] = [q(i, 0), q(i, 0), q(i, 1)]
            rows[q(i, 1)][L["a"]] = q(i, 1)
    return SemiAutomaton(Alphabet("abc"), rows, names)


def reduce_sat(phi: CnfFormula, case):
    """Weakly acyclic automaton A and constraint B with: A synchronizes inside L(B)
    iff ``phi`` is satisfiable.  ``case`` is a ReductionCase or a language name."""
    case = _case(case)
    base = _base_automaton(phi, case.base, case.pad)
    A = rename_letters(base, case.letter_map, order="abc")
    return A, reference_pdfa(case.target_language)


def _prefix(case: ReductionCase):
    if case.base == "CASE1":
        return ("a", "b") if case.pad else ("a",)
    if case.base == "CASE4":
        return ("c",)
    # "ba" empties every column >= 1 before c moves column 0 to the strand heads
    return ("b", "a", "c")


def assignment_to_word(phi: CnfFormula, case, assignment) -> tuple:
    """Synchronizing word in the target language encoding a satisfying ``assignment``."""
    case = _case(case)
    assignment = tuple(bool(v) for v in assignment)
    if len(assignment) != phi.num_vars:
        raise NotSatisfying(f"assignment has {len(assignment)} values for {phi.num_vars} variables")
    if not phi.satisfied_by(assignment):
        raise NotSatisfying("assignment does not satisfy the formula")
    true_letter, false_letter, _ = _STRAND[case.base]
    base_word = _prefix(case) + tuple(true_letter if v else false_letter for v in assignment)
    ren = case.letter_map
    return tuple(ren[x] for x in base_word)


def word_to_assignment(phi: CnfFormula, case, w) -> tuple:
    """Read a satisfying assignment off a synchronizing word of the reduced instance.

    The strand part starts after the leading resets (CASE1) or after the first
    column-0 exit letter (CASE4, CASE8); its first ``n`` letters are decoded
    and variables it does not reach default to False.
    """
    case = _case(case)
    A, B = reduce_sat(phi, case)
    w = as_word(w)
    try:
        ok = verify_witness(B, A, w)
    except AlphabetMismatch as exc:
        raise InvalidWitness(str(exc)) from None
    if not ok:
        raise InvalidWitness("word is not a synchronizing word inside the constraint language")
    inv = {v: k for k, v in case.letter_map.items()}
    base_word = [inv[x] for x in w]
    if case.base == "CASE1":
        i = 0
        while i < len(base_word) and base_word[i] == "a":
            i += 1
        strand = base_word[i:]
        if case.pad:
            strand = strand[1:]
    else:
        if "c" not in base_word:
            raise InvalidWitness("word never leaves column 0")
        strand = base_word[base_word.index("c") + 1:]
    true_letter, _, _ = _STRAND[case.base]
    values = [x == true_letter for x in strand[: phi.num_vars]]
    values += [False] * (phi.num_vars - len(values))
    values = tuple(values)
    if not phi.satisfied_by(values):
        raise InvalidWitness("decoded assignment does not satisfy the formula")
    return values


def _fresh(base: str, taken) -> str:
    name, k = base, 1
    while name in taken:
        name = f"{base}{k}"
        k += 1
    return name


def reduce_transporter(A: SemiAutomaton, S, T):
    """Reduce SetTransporter(A, S, T) to constrained synchronization.

    Adds letters alpha, beta and a sink. alpha sends states outside S to the sink,
    beta sends states of T to the sink; the constraint is ``alpha Σ* beta`` with Σ
    the original alphabet.  Some ``w`` maps S into T iff ``alpha w beta``
    synchronizes the new automaton.  Weak acyclicity is preserved.
    """
    S, T = A.states(S), A.states(T)
    if not S or not T:
        raise EmptyInput("reduce_transporter needs nonempty S and T; decide empty cases directly")
    alpha = _fresh("__alpha", set(A.alphabet))
    beta = _fresh("__beta", set(A.alphabet) | {alpha})
    sink_name = _fresh("__sink", set(A.names))
    n, k = A.n, A.k
    rows = []
    for q, row in enumerate(A.rows):
        rows.append(list(row) + [q if q in S else n, n if q in T else q])
    rows.append([n] * (k + 2))
    letters = tuple(A.alphabet) + (alpha, beta)
    A2 = SemiAutomaton(Alphabet(letters), rows, tuple(A.names) + (sink_name,))
    return A2, a_sigma_star_b(A2.alphabet, alpha, beta)


_HEADER = re.compile(r"^p\s+cnf\s+(\d+)\s+(\d+)\s*$")


def parse_dimacs(text: str, source=None) -> CnfFormula:
    """Parse the DIMACS CNF subset: ``c`` comments, a ``p cnf V C`` header, and
    clauses of signed integers terminated by ``0`` (possibly across lines)."""
    num_vars = num_clauses = None
    clauses, current = [], []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("c") or stripped.startswith("%"):
            continue
        if stripped.startswith("p"):
            m = _HEADER.match(stripped)
            if not m:
                raise ParseError("malformed header, expected 'p cnf <vars> <clauses>'", lineno, 1, source)
            if num_vars is not None:
                raise ParseError("duplicate header", lineno, 1, source)
            num_vars, num_clauses = int(m.group(1)), int(m.group(2))
            continue
        if num_vars is None:
            raise ParseError("clause before 'p cnf' header", lineno, 1, source)
        end = 0
        for tok in line.split():
            start = line.index(tok, end)
            end = start + len(tok)
            col = start + 1
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"expected an integer literal, got {tok!r}", lineno, col, source) from None
            if abs(lit) > num_vars:
                raise ParseError(f"literal {lit} exceeds declared {num_vars} variables", lineno, col, source)
            if lit == 0:
                clauses.append(current)
                current = []
            else:
                current.append(lit)
    if num_vars is None:
        raise ParseError("missing 'p cnf' header", None, None, source)
    if current:
        clauses.append(current)
    if num_clauses is not None and len(clauses) != num_clauses:
        raise ParseError(f"header declares {num_clauses} clauses, found {len(clauses)}", None, None, source)
    return CnfFormula(num_vars, tuple(clauses))


def format_dimacs(phi: CnfFormula) -> str:
    lines = [f"p cnf {phi.num_vars} {len(phi.clauses)}"]
    for c in phi.clauses:
        lines.append(" ".join(str(l) for l in sorted(c, key=lambda l: (abs(l), l))) + " 0")
    return "\n".join(lines) + "\n"
