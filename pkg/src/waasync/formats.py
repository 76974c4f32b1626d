"""Plain-text automaton files and JSON result records.

Automaton file format::

    # comment
    alphabet: a b c
    states: 0 1 2
    initial: 0          # constraint automata only
    accepting: 1        # constraint automata only
    0 a 1
    0 b 0
    ...

A semi-automaton file must list every (state, letter) pair exactly once; a
constraint file (one with ``initial:``) may leave pairs out.
"""
from __future__ import annotations

import json

from .core import Alphabet, ConstraintPdfa, SemiAutomaton, format_word
from .errors import AlphabetMismatch, ParseError

__all__ = [
    "SCHEMA_VERSION",
    "parse_automaton_file",
    "parse_semi_automaton",
    "parse_pdfa",
    "format_semi_automaton",
    "format_pdfa",
    "result_record",
    "dump_record",
]

SCHEMA_VERSION = 1
_HEADERS = ("alphabet", "states", "initial", "accepting")


def _tokens(line):
    """Whitespace tokens of a line (comment stripped) with their 1-based columns."""
    body = line.split("#", 1)[0]
    out = []
    col = 0
    for tok in body.split():
        col = body.index(tok, col)
        out.append((tok, col + 1))
        col += len(tok)
    return out


def parse_automaton_file(text: str, source=None):
    """Parse either kind of automaton; a file with ``initial:`` is a constraint."""
    headers = {}
    body = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        toks = _tokens(line)
        if not toks:
            continue
        head, col = toks[0]
        if head.endswith(":") and head[:-1] in _HEADERS:
            key = head[:-1]
            if key in headers:
                raise ParseError(f"duplicate '{key}:' header", lineno, col, source)
            headers[key] = (lineno, toks[1:])
            continue
        if head.endswith(":"):
            raise ParseError(f"unknown header {head!r}", lineno, col, source)
        if len(toks) != 3:
            raise ParseError(
                f"transition lines need exactly 3 tokens '<state> <letter> <state>', got {len(toks)}",
                lineno, col, source,
            )
        body.append((lineno, toks))
    for key in ("alphabet", "states"):
        if key not in headers:
            raise ParseError(f"missing '{key}:' header", None, None, source)
    line_a, alpha_toks = headers["alphabet"]
    if not alpha_toks:
        raise ParseError("alphabet must list at least one letter", line_a, None, source)
    try:
        alphabet = Alphabet(t for t, _ in alpha_toks)
    except AlphabetMismatch as exc:
        raise ParseError(str(exc), line_a, None, source) from None
    line_s, state_toks = headers["states"]
    states = [t for t, _ in state_toks]
    if not states:
        raise ParseError("states must list at least one state", line_s, None, source)
    pos = {}
    for t, col in state_toks:
        if t in pos:
            raise ParseError(f"duplicate state {t!r}", line_s, col, source)
        pos[t] = len(pos)

    def state(tok, lineno, col):
        if tok not in pos:
            raise ParseError(f"undeclared state {tok!r}", lineno, col, source)
        return pos[tok]

    table = [[None] * len(alphabet) for _ in states]
    for lineno, ((src, c1), (letter, c2), (dst, c3)) in body:
        p = state(src, lineno, c1)
        if letter not in alphabet:
            raise ParseError(f"letter {letter!r} not in alphabet", lineno, c2, source)
        x = alphabet.index(letter)
        q = state(dst, lineno, c3)
        if table[p][x] is not None:
            raise ParseError(f"duplicate transition for ({src}, {letter})", lineno, c1, source)
        table[p][x] = q

    if "initial" not in headers:
        if "accepting" in headers:
            raise ParseError("'accepting:' without 'initial:'", headers["accepting"][0], 1, source)
        for p, row in enumerate(table):
            for x, t in enumerate(row):
                if t is None:
                    raise ParseError(
                        f"incomplete semi-automaton: no transition for ({states[p]}, {alphabet[x]})",
                        None, None, source,
                    )
        return SemiAutomaton(alphabet, table, states)

    line_i, init_toks = headers["initial"]
    if len(init_toks) != 1:
        raise ParseError("'initial:' takes exactly one state", line_i, None, source)
    initial = state(init_toks[0][0], line_i, init_toks[0][1])
    accepting = []
    if "accepting" in headers:
        line_f, acc_toks = headers["accepting"]
        accepting = [state(t, line_f, col) for t, col in acc_toks]
    return ConstraintPdfa(alphabet, table, initial, accepting, states)


def parse_semi_automaton(text: str, source=None) -> SemiAutomaton:
    result = parse_automaton_file(text, source)
    if not isinstance(result, SemiAutomaton):
        raise ParseError("expected a semi-automaton, found a constraint automaton", None, None, source)
    return result


def parse_pdfa(text: str, source=None) -> ConstraintPdfa:
    result = parse_automaton_file(text, source)
    if not isinstance(result, ConstraintPdfa):
        raise ParseError("expected a constraint automaton (missing 'initial:')", None, None, source)
    return result


def format_semi_automaton(A: SemiAutomaton) -> str:
    lines = ["alphabet: " + " ".join(A.alphabet), "states: " + " ".join(A.names)]
    for q, row in enumerate(A.rows):
        for x, t in enumerate(row):
            lines.append(f"{A.names[q]} {A.alphabet[x]} {A.names[t]}")
    return "\n".join(lines) + "\n"


def format_pdfa(B: ConstraintPdfa) -> str:
    lines = [
        "alphabet: " + " ".join(B.alphabet),
        "states: " + " ".join(B.names),
        "initial: " + B.names[B.initial],
        "accepting: " + " ".join(B.names[p] for p in sorted(B.accepting)),
    ]
    for p, row in enumerate(B.mu):
        for x, t in enumerate(row):
            if t is not None:
                lines.append(f"{B.names[p]} {B.alphabet[x]} {B.names[t]}")
    return "\n".join(lines) + "\n"


def result_record(decision, witness=None, method="", label=None, states_explored=0, elapsed_ms=None):
    """JSON-ready result; ``witness`` is a word (tuple) or None, ``label`` a ConstraintLabel or None."""
    if witness is not None and not decision:
        raise ValueError("a witness implies a yes decision")
    stats = {"states_explored": int(states_explored)}
    if elapsed_ms is not None:
        stats["elapsed_ms"] = round(float(elapsed_ms), 3)
    return {
        "schema": SCHEMA_VERSION,
        "decision": "yes" if decision else "no",
        "witness": None if witness is None else format_word(witness),
        "witness_length": None if witness is None else len(witness),
        "method": method,
        "label": None if label is None else label.as_dict(),
        "stats": stats,
    }


def dump_record(record) -> str:
    return json.dumps(record, sort_keys=True, indent=2)
