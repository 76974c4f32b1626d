"""Exception hierarchy shared by all modules."""


class AutomataError(Exception):
    """Base class for every error raised by this package."""


class AlphabetMismatch(AutomataError, ValueError):
    """A letter or word does not belong to the expected alphabet."""


class EmptyAlphabet(AutomataError, ValueError):
    pass


class WaaRequired(AutomataError, ValueError):
    """An operation defined only for weakly acyclic automata got something else."""

    def __init__(self, message="automaton is not weakly acyclic", cycle=None):
        super().__init__(message)
        self.cycle = cycle


class PreconditionViolated(AutomataError, ValueError):
    pass


class EmptyInput(AutomataError, ValueError):
    pass


class InstanceTooLarge(AutomataError):
    """Exponential search refused because the instance exceeds the size guard."""

    def __init__(self, n, limit):
        super().__init__(
            f"instance has {n} states, exceeding the exhaustive-search guard of {limit}; "
            f"raise max_states (CLI: --max-states {n}) to run anyway"
        )
        self.n = n
        self.limit = limit


class UnsupportedForClassification(AutomataError):
    pass


class DegenerateFormula(AutomataError, ValueError):
    pass


class NotSatisfying(AutomataError, ValueError):
    pass


class InvalidWitness(AutomataError, ValueError):
    pass


class ParseError(AutomataError, ValueError):
    """Malformed input file; carries a 1-based line and column when known."""

    def __init__(self, message, line=None, column=None, source=None):
        where = ""
        if source is not None:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
            if column is not None:
                where += f"{column}:"
        super().__init__(f"{where} {message}" if where else message)
        self.line = line
        self.column = column
        self.source = source
