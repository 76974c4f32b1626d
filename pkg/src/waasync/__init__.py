"""Synchronizing words for weakly acyclic automata, plain and constrained."""
from .core import (
    Alphabet,
    ConstraintPdfa,
    SemiAutomaton,
    StateSet,
    as_word,
    format_word,
    image,
    is_sink,
    pdfa_accepts,
    preimage,
    rename_letters,
    restrict_alphabet,
)
from .waa import (
    NotWaa,
    WaaCertificate,
    build_synchronizing_word,
    check_weakly_acyclic,
    maximal_states,
    reachable_maximal_from,
    synchronizing_state,
)
from .subset import (
    set_transporter_search,
    set_transporter_unary_waa,
    sync_from_subset_search,
    sync_into_subset,
)
from .languages import ConstraintLabel, builtin_constraint, classify_constraint, reference_pdfa
from .constrained import (
    SolveResult,
    dispatch_solve,
    shortest_bound,
    solve_c_then_tail,
    solve_generic,
    solve_suffix_c,
    verify_witness,
    witness_length_bound,
)
from .hardness import (
    CnfFormula,
    ReductionCase,
    assignment_to_word,
    reduce_sat,
    reduce_transporter,
    word_to_assignment,
)
from .errors import *  # noqa: F401,F403

__version__ = "0.1.0"
