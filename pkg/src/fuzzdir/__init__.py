"""Directing words and directability classes of fuzzy finite automata.

The core objects are fuzzy automata over the max-min interval, the six
directing-word notions (set-level d1/d2/d3 and degree-level dd1/dd2/dd3),
deterministic recognizers for their word languages, and the algebra that the
classification lattice is built from.
"""

from .algebra import (
    check_homomorphism,
    direct_product,
    epimorphic_image,
    homomorphism_violation,
    is_subautomaton,
    subautomaton_induced,
)
from .automata import (
    Dfa,
    Dfr,
    Ffa,
    Nfa,
    TransitionMatrix,
    Word,
    as_word,
    format_word,
)
from .classify import CLASS_NAMES, ClassificationReport, classify
from .degrees import (
    Degree,
    FuzzyStateSet,
    ONE,
    ZERO,
    as_degree,
    format_degree,
    join,
    meet,
    parse_degree,
)
from .directability import (
    ALL_KINDS,
    DD_KINDS,
    D_KINDS,
    DEFAULT_STATE_CAP,
    DirectingKind,
    build_d_recognizer,
    build_dd_recognizer,
    build_recognizer,
    d3_decide_by_merging,
    d3_merges,
    inverted_table,
    is_directable,
    is_directing,
    mu_chain,
    nfa_is_directing,
    reachable_matrices,
    shortest_directing_word,
    state_cap,
)
from .dot import dfr_to_dot, ffa_to_dot
from .errors import (
    FuzzdirError,
    GeneratorError,
    IncompleteAutomatonError,
    InconsistentQuotientError,
    NotClosedError,
    ParseError,
    PreconditionError,
    StateCapError,
    ValidationError,
)
from .fileformat import (
    load_automaton,
    parse_automaton,
    save_automaton,
    serialize_automaton,
)
from .fixtures import fixture, fixture_names
from .generate import GeneratorConfig, generate, generate_corpus
from .languages import (
    CLOSURE_LAWS,
    ClosureLawReport,
    check_closure_equations,
    distinguishing_word,
    dw_characterization_check,
    enumerate_directing_words,
    language_equal,
    left_ideal_closure,
    minimize,
    right_ideal_closure,
    trap_state_check,
    two_sided_ideal_closure,
)
from .reductions import dfa_to_ffa, dfa_to_nfa, ffa_to_nfa, nfa_to_ffa

__version__ = "0.1.0"

__all__ = [
    "ALL_KINDS",
    "CLASS_NAMES",
    "CLOSURE_LAWS",
    "ClassificationReport",
    "ClosureLawReport",
    "DD_KINDS",
    "DEFAULT_STATE_CAP",
    "D_KINDS",
    "Degree",
    "Dfa",
    "Dfr",
    "DirectingKind",
    "Ffa",
    "FuzzdirError",
    "FuzzyStateSet",
    "GeneratorConfig",
    "GeneratorError",
    "IncompleteAutomatonError",
    "InconsistentQuotientError",
    "Nfa",
    "NotClosedError",
    "ONE",
    "ParseError",
    "PreconditionError",
    "StateCapError",
    "TransitionMatrix",
    "ValidationError",
    "Word",
    "ZERO",
    "as_degree",
    "as_word",
    "build_d_recognizer",
    "build_dd_recognizer",
    "build_recognizer",
    "check_closure_equations",
    "check_homomorphism",
    "classify",
    "d3_decide_by_merging",
    "d3_merges",
    "dfa_to_ffa",
    "dfa_to_nfa",
    "dfr_to_dot",
    "direct_product",
    "distinguishing_word",
    "dw_characterization_check",
    "enumerate_directing_words",
    "epimorphic_image",
    "ffa_to_dot",
    "ffa_to_nfa",
    "fixture",
    "fixture_names",
    "format_degree",
    "format_word",
    "generate",
    "generate_corpus",
    "homomorphism_violation",
    "inverted_table",
    "is_directable",
    "is_directing",
    "is_subautomaton",
    "join",
    "language_equal",
    "left_ideal_closure",
    "load_automaton",
    "meet",
    "minimize",
    "mu_chain",
    "nfa_is_directing",
    "nfa_to_ffa",
    "parse_automaton",
    "parse_degree",
    "reachable_matrices",
    "right_ideal_closure",
    "save_automaton",
    "serialize_automaton",
    "shortest_directing_word",
    "state_cap",
    "subautomaton_induced",
    "trap_state_check",
    "two_sided_ideal_closure",
]
