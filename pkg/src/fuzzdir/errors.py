"""Exception types shared across the package."""

from __future__ import annotations


class FuzzdirError(Exception):
    """Base class for every error this package raises deliberately."""


class ValidationError(FuzzdirError):
    """Malformed value: unknown state or letter, bad degree, alphabet mismatch."""


class ParseError(FuzzdirError):
    """Syntax or semantic error in the automaton file format."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None and column is not None:
            message = f"line {line}, column {column}: {message}"
        elif line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class IncompleteAutomatonError(FuzzdirError):
    """Raised by procedures whose correctness requires a complete automaton."""


class StateCapError(FuzzdirError):
    """Recognizer construction discovered more states than the configured cap."""


class NotClosedError(FuzzdirError):
    """A state subset is not closed under transitions.

    `witness` is a triple (state, letter, escaped_state) showing a positive
    transition leaving the subset.
    """

    def __init__(self, state: str, letter: str, escaped: str):
        self.witness = (state, letter, escaped)
        super().__init__(
            f"subset is not transition closed: {state} --{letter}--> {escaped}"
        )


class InconsistentQuotientError(FuzzdirError):
    """A state map does not induce a well defined image automaton.

    `witness` records (source1, source2, letter, target_class): two states with
    the same image whose maxima into the target class differ.
    """

    def __init__(self, source1: str, source2: str, letter: str, target: str):
        self.witness = (source1, source2, letter, target)
        super().__init__(
            f"map is not a homomorphism-inducing partition: sources {source1!r} "
            f"and {source2!r} disagree on letter {letter!r} into class {target!r}"
        )


class PreconditionError(FuzzdirError):
    """An analysis was asked about an automaton outside its stated scope."""


class GeneratorError(FuzzdirError):
    """Random generation constraints cannot be satisfied with the given palette."""
