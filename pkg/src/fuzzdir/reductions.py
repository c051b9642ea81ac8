"""Conversions between the three automaton kinds.

Dropping degrees from a fuzzy automaton keeps exactly the positive moves, so
set-level behavior (supports of reached rows) is preserved; the converse
embeddings assign degree 1 to every existing move.
"""

from __future__ import annotations

from .automata import Dfa, Ffa, Nfa
from .degrees import ONE


def ffa_to_nfa(ffa: Ffa) -> Nfa:
    """Forget degrees: keep a move wherever the degree is positive."""
    moves: dict = {}
    for (a, x, b) in ffa.transitions:
        moves.setdefault((a, x), set()).add(b)
    return Nfa(ffa.states, ffa.alphabet, moves)


def nfa_to_ffa(nfa: Nfa) -> Ffa:
    """Embed with degree 1 on every move; the result is crisp."""
    trans = {
        (a, x, b): ONE for (a, x), targets in nfa.moves.items() for b in targets
    }
    return Ffa(nfa.states, nfa.alphabet, trans)


def dfa_to_nfa(dfa: Dfa) -> Nfa:
    """View a deterministic automaton as a (complete) nondeterministic one."""
    moves = {(a, x): {b} for (a, x), b in dfa.delta.items()}
    return Nfa(dfa.states, dfa.alphabet, moves)


def dfa_to_ffa(dfa: Dfa) -> Ffa:
    """Embed with degree 1; the result is crisp, complete and normal."""
    trans = {(a, x, b): ONE for (a, x), b in dfa.delta.items()}
    return Ffa(dfa.states, dfa.alphabet, trans)
