"""Shared test machinery: independent oracles, corpora, witness builders.

The oracles here deliberately do not reuse the library's evaluation code.
Path degrees are computed by enumerating every intermediate state chain, so a
bug in the dynamic-programming step or the matrix product cannot hide behind
itself.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

from fuzzdir import Dfa, Dfr, Ffa, generate_corpus

ZERO = Fraction(0)
ONE = Fraction(1)


def path_degree(ffa: Ffa, source: str, word, target: str) -> Fraction:
    """Max over all state chains of the min of step degrees. Exponential and
    proud of it; this is the ground truth for step_star and matrices."""
    w = tuple(word)
    if not w:
        return ONE if source == target else ZERO
    best = ZERO
    for mids in itertools.product(ffa.states, repeat=len(w) - 1):
        chain = (source,) + mids + (target,)
        val = ONE
        for s, x, t in zip(chain, w, chain[1:]):
            d = ffa.transitions.get((s, x, t), ZERO)
            if d < val:
                val = d
            if val == ZERO:
                break
        if val > best:
            best = val
    return best


def brute_row(ffa: Ffa, source: str, word) -> Dict[str, Fraction]:
    """Positive part of the reached fuzzy row, via path_degree."""
    row = {}
    for b in ffa.states:
        d = path_degree(ffa, source, word, b)
        if d > 0:
            row[b] = d
    return row


def all_words(alphabet, max_len: int) -> Iterator[Tuple[str, ...]]:
    """Words in length-then-lex order (alphabet order as given)."""
    for length in range(max_len + 1):
        yield from itertools.product(tuple(alphabet), repeat=length)


def random_dfa(n: int, alphabet: Tuple[str, ...], rng: random.Random) -> Dfa:
    states = tuple(f"q{i}" for i in range(n))
    delta = {
        (a, x): rng.choice(states) for a in states for x in alphabet
    }
    return Dfa(states, alphabet, delta)


def dfr_from_table(states, alphabet, table, initial, finals) -> Dfr:
    """Tiny builder for hand-written recognizers in tests."""
    delta = {(a, x): t for (a, x), t in table.items()}
    return Dfr(Dfa(states, alphabet, delta), initial, finals)


def inflate(image: Ffa, rng: random.Random):
    """Build a two-copies-per-state preimage automaton and the collapsing map.

    Every class max equals the image degree by construction, so the map is a
    consistent quotient; sometimes both copies receive the degree, exercising
    multi-element preimages in the max.
    """
    states = [f"{s}.{i}" for s in image.states for i in (0, 1)]
    phi = {f"{s}.{i}": s for s in image.states for i in (0, 1)}
    trans = {}
    for (a, x, b), d in image.transitions.items():
        for i in (0, 1):
            j = rng.randrange(2)
            trans[(f"{a}.{i}", x, f"{b}.{j}")] = d
            if rng.random() < 0.3:
                trans[(f"{a}.{i}", x, f"{b}.{1 - j}")] = d
    return Ffa(states, image.alphabet, trans), phi


@lru_cache(maxsize=None)
def main_corpus() -> Tuple[Ffa, ...]:
    """200 automata, up to 4 states and 2 letters, degrees {0, 1/5, 1/2, 1}."""
    return tuple(generate_corpus(200, seed=1))


@lru_cache(maxsize=None)
def normal_corpus() -> Tuple[Ffa, ...]:
    return tuple(generate_corpus(200, seed=2, normal=True))


@lru_cache(maxsize=None)
def crisp_corpus() -> Tuple[Ffa, ...]:
    return tuple(generate_corpus(200, seed=3, crisp=True))


@lru_cache(maxsize=None)
def complete_corpus_300() -> Tuple[Ffa, ...]:
    """300 complete automata with up to 6 states for the chain/merge laws."""
    return tuple(
        generate_corpus(300, seed=4, max_states=6, max_letters=2, complete=True)
    )
