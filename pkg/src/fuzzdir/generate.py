"""Seeded random generation of fuzzy automata.

The generator is a pure function of its config: same seed, same automaton.
Constraints are repaired per row after the initial draw (a normal row gets a
forced 1-entry, an empty row of a complete automaton gets a forced positive
entry), which keeps the repair local and the distribution simple.
"""

from __future__ import annotations

import random
import string
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Tuple

from .automata import Ffa
from .degrees import ONE, ZERO, as_degree
from .errors import GeneratorError, ValidationError

DEFAULT_PALETTE = (
    Fraction(0),
    Fraction(1, 5),
    Fraction(1, 2),
    Fraction(1),
)


def _state_names(n: int) -> Tuple[str, ...]:
    if n <= 26:
        return tuple(string.ascii_lowercase[:n])
    return tuple(f"s{i}" for i in range(n))


def _letter_names(m: int) -> Tuple[str, ...]:
    base = "xyzuvw"
    if m <= len(base):
        return tuple(base[:m])
    return tuple(f"x{i}" for i in range(m))


@dataclass(frozen=True)
class GeneratorConfig:
    """Everything that determines one random automaton."""

    state_count: int
    letter_count: int
    palette: Tuple[Fraction, ...] = DEFAULT_PALETTE
    seed: int = 0
    complete: bool = False
    normal: bool = False
    crisp: bool = False

    def __post_init__(self):
        if self.state_count < 1:
            raise ValidationError("state_count must be at least 1")
        if self.letter_count < 1:
            raise ValidationError("letter_count must be at least 1")
        palette = tuple(as_degree(p) for p in self.palette)
        if not palette:
            raise ValidationError("palette must be nonempty")
        object.__setattr__(self, "palette", palette)


def generate(config: GeneratorConfig) -> Ffa:
    """Draw one automaton; deterministic in the config.

    Each (state, letter, state) degree is drawn uniformly from the palette,
    then rows are repaired to meet the requested constraints. Unsatisfiable
    combinations (normal without 1 in the palette, complete without any
    positive degree, crisp with fractional degrees only) raise GeneratorError.
    """
    palette: Tuple[Fraction, ...] = config.palette
    if config.crisp:
        palette = tuple(p for p in palette if p == ZERO or p == ONE)
        if ONE not in palette:
            raise GeneratorError("crisp generation needs degree 1 in the palette")
    positives = [p for p in palette if p > 0]
    if config.complete and not positives:
        raise GeneratorError("complete generation needs a positive palette degree")
    if config.normal and ONE not in palette:
        raise GeneratorError("normal generation needs degree 1 in the palette")

    rng = random.Random(config.seed)
    states = _state_names(config.state_count)
    letters = _letter_names(config.letter_count)
    trans = {}
    for a in states:
        for x in letters:
            row = {b: rng.choice(palette) for b in states}
            if config.normal and ONE not in row.values():
                row[rng.choice(states)] = ONE
            elif config.complete and all(d == ZERO for d in row.values()):
                row[rng.choice(states)] = rng.choice(positives)
            for b, d in row.items():
                if d > 0:
                    trans[(a, x, b)] = d
    return Ffa(states, letters, trans)


def generate_corpus(
    count: int,
    *,
    max_states: int = 4,
    max_letters: int = 2,
    palette: Iterable = DEFAULT_PALETTE,
    seed: int = 0,
    complete: bool = False,
    normal: bool = False,
    crisp: bool = False,
) -> List[Ffa]:
    """Deterministic list of automata cycling through all sizes up to the
    bounds. Used by the property suites; the parameters mirror generate()."""
    palette_t = tuple(palette)
    out = []
    for i in range(count):
        config = GeneratorConfig(
            state_count=1 + i % max_states,
            letter_count=1 + (i // max_states) % max_letters,
            palette=palette_t,
            seed=seed * 1_000_003 + i,
            complete=complete,
            normal=normal,
            crisp=crisp,
        )
        out.append(generate(config))
    return out
