"""Exact membership degrees and fuzzy subsets of a finite state set.

Degrees live in the unit interval ordered by min (meet) and max (join) and are
represented as plain `fractions.Fraction` values. Exact equality of degrees is
what makes recognizer-state deduplication sound, so binary floats are rejected
outright instead of being converted.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Tuple, Union

from .errors import ValidationError

Degree = Fraction
DegreeLike = Union[Fraction, int, str]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_degree(value: DegreeLike) -> Fraction:
    """Coerce `value` to an exact degree in [0, 1].

    Accepts Fraction, int, and literal strings ("0.25", "1/4", "1"). Floats
    are refused: 0.3 as a float is not 3/10 and the difference is exactly the
    kind of bug exact arithmetic exists to rule out.
    """
    if isinstance(value, bool):
        raise ValidationError(f"not a degree: {value!r}")
    if isinstance(value, float):
        raise ValidationError(
            f"refusing float degree {value!r}; pass a string or Fraction"
        )
    try:
        d = Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise ValidationError(f"not a degree literal: {value!r}") from exc
    if d < 0 or d > 1:
        raise ValidationError(f"degree {d} outside [0, 1]")
    return d


def parse_degree(text: str) -> Fraction:
    """Parse a degree literal: decimal ("0.25"), fraction ("1/4"), or integer."""
    if not isinstance(text, str):
        raise ValidationError(f"degree literal must be a string, got {text!r}")
    return as_degree(text)


def format_degree(d: Fraction) -> str:
    """Canonical literal for a degree: reduced fraction, "0" and "1" for the ends."""
    return str(d)


def meet(a: Fraction, b: Fraction) -> Fraction:
    """Lattice meet of two degrees (min)."""
    return a if a <= b else b


def join(a: Fraction, b: Fraction) -> Fraction:
    """Lattice join of two degrees (max)."""
    return a if a >= b else b


class FuzzyStateSet:
    """Fuzzy subset of an ordered finite ground set.

    Only positive memberships are stored, so comparison is extensional: on the
    same ground, {a: 0, b: 1} equals {b: 1}. The ground order is the declared
    state order of the automaton the set came from; it fixes iteration and
    printing.
    """

    __slots__ = ("ground", "_members", "_degrees")

    def __init__(
        self,
        ground: Iterable[str],
        membership: Union[Mapping[str, DegreeLike], Iterable[Tuple[str, DegreeLike]]] = (),
    ):
        ground_t = tuple(ground)
        index = {s: i for i, s in enumerate(ground_t)}
        if len(index) != len(ground_t):
            raise ValidationError("ground set contains duplicate states")
        pairs = membership.items() if isinstance(membership, Mapping) else membership
        degrees: dict[str, Fraction] = {}
        for s, r in pairs:
            if s not in index:
                raise ValidationError(f"state {s!r} not in the ground set")
            if s in degrees:
                raise ValidationError(f"duplicate membership for state {s!r}")
            d = as_degree(r)
            if d > 0:
                degrees[s] = d
        self.ground = ground_t
        self._degrees = degrees
        self._members = tuple(sorted(degrees.items(), key=lambda kv: index[kv[0]]))

    def degree(self, state: str) -> Fraction:
        if state not in self.ground:
            raise ValidationError(f"state {state!r} not in the ground set")
        return self._degrees.get(state, ZERO)

    @property
    def support(self) -> frozenset:
        """States with positive membership."""
        return frozenset(self._degrees)

    def is_normal(self) -> bool:
        """True if some state has membership exactly 1."""
        return any(d == ONE for d in self._degrees.values())

    def items(self) -> Tuple[Tuple[str, Fraction], ...]:
        """Positive memberships in ground order."""
        return self._members

    def join(self, other: "FuzzyStateSet") -> "FuzzyStateSet":
        """Pointwise join (max) over a shared ground set."""
        self._check_ground(other)
        merged = dict(self._degrees)
        for s, d in other._degrees.items():
            merged[s] = join(merged.get(s, ZERO), d)
        return FuzzyStateSet(self.ground, merged)

    def meet(self, other: "FuzzyStateSet") -> "FuzzyStateSet":
        """Pointwise meet (min) over a shared ground set."""
        self._check_ground(other)
        common = {
            s: meet(d, other._degrees[s])
            for s, d in self._degrees.items()
            if s in other._degrees
        }
        return FuzzyStateSet(self.ground, common)

    def _check_ground(self, other: "FuzzyStateSet") -> None:
        if not isinstance(other, FuzzyStateSet) or other.ground != self.ground:
            raise ValidationError("fuzzy sets live on different ground sets")

    def __bool__(self) -> bool:
        return bool(self._members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FuzzyStateSet):
            return NotImplemented
        return self.ground == other.ground and self._members == other._members

    def __hash__(self) -> int:
        return hash((self.ground, self._members))

    def __repr__(self) -> str:
        body = ", ".join(f"{s}/{format_degree(d)}" for s, d in self._members)
        return "{" + body + "}"
