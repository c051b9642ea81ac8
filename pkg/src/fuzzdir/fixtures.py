"""Built-in witness automata.

Each fixture pins down one boundary of the theory: a strict inclusion between
directing notions, a closure law failing without normality, a class separation
on the inclusion lattice. The stable names are part of the public surface (the
CLI prints them) and the test suite asserts the documented behavior of every
single one.
"""

from __future__ import annotations

from typing import Dict, List

from .automata import Ffa
from .errors import ValidationError


def _ffa(states: str, alphabet: str, *moves) -> Ffa:
    """Compact builder: single-char state/letter names, moves as
    (src, letter, dst, degree-literal) quadruples."""
    trans = {(a, x, b): d for (a, x, b, d) in moves}
    return Ffa(tuple(states), tuple(alphabet), trans)


def _build_registry() -> Dict[str, Ffa]:
    reg: Dict[str, Ffa] = {}

    # Three states, two letters, six graded moves. The standard small example:
    # xx is d3-directing, neither yxx nor xxy is, and dropping degrees gives a
    # six-entry nondeterministic transition map.
    reg["EX31"] = _ffa(
        "abc",
        "xy",
        ("a", "x", "b", "0.3"),
        ("b", "x", "c", "0.4"),
        ("c", "x", "b", "0.2"),
        ("c", "x", "c", "0.6"),
        ("b", "y", "b", "0.5"),
        ("b", "y", "c", "0.1"),
    )

    # Incomplete automaton on which every state pair merges by a single letter
    # yet no d3-directing word exists: each letter sends one state to the
    # empty set. Shows why the pair-merging decider must refuse incomplete
    # input.
    reg["EX38"] = _ffa(
        "abc",
        "xyz",
        ("a", "x", "a", "1"),
        ("b", "x", "a", "1"),
        ("b", "y", "b", "1"),
        ("c", "y", "b", "1"),
        ("a", "z", "c", "1"),
        ("c", "z", "c", "1"),
    )

    # Full crisp one-letter square: every row is {a/1, b/1}, so dd2 and dd3
    # hold from length 1 on but dd1 never does (rows are never one-point).
    reg["P41a"] = _ffa(
        "ab",
        "x",
        ("a", "x", "a", "1"),
        ("a", "x", "b", "1"),
        ("b", "x", "a", "1"),
        ("b", "x", "b", "1"),
    )

    # Same support, different degrees: x is d2-directing (both reach exactly
    # {b}) but never dd2-directing (0.1 vs 0.2 rows).
    reg["P41b"] = _ffa(
        "ab",
        "x",
        ("a", "x", "b", "0.1"),
        ("b", "x", "b", "0.2"),
    )

    # Complete but not normal (the a-y move has degree 0.5). Its dd1 language
    # is exactly xX*, which is not closed under prepending: x qualifies, yx
    # does not. The standard counterexample to the left-ideal laws.
    reg["N44"] = _ffa(
        "ab",
        "xy",
        ("a", "x", "b", "1"),
        ("b", "x", "b", "1"),
        ("b", "y", "b", "1"),
        ("a", "y", "a", "0.5"),
    )

    # Normal automaton whose dd1 language is X*x: any word ending in x lands
    # both states on {b/1}, while a final y always leaves a two-point row from
    # b. Witnesses that dd1 languages of normal automata need not be
    # right-closed.
    reg["P55n"] = _ffa(
        "ab",
        "xy",
        ("a", "x", "b", "1"),
        ("a", "y", "a", "1"),
        ("b", "x", "b", "1"),
        ("b", "y", "a", "1"),
        ("b", "y", "b", "1"),
    )

    # dd3 language containing x and xxy but not xy: separates dd3 languages
    # from dd1 and dd2 ones, since any dd1/dd2 language containing x would be
    # forced to contain xy as well.
    reg["P56"] = _ffa(
        "pq",
        "xy",
        ("p", "x", "q", "1"),
        ("q", "x", "p", "1"),
        ("q", "x", "q", "1"),
        ("p", "y", "p", "1"),
    )

    # Same automaton as P41a under its lattice-separation role: dd2- and
    # dd3-directable (and normal) but not dd1-directable.
    reg["P61b"] = reg["P41a"]

    # Normal, dd3-directable, never dd2-directable: once an x has been read
    # the a-row is {a/0.2, b/1} and the b-row {b/1}; equal maxima at b but
    # unequal rows.
    reg["P61cF"] = _ffa(
        "ab",
        "xy",
        ("a", "x", "a", "0.2"),
        ("a", "x", "b", "1"),
        ("a", "y", "a", "1"),
        ("b", "x", "b", "1"),
        ("b", "y", "b", "1"),
    )

    # One positive move only: from length 2 on both rows are empty, which
    # satisfies the dd2 condition vacuously but can never satisfy dd3 (empty
    # rows have no positive maximum). dd2-directable without being
    # dd3-directable.
    reg["P61cG"] = _ffa(
        "ab",
        "x",
        ("a", "x", "b", "1"),
    )

    # dd1-directable but not normal (state a has no y-move at all): separates
    # dd1 from the normal classes. Also one factor of the product example.
    reg["P61gF"] = _ffa(
        "ab",
        "xy",
        ("a", "x", "b", "1"),
        ("b", "x", "b", "1"),
        ("b", "y", "b", "1"),
    )

    # All rows collapse to {b/0.5} immediately: dd1/dd2/dd3-directable with a
    # common degree below 1, hence not normal.
    reg["P61hF"] = _ffa(
        "ab",
        "x",
        ("a", "x", "b", "0.5"),
        ("b", "x", "b", "0.5"),
    )

    # Normal three-state chain with a damped loop at a: from length 2 on the
    # a-row is {a/0.5, b/0.5, c/1} and the b,c rows are {c/1}, so every x^n
    # with n >= 2 is dd3-directing while no word is dd2-directing.
    reg["P61hG"] = _ffa(
        "abc",
        "x",
        ("a", "x", "a", "0.5"),
        ("a", "x", "b", "1"),
        ("b", "x", "c", "1"),
        ("c", "x", "c", "1"),
    )

    # The two product factors: each is directable in every degree-level sense
    # (x directs the first, y the second), yet their direct product has a
    # state with no moves at all and a trap state elsewhere, so the product is
    # directable in no sense. Directability is not closed under products.
    reg["EX65F"] = reg["P61gF"]
    reg["EX65G"] = _ffa(
        "12",
        "xy",
        ("1", "y", "2", "1"),
        ("2", "y", "2", "1"),
        ("2", "x", "2", "1"),
    )

    return reg


_REGISTRY = _build_registry()

FIXTURE_NAMES = tuple(_REGISTRY)


def fixture(name: str) -> Ffa:
    """Fetch a built-in automaton by its stable name."""
    try:
        return _REGISTRY[name]
    except KeyError:
        raise ValidationError(
            f"unknown fixture {name!r}; available: {', '.join(FIXTURE_NAMES)}"
        )


def fixture_names() -> List[str]:
    return list(FIXTURE_NAMES)
