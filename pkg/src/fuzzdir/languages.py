"""Regular-language algebra over deterministic recognizers.

Everything a directing-word language needs: minimization, equivalence with a
shortest distinguishing witness, the left/right ideal closures X*L and LX*,
the closure-equation report for the degree-level languages, the trap-state
shape check on minimal recognizers, and the brute-force enumeration oracle.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple

from .automata import Dfa, Dfr, Ffa, Word
from .directability import (
    DirectingKind,
    build_dd_recognizer,
    is_directable,
    is_directing,
)
from .errors import PreconditionError, ValidationError


def minimize(dfr: Dfr) -> Dfr:
    """Minimal complete recognizer of the same language.

    Restricts to the reachable part, refines the final/non-final split until
    the block signatures stop changing, and renumbers the quotient by BFS from
    the initial block. Labels record the merged original states.
    """
    reach = dfr.reachable_states()
    block: Dict[str, int] = {
        q: (0 if q in dfr.finals else 1) for q in reach
    }
    # Two seed blocks unless one side is empty.
    if len(set(block.values())) == 1:
        for q in reach:
            block[q] = 0
    while True:
        signature: Dict[str, tuple] = {
            q: (block[q],)
            + tuple(block[dfr.dfa.delta[(q, x)]] for x in dfr.alphabet)
            for q in reach
        }
        renumber: Dict[tuple, int] = {}
        for q in reach:
            sig = signature[q]
            if sig not in renumber:
                renumber[sig] = len(renumber)
        new_block = {q: renumber[signature[q]] for q in reach}
        if len(set(new_block.values())) == len(set(block.values())):
            block = new_block
            break
        block = new_block

    members: Dict[int, List[str]] = {}
    for q in reach:
        members.setdefault(block[q], []).append(q)

    # Canonical naming: BFS over the quotient from the initial block.
    start = block[dfr.initial]
    names: Dict[int, str] = {start: "m0"}
    order = [start]
    queue = deque([start])
    delta: Dict[Tuple[str, str], str] = {}
    while queue:
        b = queue.popleft()
        rep = members[b][0]
        for x in dfr.alphabet:
            t = block[dfr.dfa.delta[(rep, x)]]
            if t not in names:
                names[t] = f"m{len(names)}"
                order.append(t)
                queue.append(t)
            delta[(names[b], x)] = names[t]
    finals = [names[b] for b in order if members[b][0] in dfr.finals]
    labels = {
        names[b]: "{" + ",".join(members[b]) + "}" for b in order
    }
    dfa = Dfa([names[b] for b in order], dfr.alphabet, delta)
    return Dfr(dfa, names[start], finals, labels=labels)


def _check_same_alphabet(r1: Dfr, r2: Dfr) -> Tuple[str, ...]:
    if tuple(r1.alphabet) != tuple(r2.alphabet):
        if set(r1.alphabet) != set(r2.alphabet):
            raise ValidationError(
                f"alphabet mismatch: {list(r1.alphabet)} vs {list(r2.alphabet)}"
            )
    return r1.alphabet


def distinguishing_word(r1: Dfr, r2: Dfr) -> Optional[Word]:
    """Shortest word accepted by exactly one of the two recognizers, None if
    the languages agree. BFS over the product automaton."""
    alphabet = _check_same_alphabet(r1, r2)
    start = (r1.initial, r2.initial)
    seen = {start}
    queue: deque = deque([(start, ())])
    while queue:
        (q1, q2), w = queue.popleft()
        if (q1 in r1.finals) != (q2 in r2.finals):
            return w
        for x in alphabet:
            t = (r1.dfa.delta[(q1, x)], r2.dfa.delta[(q2, x)])
            if t not in seen:
                seen.add(t)
                queue.append((t, w + (x,)))
    return None


def language_equal(r1: Dfr, r2: Dfr) -> bool:
    """True iff the two recognizers accept the same language."""
    return distinguishing_word(r1, r2) is None


def _determinize(
    alphabet: Tuple[str, ...],
    moves: Dict[Tuple[str, str], FrozenSet[str]],
    initials: FrozenSet[str],
    finals: FrozenSet[str],
) -> Dfr:
    """Subset construction over an internal NFA with initial and final states."""
    start = initials
    names: Dict[FrozenSet[str], str] = {start: "q0"}
    order = [start]
    delta: Dict[Tuple[str, str], str] = {}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for x in alphabet:
            img = frozenset(
                b for a in cur for b in moves.get((a, x), frozenset())
            )
            if img not in names:
                names[img] = f"q{len(names)}"
                order.append(img)
                queue.append(img)
            delta[(names[cur], x)] = names[img]
    accept = [names[s] for s in order if s & finals]
    dfa = Dfa([names[s] for s in order], alphabet, delta)
    return Dfr(dfa, "q0", accept)


def left_ideal_closure(dfr: Dfr) -> Dfr:
    """Recognizer of X*·L: any prefix may be prepended.

    Built by adding a fresh start that both loops to itself and shadows the
    original initial state, then determinizing.
    """
    fresh = "start"
    while fresh in dfr.states:
        fresh += "'"
    moves: Dict[Tuple[str, str], FrozenSet[str]] = {}
    for (q, x), t in dfr.dfa.delta.items():
        moves[(q, x)] = frozenset({t})
    for x in dfr.alphabet:
        moves[(fresh, x)] = frozenset({fresh, dfr.dfa.delta[(dfr.initial, x)]})
    finals = set(dfr.finals)
    if dfr.initial in dfr.finals:
        finals.add(fresh)
    return _determinize(
        dfr.alphabet, moves, frozenset({fresh}), frozenset(finals)
    )


def right_ideal_closure(dfr: Dfr) -> Dfr:
    """Recognizer of L·X*: once a word of L has been read, stay accepting.

    Every transition out of a final state is rewired into a fresh accepting
    trap; the rest of the machine is untouched.
    """
    trap = "trap"
    while trap in dfr.states:
        trap += "'"
    states = tuple(dfr.states) + (trap,)
    delta: Dict[Tuple[str, str], str] = {}
    for (q, x), t in dfr.dfa.delta.items():
        delta[(q, x)] = trap if q in dfr.finals else t
    for x in dfr.alphabet:
        delta[(trap, x)] = trap
    finals = set(dfr.finals) | {trap}
    initial = dfr.initial
    dfa = Dfa(states, dfr.alphabet, delta)
    return Dfr(dfa, initial, finals, labels=dict(dfr.labels))


def two_sided_ideal_closure(dfr: Dfr) -> Dfr:
    """Recognizer of X*·L·X*."""
    return left_ideal_closure(right_ideal_closure(dfr))


LAW_DD2_RIGHT = "dd2_right_ideal"
LAW_DD1_LEFT = "dd1_left_ideal"
LAW_DD2_LEFT = "dd2_left_ideal"
LAW_DD2_TWO_SIDED = "dd2_two_sided"
LAW_DD3_TWO_SIDED = "dd3_two_sided"

CLOSURE_LAWS = (
    LAW_DD2_RIGHT,
    LAW_DD1_LEFT,
    LAW_DD2_LEFT,
    LAW_DD2_TWO_SIDED,
    LAW_DD3_TWO_SIDED,
)

UNCONDITIONAL_LAWS = (LAW_DD2_RIGHT,)


@dataclass
class ClosureLawReport:
    """Outcome of the ideal-closure equations on one automaton.

    `results` maps each law name to whether the closed language equals the
    original; `witnesses` holds a shortest word in the symmetric difference
    when it does not. The right-ideal law for dd2 holds for every automaton;
    the remaining laws are guaranteed only for normal ones.
    """

    normal: bool
    results: Dict[str, bool] = field(default_factory=dict)
    witnesses: Dict[str, Optional[Word]] = field(default_factory=dict)

    def holds(self, law: str) -> bool:
        return self.results[law]

    def all_hold(self) -> bool:
        return all(self.results.values())


def check_closure_equations(ffa: Ffa, cap: Optional[int] = None) -> ClosureLawReport:
    """Evaluate the ideal-closure laws of the degree-level languages.

    dd2·X* = dd2 is unconditional; X*·dd1 = dd1, X*·dd2 = dd2 (and its
    two-sided form) and X*·dd3·X* = dd3 are the normal-automaton laws.
    """
    rec = {
        kind: build_dd_recognizer(ffa, kind, cap)
        for kind in (DirectingKind.DD1, DirectingKind.DD2, DirectingKind.DD3)
    }
    checks = {
        LAW_DD2_RIGHT: (right_ideal_closure(rec[DirectingKind.DD2]), rec[DirectingKind.DD2]),
        LAW_DD1_LEFT: (left_ideal_closure(rec[DirectingKind.DD1]), rec[DirectingKind.DD1]),
        LAW_DD2_LEFT: (left_ideal_closure(rec[DirectingKind.DD2]), rec[DirectingKind.DD2]),
        LAW_DD2_TWO_SIDED: (
            two_sided_ideal_closure(rec[DirectingKind.DD2]),
            rec[DirectingKind.DD2],
        ),
        LAW_DD3_TWO_SIDED: (
            two_sided_ideal_closure(rec[DirectingKind.DD3]),
            rec[DirectingKind.DD3],
        ),
    }
    report = ClosureLawReport(normal=ffa.is_normal())
    for law, (closed, original) in checks.items():
        witness = distinguishing_word(closed, original)
        report.results[law] = witness is None
        report.witnesses[law] = witness
    return report


def trap_state_check(
    ffa: Ffa, kind: DirectingKind, cap: Optional[int] = None
) -> bool:
    """Minimal-recognizer shape check for nonempty degree-level languages.

    For a dd2-directable automaton (dd3 additionally needs normality), the
    minimal recognizer must have exactly one final state and that state must
    be a trap. Out-of-scope inputs raise PreconditionError instead of
    returning a silent False.
    """
    kind = DirectingKind.parse(kind)
    if kind is DirectingKind.DD2:
        if not is_directable(ffa, kind, cap):
            raise PreconditionError("automaton is not dd2-directable")
    elif kind is DirectingKind.DD3:
        if not ffa.is_normal():
            raise PreconditionError("dd3 trap check requires a normal automaton")
        if not is_directable(ffa, kind, cap):
            raise PreconditionError("automaton is not dd3-directable")
    else:
        raise ValidationError("trap check is defined for dd2 and dd3 only")
    small = minimize(build_dd_recognizer(ffa, kind, cap))
    if len(small.finals) != 1:
        return False
    final = next(iter(small.finals))
    return all(small.dfa.delta[(final, x)] == final for x in small.alphabet)


def enumerate_directing_words(
    ffa: Ffa, kind: DirectingKind, max_len: int
) -> List[Word]:
    """All directing words of length up to `max_len`, length-then-lex ordered.

    Pure brute force against the definition; this is the oracle the
    recognizers are tested against, so it must not share code with them.
    """
    if max_len < 0:
        raise ValidationError("max_len must be nonnegative")
    out: List[Word] = []
    for length in range(max_len + 1):
        for combo in itertools.product(ffa.alphabet, repeat=length):
            if is_directing(ffa, kind, combo):
                out.append(combo)
    return out


def dw_characterization_check(dfr: Dfr) -> bool:
    """True iff the language is a nonempty two-sided ideal (X*·L·X* = L),
    the exact shape every deterministic directing-word language has."""
    if dfr.is_empty():
        return False
    return language_equal(two_sided_ideal_closure(dfr), dfr)
