"""Directing words and directability of fuzzy automata.

Six notions are covered. The set-level ones look only at which states are
reachable with positive degree: a word is directing when the reached sets
collapse to one common singleton (d1), agree for all start states (d2), or
share at least one state (d3). The degree-level counterparts dd1, dd2, dd3
impose the same shape on the full fuzzy rows: a common one-point row, equal
rows, or a shared column that is maximal and positive in every row.

Directability of an automaton (does any directing word exist) is decided by
building a deterministic recognizer for the language of directing words: its
states are the families of reached subsets (set level) or the reachable
max-min matrices (degree level), explored breadth first. For d3 on complete
automata there is also a cheaper pair-merging decision procedure.
"""

from __future__ import annotations

import os
from collections import deque
from enum import Enum
from typing import Dict, FrozenSet, List, Optional, Tuple

from .automata import Dfa, Dfr, Ffa, Nfa, TransitionMatrix, Word, WordLike, as_word
from .degrees import ZERO, FuzzyStateSet
from .errors import (
    IncompleteAutomatonError,
    StateCapError,
    ValidationError,
)

DEFAULT_STATE_CAP = 1_000_000
STATE_CAP_ENV = "FUZZDIR_STATE_CAP"


class DirectingKind(str, Enum):
    """The six directing-word notions."""

    D1 = "d1"
    D2 = "d2"
    D3 = "d3"
    DD1 = "dd1"
    DD2 = "dd2"
    DD3 = "dd3"

    @classmethod
    def parse(cls, text: str) -> "DirectingKind":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise ValidationError(
                f"unknown directing kind {text!r}; expected one of "
                + ", ".join(k.value for k in cls)
            )

    @property
    def is_degree_level(self) -> bool:
        return self in DD_KINDS

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


D_KINDS = (DirectingKind.D1, DirectingKind.D2, DirectingKind.D3)
DD_KINDS = (DirectingKind.DD1, DirectingKind.DD2, DirectingKind.DD3)
ALL_KINDS = D_KINDS + DD_KINDS


def state_cap() -> int:
    """Recognizer state budget; the environment variable overrides the default."""
    raw = os.environ.get(STATE_CAP_ENV)
    if raw is None:
        return DEFAULT_STATE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValidationError(f"{STATE_CAP_ENV} must be an integer, got {raw!r}")
    if cap < 1:
        raise ValidationError(f"{STATE_CAP_ENV} must be positive, got {cap}")
    return cap


def _d_verdict(kind: DirectingKind, supports: List[FrozenSet[str]]) -> bool:
    if kind is DirectingKind.D1:
        first = supports[0]
        return len(first) == 1 and all(s == first for s in supports[1:])
    if kind is DirectingKind.D2:
        first = supports[0]
        return all(s == first for s in supports[1:])
    if kind is DirectingKind.D3:
        common = frozenset.intersection(*supports)
        return bool(common)
    raise ValidationError(f"{kind.value} is not a set-level kind")


def _dd_verdict(kind: DirectingKind, rows: List[FuzzyStateSet]) -> bool:
    if kind is DirectingKind.DD1:
        first = rows[0]
        return len(first.support) == 1 and all(r == first for r in rows[1:])
    if kind is DirectingKind.DD2:
        first = rows[0]
        return all(r == first for r in rows[1:])
    if kind is DirectingKind.DD3:
        common: Optional[set] = None
        for r in rows:
            items = r.items()
            if not items:
                return False
            mx = max(d for _, d in items)
            argmax = {s for s, d in items if d == mx}
            common = argmax if common is None else common & argmax
            if not common:
                return False
        return bool(common)
    raise ValidationError(f"{kind.value} is not a degree-level kind")


def is_directing(ffa: Ffa, kind: DirectingKind, word: WordLike) -> bool:
    """Test one word directly against the definition of `kind`."""
    kind = DirectingKind.parse(kind)
    w = as_word(word, ffa.alphabet)
    if kind in D_KINDS:
        supports = [frozenset(ffa.reach(a, w)) for a in ffa.states]
        return _d_verdict(kind, supports)
    rows = [ffa.step_star(a, w) for a in ffa.states]
    return _dd_verdict(kind, rows)


def nfa_is_directing(nfa: Nfa, kind: DirectingKind, word: WordLike) -> bool:
    """Set-level directing test on a nondeterministic automaton.

    Only d1, d2, d3 make sense here; degree-level kinds are rejected.
    """
    kind = DirectingKind.parse(kind)
    if kind not in D_KINDS:
        raise ValidationError(
            f"{kind.value} needs degrees; an Nfa only supports d1, d2, d3"
        )
    w = as_word(word, nfa.alphabet)
    supports = [nfa.step_star({a}, w) for a in nfa.states]
    return _d_verdict(kind, supports)


def _resolve_cap(cap: Optional[int]) -> int:
    if cap is None:
        return state_cap()
    if cap < 1:
        raise ValidationError(f"state cap must be positive, got {cap}")
    return cap


def _family_label(family: FrozenSet[FrozenSet[int]], states: Tuple[str, ...]) -> str:
    members = sorted(tuple(sorted(m)) for m in family)
    parts = ["{" + ",".join(states[i] for i in m) + "}" for m in members]
    return "{" + ",".join(parts) + "}"


def build_d_recognizer(
    ffa: Ffa, kind: DirectingKind, cap: Optional[int] = None
) -> Dfr:
    """Recognizer for the set-level directing words of `ffa`.

    States are families of state subsets: start from the family of all
    singletons, step every member through the one-letter reach map, and
    deduplicate. A family is accepting per the d1/d2/d3 condition. Exploration
    is breadth first with letters in alphabet order; states are named q0, q1,
    ... in discovery order and carry the family as a label.
    """
    kind = DirectingKind.parse(kind)
    if kind not in D_KINDS:
        raise ValidationError(f"{kind.value} is not a set-level kind")
    budget = _resolve_cap(cap)
    n = len(ffa.states)
    index = {s: i for i, s in enumerate(ffa.states)}
    step1: Dict[Tuple[int, str], FrozenSet[int]] = {}
    for i, a in enumerate(ffa.states):
        for x in ffa.alphabet:
            step1[(i, x)] = frozenset(index[b] for b, _ in ffa.successors(a, x))

    start: FrozenSet[FrozenSet[int]] = frozenset(frozenset({i}) for i in range(n))
    names: Dict[FrozenSet[FrozenSet[int]], str] = {start: "q0"}
    order = [start]
    delta: Dict[Tuple[str, str], str] = {}
    queue = deque([start])
    while queue:
        fam = queue.popleft()
        for x in ffa.alphabet:
            img = frozenset(
                frozenset(j for i in member for j in step1[(i, x)]) for member in fam
            )
            if img not in names:
                if len(names) >= budget:
                    raise StateCapError(
                        f"{kind.value} recognizer exceeded the cap of {budget} states"
                    )
                names[img] = f"q{len(names)}"
                order.append(img)
                queue.append(img)
            delta[(names[fam], x)] = names[img]

    def final(fam: FrozenSet[FrozenSet[int]]) -> bool:
        if kind is DirectingKind.D1:
            return len(fam) == 1 and len(next(iter(fam))) == 1
        if kind is DirectingKind.D2:
            return len(fam) == 1
        return bool(frozenset.intersection(*fam))

    finals = [names[f] for f in order if final(f)]
    labels = {names[f]: _family_label(f, ffa.states) for f in order}
    dfa = Dfa([names[f] for f in order], ffa.alphabet, delta)
    return Dfr(dfa, "q0", finals, labels=labels)


def _matrix_label(mat: TransitionMatrix) -> str:
    return repr(mat)


def _dd1_final(mat: TransitionMatrix) -> bool:
    n = mat.n
    for j in range(n):
        r = mat.entries[0][j]
        if r == 0:
            continue
        if any(mat.entries[i][j] != r for i in range(1, n)):
            continue
        if all(
            mat.entries[i][k] == 0
            for i in range(n)
            for k in range(n)
            if k != j
        ):
            return True
    return False


def _dd2_final(mat: TransitionMatrix) -> bool:
    first = mat.entries[0]
    return all(row == first for row in mat.entries[1:])


def _dd3_final(mat: TransitionMatrix) -> bool:
    common: Optional[set] = None
    for row in mat.entries:
        mx = max(row)
        if mx == ZERO:
            return False
        argmax = {j for j, v in enumerate(row) if v == mx}
        common = argmax if common is None else common & argmax
        if not common:
            return False
    return bool(common)


_DD_FINALS = {
    DirectingKind.DD1: _dd1_final,
    DirectingKind.DD2: _dd2_final,
    DirectingKind.DD3: _dd3_final,
}


def build_dd_recognizer(
    ffa: Ffa, kind: DirectingKind, cap: Optional[int] = None
) -> Dfr:
    """Recognizer for the degree-level directing words of `ffa`.

    States are the reachable max-min transition matrices, starting from the
    identity (the empty word); the step appends one letter's matrix on the
    right. All entries of reachable matrices stay inside the input degrees
    plus {0, 1}, so the state space is finite and exact equality dedups it.
    """
    kind = DirectingKind.parse(kind)
    if kind not in DD_KINDS:
        raise ValidationError(f"{kind.value} is not a degree-level kind")
    budget = _resolve_cap(cap)
    letter_mats = {x: ffa.letter_matrix(x) for x in ffa.alphabet}
    final = _DD_FINALS[kind]

    start = TransitionMatrix.identity(len(ffa.states))
    names: Dict[TransitionMatrix, str] = {start: "q0"}
    order = [start]
    delta: Dict[Tuple[str, str], str] = {}
    queue = deque([start])
    while queue:
        mat = queue.popleft()
        for x in ffa.alphabet:
            img = mat @ letter_mats[x]
            if img not in names:
                if len(names) >= budget:
                    raise StateCapError(
                        f"{kind.value} recognizer exceeded the cap of {budget} states"
                    )
                names[img] = f"q{len(names)}"
                order.append(img)
                queue.append(img)
            delta[(names[mat], x)] = names[img]

    finals = [names[m] for m in order if final(m)]
    labels = {names[m]: _matrix_label(m) for m in order}
    dfa = Dfa([names[m] for m in order], ffa.alphabet, delta)
    return Dfr(dfa, "q0", finals, labels=labels)


def build_recognizer(ffa: Ffa, kind: DirectingKind, cap: Optional[int] = None) -> Dfr:
    """Recognizer for the directing words of `ffa` of the given kind."""
    kind = DirectingKind.parse(kind)
    if kind in D_KINDS:
        return build_d_recognizer(ffa, kind, cap)
    return build_dd_recognizer(ffa, kind, cap)


def reachable_matrices(ffa: Ffa, cap: Optional[int] = None) -> List[TransitionMatrix]:
    """All max-min matrices of words, in BFS discovery order."""
    budget = _resolve_cap(cap)
    letter_mats = {x: ffa.letter_matrix(x) for x in ffa.alphabet}
    start = TransitionMatrix.identity(len(ffa.states))
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        mat = queue.popleft()
        for x in ffa.alphabet:
            img = mat @ letter_mats[x]
            if img not in seen:
                if len(seen) >= budget:
                    raise StateCapError(
                        f"matrix exploration exceeded the cap of {budget} states"
                    )
                seen.add(img)
                order.append(img)
                queue.append(img)
    return order


def is_directable(ffa: Ffa, kind: DirectingKind, cap: Optional[int] = None) -> bool:
    """True if some word of the given kind directs `ffa`."""
    return bool(build_recognizer(ffa, kind, cap).finals)


def shortest_directing_word(
    ffa: Ffa, kind: DirectingKind, cap: Optional[int] = None
) -> Optional[Word]:
    """Shortest directing word of the given kind, lexicographically least among
    the shortest (alphabet order as declared); None if there is none."""
    return build_recognizer(ffa, kind, cap).shortest_accepted()


def d3_merges(ffa: Ffa, a: str, b: str, word: WordLike) -> bool:
    """True if `word` merges the pair: some state is reachable with positive
    degree from both `a` and `b`."""
    return bool(ffa.reach(a, word) & ffa.reach(b, word))


def inverted_table(ffa: Ffa) -> Dict[Tuple[str, str], FrozenSet[str]]:
    """For each (state, letter): the states that reach it in one step.

    This is the table the pair-merging decision procedure walks backwards.
    """
    inv: Dict[Tuple[str, str], set] = {}
    for (a, x, b) in ffa.transitions:
        inv.setdefault((b, x), set()).add(a)
    return {
        (b, x): frozenset(inv.get((b, x), ()))
        for b in ffa.states
        for x in ffa.alphabet
    }


def d3_decide_by_merging(ffa: Ffa) -> bool:
    """Decide d3-directability of a complete automaton by pair marking.

    Seed: every pair of states with a common successor on some letter is
    mergeable. Propagate: if (a, b) is mergeable then so is every pair of
    one-step predecessors of a and b under the same letter, via the inverted
    table and a FIFO worklist. The automaton is d3-directable iff every pair
    ends up marked. Completeness is required for correctness (on incomplete
    automata pairwise mergeability does not imply a global d3 word), so
    incomplete input is refused.

    Marking is monotone, so the worklist can stop the moment all pairs are
    marked; that short circuit keeps dense instances fast without changing the
    verdict.
    """
    if not ffa.is_complete():
        raise IncompleteAutomatonError(
            "pairwise merging decides d3-directability only for complete "
            "automata; this one has an empty successor set"
        )
    n = len(ffa.states)
    if n == 1:
        return True
    index = {s: i for i, s in enumerate(ffa.states)}
    # inv[x][target] = sorted source indices
    inv: Dict[str, List[List[int]]] = {
        x: [[] for _ in range(n)] for x in ffa.alphabet
    }
    for (a, x, b) in ffa.transitions:
        inv[x][index[b]].append(index[a])
    for x in ffa.alphabet:
        for lst in inv[x]:
            lst.sort()

    marked = bytearray(n * n)
    count = 0
    total = n * (n - 1) // 2
    worklist: deque = deque()

    def mark(i: int, j: int) -> None:
        nonlocal count
        if i > j:
            i, j = j, i
        pos = i * n + j
        if not marked[pos]:
            marked[pos] = 1
            count += 1
            worklist.append((i, j))

    for x in ffa.alphabet:
        if count == total:
            break
        for sources in inv[x]:
            if count == total:
                break
            m = len(sources)
            if m < 2:
                continue
            for p in range(m):
                if count == total:
                    break
                ip = sources[p]
                for q in range(p + 1, m):
                    mark(ip, sources[q])

    while worklist and count < total:
        a, b = worklist.popleft()
        for x in ffa.alphabet:
            for i in inv[x][a]:
                for j in inv[x][b]:
                    if i != j:
                        mark(i, j)
            if count == total:
                return True
    return count == total


def mu_chain(ffa: Ffa) -> List[FrozenSet[Tuple[str, str]]]:
    """Strictly increasing chain of mergeability relations of a complete
    automaton.

    Element k relates (a, b) iff some word of length at most k merges them.
    Level 0 is the diagonal; level k+1 adds pairs with a one-letter step into
    the previous level. The list ends at the first stable level, so its length
    is at most 1 + the number of unordered state pairs. The automaton is
    d3-directable iff the last level is the full relation.
    """
    if not ffa.is_complete():
        raise IncompleteAutomatonError(
            "the mergeability chain is meaningful only for complete automata"
        )
    states = ffa.states
    reach1 = {
        (a, x): ffa.reach(a, (x,)) for a in states for x in ffa.alphabet
    }
    mu: FrozenSet[Tuple[str, str]] = frozenset((a, a) for a in states)
    chain = [mu]
    while True:
        grown = set(mu)
        for ai, a in enumerate(states):
            for b in states[ai + 1:]:
                if (a, b) in mu:
                    continue
                hit = False
                for x in ffa.alphabet:
                    ra = reach1[(a, x)]
                    rb = reach1[(b, x)]
                    if any((c, d) in mu for c in ra for d in rb):
                        hit = True
                        break
                if hit:
                    grown.add((a, b))
                    grown.add((b, a))
        nxt = frozenset(grown)
        if nxt == mu:
            return chain
        chain.append(nxt)
        mu = nxt
