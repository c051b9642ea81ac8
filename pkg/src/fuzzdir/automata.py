"""Deterministic, nondeterministic and fuzzy finite automata.

State identifiers are strings and every construction preserves the declared
state order, so matrix rows, recognizer namings and serialized files come out
identical run to run. Validation is eager: constructors reject unknown states
or letters and out-of-range degrees immediately.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Sequence, Tuple, Union

from .degrees import ONE, ZERO, FuzzyStateSet, as_degree, format_degree
from .errors import ValidationError

Word = Tuple[str, ...]
WordLike = Union[str, Sequence[str]]


def as_word(word: WordLike, alphabet: Sequence[str]) -> Word:
    """Normalize a word to a tuple of letters, validated against `alphabet`.

    A plain string is split into characters, which covers every single-letter
    alphabet; automata with multi-character letters take sequences.
    """
    letters: Word = tuple(word)
    allowed = set(alphabet)
    for x in letters:
        if x not in allowed:
            raise ValidationError(f"letter {x!r} not in alphabet {list(alphabet)}")
    return letters


def format_word(word: Word) -> str:
    """Human form of a word; the empty word prints as an epsilon."""
    if not word:
        return "ε"
    if all(len(x) == 1 for x in word):
        return "".join(word)
    return " ".join(word)


def _check_names(what: str, names: Iterable[str]) -> Tuple[str, ...]:
    out = tuple(names)
    if not out:
        raise ValidationError(f"{what} set must be nonempty")
    seen = set()
    for name in out:
        if not isinstance(name, str) or not name:
            raise ValidationError(f"{what} name must be a nonempty string, got {name!r}")
        if name in seen:
            raise ValidationError(f"duplicate {what} name {name!r}")
        seen.add(name)
    return out


class TransitionMatrix:
    """Square matrix of degrees composed with the max-min product.

    Rows and columns follow the declared state order of the automaton the
    matrix was taken from. Instances are immutable and hashable, which is what
    recognizer construction relies on for deduplication.
    """

    __slots__ = ("entries",)

    def __init__(self, entries: Sequence[Sequence[Fraction]]):
        rows = tuple(tuple(row) for row in entries)
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise ValidationError("transition matrix must be square")
            for v in row:
                if not isinstance(v, Fraction) or v < 0 or v > 1:
                    raise ValidationError(f"matrix entry {v!r} is not a degree")
        self.entries = rows

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, n: int) -> "TransitionMatrix":
        return cls(
            tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))
        )

    def row(self, i: int) -> Tuple[Fraction, ...]:
        return self.entries[i]

    def __matmul__(self, other: "TransitionMatrix") -> "TransitionMatrix":
        if not isinstance(other, TransitionMatrix):
            return NotImplemented
        n = self.n
        if other.n != n:
            raise ValidationError(f"matrix dimension mismatch: {n} vs {other.n}")
        out = []
        for i in range(n):
            ri = self.entries[i]
            row = []
            for j in range(n):
                best = ZERO
                for k in range(n):
                    a = ri[k]
                    if a <= best:
                        continue
                    b = other.entries[k][j]
                    v = a if a <= b else b
                    if v > best:
                        best = v
                row.append(best)
            out.append(tuple(row))
        return TransitionMatrix(tuple(out))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TransitionMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(format_degree(v) for v in row) for row in self.entries
        )
        return f"[{body}]"


class Ffa:
    """Fuzzy finite automaton: states, alphabet and a degree for each move.

    `transitions` maps (source, letter, target) to a degree in [0, 1]; only
    positive entries are stored, an absent triple means degree zero.
    """

    def __init__(
        self,
        states: Iterable[str],
        alphabet: Iterable[str],
        transitions: Mapping[Tuple[str, str, str], object],
    ):
        self.states = _check_names("state", states)
        self.alphabet = _check_names("letter", alphabet)
        self._index = {s: i for i, s in enumerate(self.states)}
        letters = set(self.alphabet)
        trans: Dict[Tuple[str, str, str], Fraction] = {}
        for (a, x, b), r in dict(transitions).items():
            if a not in self._index:
                raise ValidationError(f"transition source {a!r} is not a state")
            if b not in self._index:
                raise ValidationError(f"transition target {b!r} is not a state")
            if x not in letters:
                raise ValidationError(f"transition letter {x!r} is not in the alphabet")
            d = as_degree(r)
            if d > 0:
                trans[(a, x, b)] = d
        self.transitions = trans
        succ: Dict[Tuple[str, str], list] = {}
        for (a, x, b), d in trans.items():
            succ.setdefault((a, x), []).append((b, d))
        self._succ = {
            k: tuple(sorted(v, key=lambda bd: self._index[bd[0]]))
            for k, v in succ.items()
        }
        self._letter_mats: Dict[str, TransitionMatrix] = {}

    def degree(self, a: str, x: str, b: str) -> Fraction:
        """Degree of the single move a --x--> b."""
        self._check_state(a)
        self._check_state(b)
        if x not in set(self.alphabet):
            raise ValidationError(f"letter {x!r} not in alphabet")
        return self.transitions.get((a, x, b), ZERO)

    def successors(self, state: str, letter: str) -> Tuple[Tuple[str, Fraction], ...]:
        """Positive moves out of `state` on `letter`, in state order."""
        self._check_state(state)
        return self._succ.get((state, letter), ())

    def step_star(self, state: str, word: WordLike) -> FuzzyStateSet:
        """Fuzzy set of states reached from `state` by `word`.

        The empty word gives {state/1}; each letter composes by max over
        intermediate states of min along the path.
        """
        self._check_state(state)
        w = as_word(word, self.alphabet)
        row: Dict[str, Fraction] = {state: ONE}
        for x in w:
            nxt: Dict[str, Fraction] = {}
            for a, ra in row.items():
                for b, d in self._succ.get((a, x), ()):
                    v = ra if ra <= d else d
                    old = nxt.get(b, ZERO)
                    if v > old:
                        nxt[b] = v
            row = nxt
        return FuzzyStateSet(self.states, row)

    def reach(self, state: str, word: WordLike) -> FrozenSet[str]:
        """Support of step_star: the states reachable with positive degree."""
        self._check_state(state)
        w = as_word(word, self.alphabet)
        cur = {state}
        for x in w:
            cur = {b for a in cur for b, _ in self._succ.get((a, x), ())}
        return frozenset(cur)

    def reach_set(self, states: Iterable[str], word: WordLike) -> FrozenSet[str]:
        """Union of reach over a set of start states."""
        out: set = set()
        for a in states:
            out |= self.reach(a, word)
        return frozenset(out)

    def letter_matrix(self, letter: str) -> TransitionMatrix:
        """Matrix of one letter; entry (i, j) is the degree of moving i to j."""
        if letter not in set(self.alphabet):
            raise ValidationError(f"letter {letter!r} not in alphabet")
        cached = self._letter_mats.get(letter)
        if cached is not None:
            return cached
        n = len(self.states)
        rows = [[ZERO] * n for _ in range(n)]
        for (a, x, b), d in self.transitions.items():
            if x == letter:
                rows[self._index[a]][self._index[b]] = d
        mat = TransitionMatrix(tuple(tuple(r) for r in rows))
        self._letter_mats[letter] = mat
        return mat

    def transition_matrix(self, word: WordLike) -> TransitionMatrix:
        """Max-min product of the letter matrices of `word` (identity for the
        empty word). Row i is step_star of the i-th state."""
        w = as_word(word, self.alphabet)
        mat = TransitionMatrix.identity(len(self.states))
        for x in w:
            mat = mat @ self.letter_matrix(x)
        return mat

    def is_complete(self) -> bool:
        """Every state has a positive move on every letter."""
        return all(
            (a, x) in self._succ for a in self.states for x in self.alphabet
        )

    def is_normal(self) -> bool:
        """Every (state, letter) row attains degree 1 somewhere."""
        return all(
            any(d == ONE for _, d in self._succ.get((a, x), ()))
            for a in self.states
            for x in self.alphabet
        )

    def is_crisp(self) -> bool:
        """All positive degrees are exactly 1."""
        return all(d == ONE for d in self.transitions.values())

    def is_deterministic(self) -> bool:
        """Crisp with exactly one successor per state and letter."""
        return self.is_crisp() and all(
            len(self._succ.get((a, x), ())) == 1
            for a in self.states
            for x in self.alphabet
        )

    def _check_state(self, state: str) -> None:
        if state not in self._index:
            raise ValidationError(f"unknown state {state!r}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ffa):
            return NotImplemented
        return (
            self.states == other.states
            and self.alphabet == other.alphabet
            and self.transitions == other.transitions
        )

    def __repr__(self) -> str:
        return (
            f"Ffa(states={len(self.states)}, letters={len(self.alphabet)}, "
            f"moves={len(self.transitions)})"
        )


class Nfa:
    """Nondeterministic finite automaton without initial or final states.

    `moves` maps (state, letter) to the set of targets; absent pairs mean the
    empty set, which is how incompleteness is expressed.
    """

    def __init__(
        self,
        states: Iterable[str],
        alphabet: Iterable[str],
        moves: Mapping[Tuple[str, str], Iterable[str]],
    ):
        self.states = _check_names("state", states)
        self.alphabet = _check_names("letter", alphabet)
        sset = set(self.states)
        letters = set(self.alphabet)
        table: Dict[Tuple[str, str], FrozenSet[str]] = {}
        for (a, x), targets in dict(moves).items():
            if a not in sset:
                raise ValidationError(f"move source {a!r} is not a state")
            if x not in letters:
                raise ValidationError(f"move letter {x!r} is not in the alphabet")
            tset = frozenset(targets)
            for b in tset:
                if b not in sset:
                    raise ValidationError(f"move target {b!r} is not a state")
            if tset:
                table[(a, x)] = tset
        self.moves = table

    def move(self, state: str, letter: str) -> FrozenSet[str]:
        if state not in set(self.states):
            raise ValidationError(f"unknown state {state!r}")
        if letter not in set(self.alphabet):
            raise ValidationError(f"letter {letter!r} not in alphabet")
        return self.moves.get((state, letter), frozenset())

    def step_star(self, states: Iterable[str], word: WordLike) -> FrozenSet[str]:
        """Set of states reachable from `states` by `word`."""
        sset = set(self.states)
        cur = set(states)
        for a in cur:
            if a not in sset:
                raise ValidationError(f"unknown state {a!r}")
        w = as_word(word, self.alphabet)
        for x in w:
            cur = {b for a in cur for b in self.moves.get((a, x), ())}
        return frozenset(cur)

    def is_complete(self) -> bool:
        return all(
            self.moves.get((a, x)) for a in self.states for x in self.alphabet
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Nfa):
            return NotImplemented
        return (
            self.states == other.states
            and self.alphabet == other.alphabet
            and self.moves == other.moves
        )

    def __repr__(self) -> str:
        return f"Nfa(states={len(self.states)}, letters={len(self.alphabet)})"


class Dfa:
    """Deterministic finite automaton with a total transition function."""

    def __init__(
        self,
        states: Iterable[str],
        alphabet: Iterable[str],
        delta: Mapping[Tuple[str, str], str],
    ):
        self.states = _check_names("state", states)
        self.alphabet = _check_names("letter", alphabet)
        sset = set(self.states)
        letters = set(self.alphabet)
        table: Dict[Tuple[str, str], str] = {}
        for (a, x), b in dict(delta).items():
            if a not in sset:
                raise ValidationError(f"transition source {a!r} is not a state")
            if x not in letters:
                raise ValidationError(f"transition letter {x!r} is not in the alphabet")
            if b not in sset:
                raise ValidationError(f"transition target {b!r} is not a state")
            table[(a, x)] = b
        for a in self.states:
            for x in self.alphabet:
                if (a, x) not in table:
                    raise ValidationError(
                        f"transition function is not total: missing ({a!r}, {x!r})"
                    )
        self.delta = table

    def successor(self, state: str, letter: str) -> str:
        try:
            return self.delta[(state, letter)]
        except KeyError:
            raise ValidationError(f"unknown state/letter pair ({state!r}, {letter!r})")

    def run(self, state: str, word: WordLike) -> str:
        """Iterated transition function from `state` over `word`."""
        if state not in set(self.states):
            raise ValidationError(f"unknown state {state!r}")
        w = as_word(word, self.alphabet)
        cur = state
        for x in w:
            cur = self.delta[(cur, x)]
        return cur

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Dfa):
            return NotImplemented
        return (
            self.states == other.states
            and self.alphabet == other.alphabet
            and self.delta == other.delta
        )

    def __repr__(self) -> str:
        return f"Dfa(states={len(self.states)}, letters={len(self.alphabet)})"


class Dfr:
    """Deterministic finite recognizer: a Dfa plus initial state and finals.

    Optional `labels` carry human-readable structure descriptions for states
    that were produced by a construction (recognizer families, matrices,
    minimization blocks); they show up in DOT output and figures.
    """

    def __init__(
        self,
        dfa: Dfa,
        initial: str,
        finals: Iterable[str],
        labels: Optional[Mapping[str, str]] = None,
    ):
        if not isinstance(dfa, Dfa):
            raise ValidationError("Dfr needs a Dfa underneath")
        sset = set(dfa.states)
        if initial not in sset:
            raise ValidationError(f"initial state {initial!r} is not a state")
        finals_f = frozenset(finals)
        for q in finals_f:
            if q not in sset:
                raise ValidationError(f"final state {q!r} is not a state")
        self.dfa = dfa
        self.initial = initial
        self.finals = finals_f
        self.labels = dict(labels) if labels else {}

    @property
    def states(self) -> Tuple[str, ...]:
        return self.dfa.states

    @property
    def alphabet(self) -> Tuple[str, ...]:
        return self.dfa.alphabet

    def run(self, word: WordLike) -> str:
        return self.dfa.run(self.initial, word)

    def accepts(self, word: WordLike) -> bool:
        return self.run(word) in self.finals

    def reachable_states(self) -> Tuple[str, ...]:
        """States reachable from the initial state, in BFS order (letters in
        alphabet order), which is the canonical enumeration everywhere."""
        seen = {self.initial}
        order = [self.initial]
        queue = deque([self.initial])
        while queue:
            q = queue.popleft()
            for x in self.alphabet:
                t = self.dfa.delta[(q, x)]
                if t not in seen:
                    seen.add(t)
                    order.append(t)
                    queue.append(t)
        return tuple(order)

    def is_empty(self) -> bool:
        """True if no reachable state is final."""
        return not any(q in self.finals for q in self.reachable_states())

    def shortest_accepted(self) -> Optional[Word]:
        """Shortest accepted word; ties broken lexicographically by alphabet
        order (BFS expanding letters in declared order gives exactly that).
        Returns None for the empty language."""
        if self.initial in self.finals:
            return ()
        seen = {self.initial}
        queue: deque = deque([(self.initial, ())])
        while queue:
            q, w = queue.popleft()
            for x in self.alphabet:
                t = self.dfa.delta[(q, x)]
                if t in seen:
                    continue
                wt = w + (x,)
                if t in self.finals:
                    return wt
                seen.add(t)
                queue.append((t, wt))
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Dfr):
            return NotImplemented
        return (
            self.dfa == other.dfa
            and self.initial == other.initial
            and self.finals == other.finals
        )

    def __repr__(self) -> str:
        return (
            f"Dfr(states={len(self.states)}, initial={self.initial!r}, "
            f"finals={len(self.finals)})"
        )
