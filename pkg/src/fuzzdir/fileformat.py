"""The line-oriented automaton file format.

A file is UTF-8 text; '#' starts a comment, blank lines are skipped. Header
directives declare the kind, the states, and the alphabet (each exactly once,
all before the first transition):

    kind: ffa            # or nfa, dfa
    states: a b c
    alphabet: x y
    trans: a x b 3/10    # ffa: source letter target degree
    trans: a x b         # nfa/dfa: source letter target

Fuzzy degrees accept decimal ("0.25") and fraction ("1/4") literals; a degree
of 0 is legal and means the move is absent. Duplicate transitions are errors,
as is a non-total dfa. Errors carry line and column positions.
"""

from __future__ import annotations

import re
from typing import Dict, List, Optional, Tuple, Union

from .automata import Dfa, Ffa, Nfa
from .degrees import format_degree, parse_degree
from .errors import ParseError, ValidationError

Automaton = Union[Ffa, Nfa, Dfa]

_DIRECTIVE_RE = re.compile(r"^\s*([A-Za-z_][\w-]*)\s*:(.*)$")
_TOKEN_RE = re.compile(r"\S+")

KINDS = ("ffa", "nfa", "dfa")


def _tokens(rest: str, offset: int) -> List[Tuple[str, int]]:
    """(token, 1-based column) pairs of a directive payload."""
    return [(m.group(0), offset + m.start() + 1) for m in _TOKEN_RE.finditer(rest)]


def parse_automaton(text: str) -> Automaton:
    """Parse file content into the automaton its header declares."""
    kind: Optional[str] = None
    states: Optional[List[Tuple[str, int]]] = None
    alphabet: Optional[List[Tuple[str, int]]] = None
    state_set: set = set()
    letter_set: set = set()
    ffa_trans: Dict[Tuple[str, str, str], object] = {}
    nfa_moves: Dict[Tuple[str, str], set] = {}
    dfa_delta: Dict[Tuple[str, str], str] = {}
    seen_triples: set = set()
    seen_pairs: set = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        m = _DIRECTIVE_RE.match(line)
        if m is None:
            col = len(line) - len(line.lstrip()) + 1
            raise ParseError("expected 'key: ...' directive", lineno, col)
        key = m.group(1).lower()
        toks = _tokens(m.group(2), m.start(2))

        if key == "kind":
            if kind is not None:
                raise ParseError("duplicate 'kind' directive", lineno, 1)
            if len(toks) != 1:
                raise ParseError("'kind' takes exactly one value", lineno, 1)
            value, col = toks[0]
            if value.lower() not in KINDS:
                raise ParseError(
                    f"unknown kind {value!r}; expected ffa, nfa or dfa", lineno, col
                )
            kind = value.lower()
        elif key == "states":
            if states is not None:
                raise ParseError("duplicate 'states' directive", lineno, 1)
            if not toks:
                raise ParseError("'states' needs at least one name", lineno, 1)
            for name, col in toks:
                if name in state_set:
                    raise ParseError(f"duplicate state {name!r}", lineno, col)
                state_set.add(name)
            states = toks
        elif key == "alphabet":
            if alphabet is not None:
                raise ParseError("duplicate 'alphabet' directive", lineno, 1)
            if not toks:
                raise ParseError("'alphabet' needs at least one letter", lineno, 1)
            for name, col in toks:
                if name in letter_set:
                    raise ParseError(f"duplicate letter {name!r}", lineno, col)
                letter_set.add(name)
            alphabet = toks
        elif key == "trans":
            if kind is None:
                raise ParseError("'kind' must come before transitions", lineno, 1)
            if states is None:
                raise ParseError("'states' must come before transitions", lineno, 1)
            if alphabet is None:
                raise ParseError("'alphabet' must come before transitions", lineno, 1)
            arity = 4 if kind == "ffa" else 3
            if len(toks) != arity:
                raise ParseError(
                    f"'trans' for a {kind} needs {arity} fields "
                    f"(got {len(toks)})",
                    lineno,
                    1,
                )
            (src, src_col), (letter, letter_col), (dst, dst_col) = toks[:3]
            if src not in state_set:
                raise ParseError(f"undeclared state {src!r}", lineno, src_col)
            if letter not in letter_set:
                raise ParseError(f"undeclared letter {letter!r}", lineno, letter_col)
            if dst not in state_set:
                raise ParseError(f"undeclared state {dst!r}", lineno, dst_col)
            if kind == "ffa":
                literal, deg_col = toks[3]
                try:
                    degree = parse_degree(literal)
                except ValidationError as exc:
                    raise ParseError(str(exc), lineno, deg_col)
                if (src, letter, dst) in seen_triples:
                    raise ParseError(
                        f"duplicate transition {src} {letter} {dst}", lineno, src_col
                    )
                seen_triples.add((src, letter, dst))
                if degree > 0:
                    ffa_trans[(src, letter, dst)] = degree
            elif kind == "nfa":
                if (src, letter, dst) in seen_triples:
                    raise ParseError(
                        f"duplicate transition {src} {letter} {dst}", lineno, src_col
                    )
                seen_triples.add((src, letter, dst))
                nfa_moves.setdefault((src, letter), set()).add(dst)
            else:
                if (src, letter) in seen_pairs:
                    raise ParseError(
                        f"duplicate transition for ({src}, {letter})", lineno, src_col
                    )
                seen_pairs.add((src, letter))
                dfa_delta[(src, letter)] = dst
        else:
            raise ParseError(f"unknown directive {key!r}", lineno, 1)

    if kind is None:
        raise ParseError("missing 'kind' directive")
    if states is None:
        raise ParseError("missing 'states' directive")
    if alphabet is None:
        raise ParseError("missing 'alphabet' directive")

    state_names = [name for name, _ in states]
    letter_names = [name for name, _ in alphabet]
    if kind == "ffa":
        return Ffa(state_names, letter_names, ffa_trans)
    if kind == "nfa":
        return Nfa(state_names, letter_names, nfa_moves)
    for a in state_names:
        for x in letter_names:
            if (a, x) not in dfa_delta:
                raise ParseError(
                    f"dfa transition function is not total: missing ({a}, {x})"
                )
    return Dfa(state_names, letter_names, dfa_delta)


def serialize_automaton(auto: Automaton) -> str:
    """Canonical file content: header, then transitions in declared state,
    letter, target order. parse(serialize(A)) == A."""
    lines: List[str] = []
    if isinstance(auto, Ffa):
        lines.append("kind: ffa")
    elif isinstance(auto, Nfa):
        lines.append("kind: nfa")
    elif isinstance(auto, Dfa):
        lines.append("kind: dfa")
    else:
        raise ValidationError(f"cannot serialize {type(auto).__name__}")
    lines.append("states: " + " ".join(auto.states))
    lines.append("alphabet: " + " ".join(auto.alphabet))
    if isinstance(auto, Ffa):
        for a in auto.states:
            for x in auto.alphabet:
                for b, d in auto.successors(a, x):
                    lines.append(f"trans: {a} {x} {b} {format_degree(d)}")
    elif isinstance(auto, Nfa):
        order = {s: i for i, s in enumerate(auto.states)}
        for a in auto.states:
            for x in auto.alphabet:
                for b in sorted(auto.move(a, x), key=order.__getitem__):
                    lines.append(f"trans: {a} {x} {b}")
    else:
        for a in auto.states:
            for x in auto.alphabet:
                lines.append(f"trans: {a} {x} {auto.delta[(a, x)]}")
    return "\n".join(lines) + "\n"


def load_automaton(path) -> Automaton:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_automaton(handle.read())


def save_automaton(auto: Automaton, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(serialize_automaton(auto))
