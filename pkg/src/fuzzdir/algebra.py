"""Subautomata, homomorphic images and direct products of fuzzy automata.

The operations that build new automata from old ones, together with the
consistency checks that make them legitimate: a state subset must be
transition closed before it induces a subautomaton, and a surjection induces
an image automaton only when the defining maxima agree across each class.
"""

from __future__ import annotations

from typing import Dict, Iterable, Mapping, Optional, Tuple

from .automata import Ffa
from .degrees import ZERO
from .errors import InconsistentQuotientError, NotClosedError, ValidationError


def is_subautomaton(sub: Ffa, ffa: Ffa) -> bool:
    """True if `sub` is the restriction of `ffa` to a transition-closed subset.

    Three conditions: the states form a subset, no positive move of `ffa`
    leaves that subset, and all degrees inside the subset agree.
    """
    if tuple(sub.alphabet) != tuple(ffa.alphabet):
        return False
    inside = set(sub.states)
    if not inside <= set(ffa.states):
        return False
    for (a, x, b) in ffa.transitions:
        if a in inside and b not in inside:
            return False
    for a in inside:
        for x in ffa.alphabet:
            for b in inside:
                if sub.degree(a, x, b) != ffa.degree(a, x, b):
                    return False
    return True


def subautomaton_induced(ffa: Ffa, subset: Iterable[str]) -> Ffa:
    """Restrict `ffa` to `subset`, which must be transition closed.

    The restriction keeps the ambient state order. A positive move escaping
    the subset raises NotClosedError carrying the offending triple.
    """
    requested = set(subset)
    for s in requested:
        if s not in set(ffa.states):
            raise ValidationError(f"unknown state {s!r}")
    if not requested:
        raise ValidationError("subautomaton needs a nonempty state subset")
    states = tuple(s for s in ffa.states if s in requested)
    for (a, x, b), _d in sorted(
        ffa.transitions.items(),
        key=lambda kv: (ffa.states.index(kv[0][0]), kv[0][1], ffa.states.index(kv[0][2])),
    ):
        if a in requested and b not in requested:
            raise NotClosedError(a, x, b)
    trans = {
        (a, x, b): d
        for (a, x, b), d in ffa.transitions.items()
        if a in requested and b in requested
    }
    return Ffa(states, ffa.alphabet, trans)


def _normalize_map(
    mapping: Mapping[str, str], ffa: Ffa
) -> Dict[str, str]:
    phi = dict(mapping)
    for a in ffa.states:
        if a not in phi:
            raise ValidationError(f"state map misses source state {a!r}")
    extra = set(phi) - set(ffa.states)
    if extra:
        raise ValidationError(f"state map has unknown sources {sorted(extra)}")
    return phi


def homomorphism_violation(
    mapping: Mapping[str, str], ffa: Ffa, image: Ffa
) -> Optional[Tuple[str, str, str]]:
    """First triple (a, x, b) violating the homomorphism equation, else None.

    The equation: the image degree from a's image to b on x equals the max of
    source degrees from a into b's preimage.
    """
    if set(ffa.alphabet) != set(image.alphabet):
        raise ValidationError(
            f"alphabet mismatch: {list(ffa.alphabet)} vs {list(image.alphabet)}"
        )
    phi = _normalize_map(mapping, ffa)
    targets = set(image.states)
    for a, p in phi.items():
        if p not in targets:
            raise ValidationError(f"state map sends {a!r} to unknown state {p!r}")
    preimage: Dict[str, list] = {b: [] for b in image.states}
    for a, p in phi.items():
        preimage[p].append(a)
    for a in ffa.states:
        for x in ffa.alphabet:
            for b in image.states:
                expected = max(
                    (ffa.degree(a, x, ap) for ap in preimage[b]), default=ZERO
                )
                if image.degree(phi[a], x, b) != expected:
                    return (a, x, b)
    return None


def check_homomorphism(
    mapping: Mapping[str, str], ffa: Ffa, image: Ffa
) -> bool:
    """True if `mapping` is a homomorphism from `ffa` onto/into `image`."""
    return homomorphism_violation(mapping, ffa, image) is None


def epimorphic_image(
    ffa: Ffa,
    mapping: Mapping[str, str],
    target_states: Optional[Iterable[str]] = None,
) -> Ffa:
    """The image automaton induced by a surjective state map.

    Each image degree is forced to be the max of source degrees into the
    target class. That max must come out the same no matter which source of a
    class it is computed from; if two sources disagree the map does not define
    an automaton and InconsistentQuotientError (with the witnessing pair) is
    raised rather than inventing one.

    `target_states` fixes the image state order; by default it is the order of
    first appearance of the images along the source state order.
    """
    phi = _normalize_map(mapping, ffa)
    if target_states is None:
        seen = []
        for a in ffa.states:
            if phi[a] not in seen:
                seen.append(phi[a])
        targets = tuple(seen)
    else:
        targets = tuple(target_states)
        if len(set(targets)) != len(targets):
            raise ValidationError("duplicate target state names")
        hit = set(phi.values())
        for t in targets:
            if t not in hit:
                raise ValidationError(f"map is not surjective: {t!r} has no preimage")
        for a, p in phi.items():
            if p not in set(targets):
                raise ValidationError(f"state map sends {a!r} outside the target set")
    classes: Dict[str, list] = {t: [] for t in targets}
    for a in ffa.states:
        classes[phi[a]].append(a)
    trans: Dict[Tuple[str, str, str], object] = {}
    for p in targets:
        sources = classes[p]
        for x in ffa.alphabet:
            for b in targets:
                values = [
                    max((ffa.degree(a, x, ap) for ap in classes[b]), default=ZERO)
                    for a in sources
                ]
                first = values[0]
                for a, v in zip(sources[1:], values[1:]):
                    if v != first:
                        raise InconsistentQuotientError(sources[0], a, x, b)
                if first > 0:
                    trans[(p, x, b)] = first
    return Ffa(targets, ffa.alphabet, trans)


def direct_product(left: Ffa, right: Ffa) -> Ffa:
    """Componentwise product: the degree of a joint move is the meet of the
    two component degrees. State names pair the components, row-major in the
    two declared orders."""
    if set(left.alphabet) != set(right.alphabet):
        raise ValidationError(
            f"alphabet mismatch: {list(left.alphabet)} vs {list(right.alphabet)}"
        )
    name = {}
    states = []
    for a in left.states:
        for b in right.states:
            name[(a, b)] = f"({a},{b})"
            states.append(name[(a, b)])
    trans: Dict[Tuple[str, str, str], object] = {}
    for (a, x, a2), df in left.transitions.items():
        for (b, y, b2), dg in right.transitions.items():
            if x != y:
                continue
            trans[(name[(a, b)], x, name[(a2, b2)])] = df if df <= dg else dg
    return Ffa(states, left.alphabet, trans)
