"""Subautomata, homomorphic images, direct products, preservation laws."""

import random
from fractions import Fraction

import pytest

import support
from fuzzdir import (
    Ffa,
    InconsistentQuotientError,
    NotClosedError,
    ValidationError,
    check_homomorphism,
    direct_product,
    epimorphic_image,
    fixture,
    homomorphism_violation,
    is_directing,
    is_subautomaton,
    subautomaton_induced,
)
from fuzzdir.directability import ALL_KINDS, DD_KINDS


def test_is_subautomaton_facts():
    ex31 = fixture("EX31")
    assert is_subautomaton(ex31, ex31)
    sub = subautomaton_induced(ex31, {"b", "c"})
    assert is_subautomaton(sub, ex31)
    lone = Ffa(("a",), ("x", "y"), {})
    assert not is_subautomaton(lone, ex31)
    other_alphabet = Ffa(("b", "c"), ("x",), {("b", "x", "c"): "1"})
    assert not is_subautomaton(other_alphabet, ex31)
    tweaked = Ffa(
        sub.states, sub.alphabet, {**dict(sub.transitions), ("b", "x", "c"): "1"}
    )
    assert not is_subautomaton(tweaked, ex31)


def test_subautomaton_induced_restriction():
    ex31 = fixture("EX31")
    sub = subautomaton_induced(ex31, {"c", "b"})
    assert sub.states == ("b", "c")
    assert sub.alphabet == ex31.alphabet
    assert dict(sub.transitions) == {
        ("b", "x", "c"): Fraction(2, 5),
        ("c", "x", "b"): Fraction(1, 5),
        ("c", "x", "c"): Fraction(3, 5),
        ("b", "y", "b"): Fraction(1, 2),
        ("b", "y", "c"): Fraction(1, 10),
    }
    assert subautomaton_induced(ex31, ex31.states) == ex31


def test_subautomaton_induced_guards():
    ex31 = fixture("EX31")
    with pytest.raises(NotClosedError) as exc:
        subautomaton_induced(ex31, {"a"})
    assert exc.value.witness == ("a", "x", "b")
    with pytest.raises(ValidationError):
        subautomaton_induced(ex31, {"z"})
    with pytest.raises(ValidationError):
        subautomaton_induced(ex31, set())


def _closed_subsets(f):
    """Proper transition-closed subsets found by closing each singleton."""
    out = []
    for a in f.states:
        cur = {a}
        while True:
            grown = set(cur)
            for s in list(cur):
                for x in f.alphabet:
                    grown |= f.reach(s, (x,))
            if grown == cur:
                break
            cur = grown
        if cur != set(f.states) and cur not in out:
            out.append(cur)
    return out


def test_subautomaton_preserves_directing_words():
    checked = 0
    pool = [fixture("EX31"), fixture("N44")] + list(support.main_corpus())
    for f in pool:
        for subset in _closed_subsets(f):
            sub = subautomaton_induced(f, subset)
            checked += 1
            for w in support.all_words(f.alphabet, 3):
                for kind in DD_KINDS:
                    if is_directing(f, kind, w):
                        assert is_directing(sub, kind, w)
            if f.is_normal():
                assert sub.is_normal()
    assert checked > 10


def test_check_homomorphism_identity_and_collapse():
    ex31 = fixture("EX31")
    ident = {s: s for s in ex31.states}
    assert check_homomorphism(ident, ex31, ex31)

    p41a = fixture("P41a")
    loop = Ffa(("p",), ("x",), {("p", "x", "p"): "1"})
    assert check_homomorphism({"a": "p", "b": "p"}, p41a, loop)


def test_homomorphism_violation_witness():
    ex31 = fixture("EX31")
    shuffled = {"a": "b", "b": "c", "c": "a"}
    witness = homomorphism_violation(shuffled, ex31, ex31)
    assert witness is not None
    a, x, b = witness
    preimage = [s for s in ex31.states if shuffled[s] == b]
    expected = max(
        (ex31.degree(a, x, ap) for ap in preimage), default=Fraction(0)
    )
    assert ex31.degree(shuffled[a], x, b) != expected


def test_homomorphism_input_guards():
    ex31 = fixture("EX31")
    n44 = fixture("N44")
    with pytest.raises(ValidationError):
        check_homomorphism({s: s for s in ex31.states}, ex31, fixture("P41b"))
    with pytest.raises(ValidationError):
        check_homomorphism({"a": "a"}, ex31, ex31)
    with pytest.raises(ValidationError):
        check_homomorphism({s: "zzz" for s in n44.states}, n44, n44)


def test_epimorphic_image_identity():
    ex31 = fixture("EX31")
    assert epimorphic_image(ex31, {s: s for s in ex31.states}) == ex31


def test_epimorphic_image_collapse():
    img = epimorphic_image(fixture("P41a"), {"a": "p", "b": "p"})
    assert img == Ffa(("p",), ("x",), {("p", "x", "p"): "1"})


def test_epimorphic_image_inconsistent():
    ex31 = fixture("EX31")
    with pytest.raises(InconsistentQuotientError) as exc:
        epimorphic_image(ex31, {"a": "a", "b": "bc", "c": "bc"})
    assert exc.value.witness == ("b", "c", "x", "bc")


def test_epimorphic_image_target_order():
    p41a = fixture("P41a")
    img = epimorphic_image(p41a, {"a": "p", "b": "p"}, target_states=("p",))
    assert img.states == ("p",)
    with pytest.raises(ValidationError):
        epimorphic_image(p41a, {"a": "p", "b": "p"}, target_states=("p", "ghost"))
    with pytest.raises(ValidationError):
        epimorphic_image(p41a, {"a": "p", "b": "p"}, target_states=("p", "p"))


def test_inflated_preimages_round_trip():
    rng = random.Random(7)
    for image in support.main_corpus()[:25]:
        big, phi = support.inflate(image, rng)
        assert check_homomorphism(phi, big, image)
        assert epimorphic_image(big, phi, target_states=image.states) == image


def test_epimorphism_preserves_directing_words():
    rng = random.Random(8)
    for image in support.main_corpus()[:20]:
        big, phi = support.inflate(image, rng)
        for w in support.all_words(image.alphabet, 3):
            for kind in ALL_KINDS:
                if is_directing(big, kind, w):
                    assert is_directing(image, kind, w)
        if big.is_normal():
            assert image.is_normal()


def test_image_rows_are_class_maxima():
    # The image row reached by any word equals, entrywise, the max of the
    # source row over each preimage class.
    rng = random.Random(9)
    for image in support.main_corpus()[:15]:
        big, phi = support.inflate(image, rng)
        for w in support.all_words(image.alphabet, 3):
            for a in big.states:
                got = image.step_star(phi[a], w)
                src = big.step_star(a, w)
                for b in image.states:
                    expected = max(
                        (src.degree(ap) for ap in big.states if phi[ap] == b),
                        default=Fraction(0),
                    )
                    assert got.degree(b) == expected


def test_direct_product_meet_formula():
    f = fixture("P41b")
    g = fixture("P61hF")
    prod = direct_product(f, g)
    assert prod.states == tuple(
        f"({a},{b})" for a in f.states for b in g.states
    )
    for a in f.states:
        for b in g.states:
            for a2 in f.states:
                for b2 in g.states:
                    assert prod.degree(f"({a},{b})", "x", f"({a2},{b2})") == min(
                        f.degree(a, "x", a2), g.degree(b, "x", b2)
                    )


def test_direct_product_starves_joint_state():
    prod = direct_product(fixture("EX65F"), fixture("EX65G"))
    assert prod.successors("(a,1)", "x") == ()
    assert prod.successors("(a,1)", "y") == ()


def test_direct_product_unit():
    f = fixture("EX31")
    unit = Ffa(("u",), ("x", "y"), {("u", "x", "u"): "1", ("u", "y", "u"): "1"})
    prod = direct_product(f, unit)
    renamed = {
        (f"({a},u)", x, f"({b},u)"): d for (a, x, b), d in f.transitions.items()
    }
    assert dict(prod.transitions) == renamed


def test_direct_product_crisp():
    crisp = support.crisp_corpus()
    for f, g in zip(crisp[:10], crisp[10:20]):
        if set(f.alphabet) == set(g.alphabet):
            assert direct_product(f, g).is_crisp()


def test_direct_product_alphabet_guard():
    with pytest.raises(ValidationError):
        direct_product(fixture("P41b"), fixture("N44"))
