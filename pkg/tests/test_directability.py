"""Directing words: definitions, recognizers, merging decider, mu chain."""

import pytest
from hypothesis import given, strategies as st

import support
from fuzzdir import (
    DEFAULT_STATE_CAP,
    DirectingKind,
    Ffa,
    IncompleteAutomatonError,
    StateCapError,
    ValidationError,
    build_d_recognizer,
    build_dd_recognizer,
    build_recognizer,
    d3_decide_by_merging,
    d3_merges,
    dfa_to_ffa,
    direct_product,
    ffa_to_nfa,
    fixture,
    inverted_table,
    is_directable,
    is_directing,
    mu_chain,
    nfa_is_directing,
    reachable_matrices,
    shortest_directing_word,
    state_cap,
    trap_state_check,
)
from fuzzdir.directability import ALL_KINDS, D_KINDS, DD_KINDS, STATE_CAP_ENV

D1, D2, D3 = D_KINDS
DD1, DD2, DD3 = DD_KINDS


def test_kind_parse():
    assert DirectingKind.parse("D1") is D1
    assert DirectingKind.parse(" dd3 ") is DD3
    assert DirectingKind.parse("d2").is_degree_level is False
    assert DD2.is_degree_level
    with pytest.raises(ValidationError):
        DirectingKind.parse("d4")


def test_word_level_facts():
    ex31 = fixture("EX31")
    assert is_directing(ex31, D3, "xx")
    assert not is_directing(ex31, D3, "yxx")
    assert not is_directing(ex31, D3, "xxy")

    p41a = fixture("P41a")
    assert not is_directing(p41a, DD1, "x")
    assert is_directing(p41a, DD2, "x")

    p41b = fixture("P41b")
    assert not is_directing(p41b, DD2, "x")
    assert is_directing(p41b, D2, "x")
    assert is_directing(p41b, D1, "x")

    n44 = fixture("N44")
    assert is_directing(n44, DD1, "x")
    assert not is_directing(n44, DD1, "yx")


def test_equal_empty_rows_direct():
    # Degree-level d2 compares rows extensionally, so two all-zero rows agree.
    g = fixture("P61cG")
    assert not is_directing(g, DD2, "x")
    assert is_directing(g, DD2, "xx")
    assert all(not g.step_star(a, "xx").support for a in g.states)
    assert not is_directing(g, DD1, "xx")
    assert not is_directing(g, DD3, "xx")


def test_unknown_letter_rejected():
    with pytest.raises(ValidationError):
        is_directing(fixture("EX31"), D3, "xz")


def _loop_ffa():
    return Ffa(("s",), ("x", "y"), {("s", "x", "s"): "1", ("s", "y", "s"): "1"})


def test_one_state_loop_directs_everywhere():
    f = _loop_ffa()
    for kind in ALL_KINDS:
        r = build_recognizer(f, kind)
        for w in support.all_words(f.alphabet, 3):
            assert is_directing(f, kind, w)
            assert r.accepts(w)
    assert d3_decide_by_merging(f)
    assert mu_chain(f) == [frozenset({("s", "s")})]


def test_d_recognizer_languages():
    r = build_recognizer(fixture("EX31"), D3)
    assert r.accepts("xx")
    assert not r.accepts("yxx")
    assert not r.accepts("xxy")

    assert build_recognizer(fixture("EX38"), D3).is_empty()


def test_dd_recognizer_languages():
    p56 = build_recognizer(fixture("P56"), DD3)
    assert p56.accepts("x")
    assert p56.accepts("xxy")
    assert not p56.accepts("xy")

    p55n = build_recognizer(fixture("P55n"), DD1)
    for w in support.all_words(("x", "y"), 4):
        assert p55n.accepts(w) == (bool(w) and w[-1] == "x")

    n44 = build_recognizer(fixture("N44"), DD1)
    for w in support.all_words(("x", "y"), 4):
        assert n44.accepts(w) == (bool(w) and w[0] == "x")

    p41a = fixture("P41a")
    assert build_recognizer(p41a, DD1).is_empty()
    for n in range(1, 6):
        assert is_directing(p41a, DD2, "x" * n)
        assert is_directing(p41a, DD3, "x" * n)


def test_directable_facts():
    assert not is_directable(fixture("EX38"), D3)
    assert is_directable(fixture("P61hG"), DD3)
    assert not is_directable(fixture("P61hG"), DD2)

    prod = direct_product(fixture("EX65F"), fixture("EX65G"))
    for kind in ALL_KINDS:
        assert not is_directable(prod, kind)

    # Incomplete automaton whose rows can all die: the empty rows agree, so it
    # is d2-directable at both levels but in no other sense.
    ex38 = fixture("EX38")
    assert is_directable(ex38, DD2)
    assert shortest_directing_word(ex38, DD2) == ("x", "y")
    assert is_directable(ex38, D2)
    for kind in (D1, D3, DD1, DD3):
        assert not is_directable(ex38, kind)

    g = fixture("P61cG")
    assert shortest_directing_word(g, D2) == ("x", "x")
    assert shortest_directing_word(g, DD2) == ("x", "x")
    for kind in (D1, D3, DD1, DD3):
        assert not is_directable(g, kind)


def test_shortest_words():
    assert shortest_directing_word(fixture("EX31"), D3) == ("x", "x")
    assert shortest_directing_word(fixture("P56"), DD3) == ("x",)
    assert shortest_directing_word(fixture("EX38"), D3) is None
    assert shortest_directing_word(fixture("N44"), DD1) == ("x",)
    assert shortest_directing_word(fixture("P55n"), DD1) == ("x",)
    assert shortest_directing_word(fixture("P61hG"), DD3) == ("x", "x")


def test_shortest_tie_breaks_on_alphabet_order():
    moves = {
        ("a", "x", "b"): "1",
        ("b", "x", "b"): "1",
        ("a", "y", "b"): "1",
        ("b", "y", "b"): "1",
    }
    f = Ffa(("a", "b"), ("x", "y"), moves)
    assert shortest_directing_word(f, D1) == ("x",)
    g = Ffa(("a", "b"), ("y", "x"), moves)
    assert shortest_directing_word(g, D1) == ("y",)


def test_recognizers_agree_with_definitions():
    for f in support.main_corpus()[:25]:
        nfa = ffa_to_nfa(f)
        for kind in ALL_KINDS:
            r = build_recognizer(f, kind)
            for w in support.all_words(f.alphabet, 3):
                direct = is_directing(f, kind, w)
                assert r.accepts(w) == direct
                if kind in D_KINDS:
                    assert nfa_is_directing(nfa, kind, w) == direct


def test_inclusion_chain():
    for f in support.main_corpus()[:40]:
        for w in support.all_words(f.alphabet, 3):
            flags = {kind: is_directing(f, kind, w) for kind in ALL_KINDS}
            if flags[DD1]:
                assert flags[D1] and flags[DD2] and flags[DD3]
            if flags[DD2]:
                assert flags[D2]
            if flags[DD3]:
                assert flags[D3]
            if flags[D1]:
                assert flags[D2] and flags[D3]


def test_crisp_collapse():
    pairs = ((DD1, D1), (DD2, D2), (DD3, D3))
    for f in support.crisp_corpus()[:40]:
        assert f.is_crisp()
        for w in support.all_words(f.alphabet, 3):
            for dd, d in pairs:
                assert is_directing(f, dd, w) == is_directing(f, d, w)


@given(st.lists(st.sampled_from("xy"), max_size=6))
def test_inclusion_chain_on_fixture_words(letters):
    w = tuple(letters)
    for name in ("N44", "P55n", "P56"):
        f = fixture(name)
        if is_directing(f, DD1, w):
            assert is_directing(f, D1, w)
            assert is_directing(f, DD2, w)
            assert is_directing(f, DD3, w)
        if is_directing(f, DD3, w):
            assert is_directing(f, D3, w)


def test_nfa_rejects_degree_kinds():
    nfa = ffa_to_nfa(fixture("EX31"))
    with pytest.raises(ValidationError):
        nfa_is_directing(nfa, DD2, "x")


def test_d3_merges():
    ex38 = fixture("EX38")
    assert d3_merges(ex38, "a", "b", "x")
    assert d3_merges(ex38, "b", "c", "y")
    assert d3_merges(ex38, "a", "c", "z")
    assert d3_merges(ex38, "a", "a", "")
    assert d3_merges(fixture("EX31"), "a", "c", "x")
    for f in support.main_corpus()[:15]:
        for w in support.all_words(f.alphabet, 2):
            for a in f.states:
                for b in f.states:
                    assert d3_merges(f, a, b, w) == d3_merges(f, b, a, w)


def test_inverted_table():
    inv = inverted_table(fixture("EX31"))
    assert inv[("b", "x")] == {"a", "c"}
    assert inv[("c", "x")] == {"b", "c"}
    assert inv[("b", "y")] == {"b"}
    assert inv[("c", "y")] == {"b"}
    assert inv[("a", "x")] == frozenset()
    assert set(inv) == {(s, x) for s in "abc" for x in "xy"}


def test_merge_decider_requires_completeness():
    with pytest.raises(IncompleteAutomatonError):
        d3_decide_by_merging(fixture("EX31"))
    with pytest.raises(IncompleteAutomatonError):
        d3_decide_by_merging(fixture("EX38"))
    with pytest.raises(IncompleteAutomatonError):
        mu_chain(fixture("EX38"))


def _cerny3():
    from fuzzdir import Dfa

    return Dfa(
        ("s0", "s1", "s2"),
        ("a", "b"),
        {
            ("s0", "a"): "s1",
            ("s1", "a"): "s2",
            ("s2", "a"): "s0",
            ("s0", "b"): "s1",
            ("s1", "b"): "s1",
            ("s2", "b"): "s2",
        },
    )


def test_merge_decider_on_reset_automaton():
    f = dfa_to_ffa(_cerny3())
    assert is_directing(f, D1, "baab")
    assert d3_decide_by_merging(f)
    assert is_directable(f, D3)
    assert mu_chain(f)[-1] == frozenset(
        (a, b) for a in f.states for b in f.states
    )


def test_merge_decider_negative():
    f = Ffa(("a", "b"), ("x",), {("a", "x", "a"): "1", ("b", "x", "b"): "1"})
    assert f.is_complete()
    assert not d3_decide_by_merging(f)
    assert not is_directable(f, D3)
    assert mu_chain(f)[-1] == frozenset({("a", "a"), ("b", "b")})


def test_merge_decider_matches_recognizer_on_corpus():
    for f in support.complete_corpus_300()[:80]:
        assert d3_decide_by_merging(f) == is_directable(f, D3)


def test_mu_chain_shape():
    for f in support.complete_corpus_300()[:60]:
        chain = mu_chain(f)
        n = len(f.states)
        diag = frozenset((a, a) for a in f.states)
        assert chain[0] == diag
        assert len(chain) <= n * (n - 1) // 2 + 1
        for prev, cur in zip(chain, chain[1:]):
            assert prev < cur
        for level in chain:
            assert diag <= level
            assert all((b, a) in level for (a, b) in level)
        full = frozenset((a, b) for a in f.states for b in f.states)
        assert (chain[-1] == full) == d3_decide_by_merging(f)


def test_state_cap_argument():
    with pytest.raises(StateCapError):
        build_d_recognizer(fixture("P41a"), D1, cap=1)
    with pytest.raises(StateCapError):
        build_dd_recognizer(fixture("EX31"), DD2, cap=2)
    with pytest.raises(ValidationError):
        build_d_recognizer(fixture("P41a"), D1, cap=0)
    r = build_d_recognizer(fixture("P41a"), D1, cap=2)
    assert len(r.states) == 2


def test_state_cap_env(monkeypatch):
    monkeypatch.delenv(STATE_CAP_ENV, raising=False)
    assert state_cap() == DEFAULT_STATE_CAP
    monkeypatch.setenv(STATE_CAP_ENV, "2")
    assert state_cap() == 2
    build_d_recognizer(fixture("P41a"), D1)
    monkeypatch.setenv(STATE_CAP_ENV, "1")
    with pytest.raises(StateCapError):
        build_d_recognizer(fixture("P41a"), D1)
    monkeypatch.setenv(STATE_CAP_ENV, "zero")
    with pytest.raises(ValidationError):
        state_cap()
    monkeypatch.setenv(STATE_CAP_ENV, "-3")
    with pytest.raises(ValidationError):
        state_cap()


def test_kind_dispatch_guards():
    with pytest.raises(ValidationError):
        build_d_recognizer(fixture("EX31"), DD1)
    with pytest.raises(ValidationError):
        build_dd_recognizer(fixture("EX31"), D1)


def test_plain_string_kinds_accepted():
    # every public entry point takes "dd2" as readily as DirectingKind.DD2
    f = fixture("EX31")
    assert is_directing(f, "d3", "xx")
    assert is_directing(f, "dd2", "xxxy")
    assert nfa_is_directing(ffa_to_nfa(f), "d2", "xxx")
    assert shortest_directing_word(f, "dd3") == ("x", "x")
    assert not build_recognizer(f, "d1").finals
    assert trap_state_check(f, "dd2")
    with pytest.raises(ValidationError):
        is_directing(f, "d9", "x")


def test_reachable_matrix_entries_stay_in_degree_set():
    for f in list(support.main_corpus()[:30]) + [fixture("EX31"), fixture("P61hG")]:
        allowed = set(f.transitions.values()) | {0, 1}
        for mat in reachable_matrices(f):
            for row in mat.entries:
                for v in row:
                    assert v in allowed
