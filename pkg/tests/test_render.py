"""DOT text generation and figure rendering (headless backend)."""

from fuzzdir import (
    DirectingKind,
    build_recognizer,
    classify,
    dfr_to_dot,
    ffa_to_dot,
    fixture,
    minimize,
)
from fuzzdir.plotting import plot_class_lattice, plot_recognizer


def test_dfr_dot_structure():
    r = minimize(build_recognizer(fixture("N44"), DirectingKind.DD1))
    dot = dfr_to_dot(r, name="dd1")
    assert dot.startswith('digraph "dd1" {')
    assert dot.rstrip().endswith("}")
    assert '__start -> "m0";' in dot
    assert dot.count("doublecircle") == 1
    # one merged edge may carry several letters
    assert 'label="x,y"' in dot or 'label="y,x"' in dot


def test_dfr_dot_includes_structure_labels():
    r = build_recognizer(fixture("P41a"), DirectingKind.D2)
    dot = dfr_to_dot(r)
    assert "q0" in dot and "{{a},{b}}" in dot


def test_ffa_dot_lists_degrees():
    dot = ffa_to_dot(fixture("EX31"))
    assert '"a" -> "b"' in dot
    assert "x:3/10" in dot
    assert "y:1/2" in dot


def test_lattice_figure_written(tmp_path):
    target = tmp_path / "lattice.png"
    plot_class_lattice(classify(fixture("P61cF")), target, title="demo")
    assert target.exists() and target.stat().st_size > 1000


def test_lattice_figure_with_cap_unknowns(tmp_path):
    target = tmp_path / "capped.png"
    plot_class_lattice(classify(fixture("EX31"), cap=1), target)
    assert target.exists() and target.stat().st_size > 1000


def test_recognizer_figure_written(tmp_path):
    target = tmp_path / "recognizer.png"
    r = minimize(build_recognizer(fixture("P56"), DirectingKind.DD3))
    plot_recognizer(r, target, title="dd3 words")
    assert target.exists() and target.stat().st_size > 1000
