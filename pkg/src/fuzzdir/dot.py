"""DOT (Graphviz) text generation for recognizers and fuzzy automata.

Plain text generation, no graphviz dependency; the output renders with any
standard dot tool. State labels longer than a name (families, matrices,
minimization blocks) are attached as node labels when present.
"""

from __future__ import annotations

from typing import Dict, List

from .automata import Dfr, Ffa
from .degrees import format_degree


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def dfr_to_dot(dfr: Dfr, name: str = "recognizer") -> str:
    """Recognizer graph: doublecircle finals, arrow into the initial state,
    one edge per (source, target) with the letters joined on the label."""
    lines: List[str] = [f"digraph {_quote(name)} {{", "  rankdir=LR;"]
    lines.append('  __start [shape=point, label=""];')
    for q in dfr.states:
        shape = "doublecircle" if q in dfr.finals else "circle"
        label = dfr.labels.get(q)
        if label:
            lines.append(
                f"  {_quote(q)} [shape={shape}, label={_quote(q + chr(10) + label)}];"
            )
        else:
            lines.append(f"  {_quote(q)} [shape={shape}];")
    lines.append(f"  __start -> {_quote(dfr.initial)};")
    merged: Dict[tuple, List[str]] = {}
    for q in dfr.states:
        for x in dfr.alphabet:
            t = dfr.dfa.delta[(q, x)]
            merged.setdefault((q, t), []).append(x)
    for (q, t), letters in merged.items():
        lines.append(
            f"  {_quote(q)} -> {_quote(t)} [label={_quote(','.join(letters))}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def ffa_to_dot(ffa: Ffa, name: str = "automaton") -> str:
    """Fuzzy automaton graph; edge labels carry letter and degree."""
    lines: List[str] = [f"digraph {_quote(name)} {{", "  rankdir=LR;"]
    for a in ffa.states:
        lines.append(f"  {_quote(a)} [shape=circle];")
    merged: Dict[tuple, List[str]] = {}
    for a in ffa.states:
        for x in ffa.alphabet:
            for b, d in ffa.successors(a, x):
                merged.setdefault((a, b), []).append(f"{x}:{format_degree(d)}")
    for (a, b), tags in merged.items():
        lines.append(
            f"  {_quote(a)} -> {_quote(b)} [label={_quote(chr(10).join(tags))}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
