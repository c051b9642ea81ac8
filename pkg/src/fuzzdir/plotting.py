"""Matplotlib figures for classification reports and recognizers.

Two renderers: the inclusion lattice of the seven directability classes with
the automaton's memberships colored in, and a simple circular drawing of a
recognizer graph. Both write image files; the CLI report path calls them so
classification runs can drop figures next to their delimited output.
"""

from __future__ import annotations

import math
from typing import Dict, Optional, Tuple

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import FancyArrowPatch

from .automata import Dfr
from .classify import ClassificationReport

# Hand-placed Hasse diagram of the class inclusions; higher means larger.
# The joint class sits between the two degree-level classes it refines.
_LATTICE_POS: Dict[str, Tuple[float, float]] = {
    "DD2": (0.0, 4.0),
    "DD3": (2.0, 4.0),
    "DD2&DD3": (1.0, 3.0),
    "nDD3": (3.0, 3.0),
    "DD1": (0.0, 2.0),
    "nDD2": (2.0, 2.0),
    "nDD1": (1.0, 1.0),
    "Dir": (1.0, 0.0),
}

_LATTICE_EDGES = (
    ("DD2&DD3", "DD2"),
    ("DD2&DD3", "DD3"),
    ("nDD3", "DD3"),
    ("DD1", "DD2&DD3"),
    ("nDD2", "DD2&DD3"),
    ("nDD2", "nDD3"),
    ("nDD1", "DD1"),
    ("nDD1", "nDD2"),
    ("Dir", "nDD1"),
)

_IN_COLOR = "#7fc97f"
_OUT_COLOR = "#dddddd"
_UNKNOWN_COLOR = "#fdc086"


def _membership(report: ClassificationReport, node: str) -> Optional[bool]:
    if node == "DD2&DD3":
        a = report.classes["DD2"]
        b = report.classes["DD3"]
        if a is None or b is None:
            return None
        return a and b
    return report.classes[node]


def plot_class_lattice(
    report: ClassificationReport, path, title: Optional[str] = None
) -> None:
    """Render the class lattice with this automaton's memberships filled in.

    Green: the automaton is in the class; grey: it is not; orange: unknown
    because the analysis hit the state cap.
    """
    fig, ax = plt.subplots(figsize=(6.5, 6.0))
    for low, high in _LATTICE_EDGES:
        x1, y1 = _LATTICE_POS[low]
        x2, y2 = _LATTICE_POS[high]
        ax.plot([x1, x2], [y1, y2], color="0.55", linewidth=1.2, zorder=1)
    for node, (x, y) in _LATTICE_POS.items():
        member = _membership(report, node)
        color = (
            _UNKNOWN_COLOR
            if member is None
            else _IN_COLOR if member else _OUT_COLOR
        )
        ax.scatter([x], [y], s=2400, c=color, edgecolors="0.25", zorder=2)
        ax.annotate(
            node, (x, y), ha="center", va="center", fontsize=10, zorder=3
        )
    ax.set_xlim(-0.8, 3.8)
    ax.set_ylim(-0.8, 4.8)
    ax.axis("off")
    if title:
        ax.set_title(title)
    handles = [
        plt.Line2D([], [], marker="o", linestyle="", markersize=10,
                   markerfacecolor=c, markeredgecolor="0.25", label=t)
        for c, t in (
            (_IN_COLOR, "member"),
            (_OUT_COLOR, "not a member"),
            (_UNKNOWN_COLOR, "undecided (cap)"),
        )
    ]
    ax.legend(handles=handles, loc="lower right", frameon=False, fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_recognizer(dfr: Dfr, path, title: Optional[str] = None) -> None:
    """Draw the recognizer on a circle: finals double-ringed, initial marked,
    edges labeled with their letters. Meant for small machines; big ones are
    better served by the DOT export."""
    states = dfr.reachable_states()
    n = len(states)
    pos = {
        q: (math.cos(2 * math.pi * i / n - math.pi / 2),
            math.sin(2 * math.pi * i / n - math.pi / 2))
        for i, q in enumerate(states)
    }
    fig, ax = plt.subplots(figsize=(7.0, 7.0))
    merged: Dict[tuple, list] = {}
    for q in states:
        for x in dfr.alphabet:
            t = dfr.dfa.delta[(q, x)]
            merged.setdefault((q, t), []).append(x)
    for (q, t), letters in merged.items():
        x1, y1 = pos[q]
        if q == t:
            ax.annotate(
                ",".join(letters),
                (x1 * 1.22, y1 * 1.22),
                ha="center",
                va="center",
                fontsize=8,
                color="0.3",
            )
            circle = plt.Circle(
                (x1 * 1.12, y1 * 1.12), 0.055, fill=False, color="0.45"
            )
            ax.add_patch(circle)
            continue
        x2, y2 = pos[t]
        arrow = FancyArrowPatch(
            (x1, y1),
            (x2, y2),
            connectionstyle="arc3,rad=0.15",
            arrowstyle="-|>",
            mutation_scale=14,
            shrinkA=16,
            shrinkB=16,
            color="0.45",
        )
        ax.add_patch(arrow)
        ax.annotate(
            ",".join(letters),
            ((x1 + x2) / 2 + 0.12 * (y2 - y1), (y1 + y2) / 2 - 0.12 * (x2 - x1)),
            ha="center",
            va="center",
            fontsize=8,
            color="0.3",
        )
    for q in states:
        x, y = pos[q]
        ax.scatter([x], [y], s=900, c="#eef3fb", edgecolors="0.2", zorder=3)
        if q in dfr.finals:
            ring = plt.Circle((x, y), 0.085, fill=False, color="0.2", zorder=4)
            ax.add_patch(ring)
        ax.annotate(q, (x, y), ha="center", va="center", fontsize=9, zorder=5)
    ix, iy = pos[dfr.initial]
    ax.annotate(
        "start",
        xy=(ix, iy),
        xytext=(ix * 1.38, iy * 1.38),
        ha="center",
        va="center",
        fontsize=9,
        arrowprops={"arrowstyle": "-|>", "color": "0.2", "shrinkB": 18},
    )
    ax.set_xlim(-1.5, 1.5)
    ax.set_ylim(-1.5, 1.5)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
