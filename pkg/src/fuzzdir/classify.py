"""Directability classification of one automaton.

The report gathers structural flags, per-kind directability with shortest
witnesses, and membership in the seven classes of the inclusion lattice: the
three degree-level classes, their normal refinements, and the deterministic
class at the bottom.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional

from .automata import Ffa, Word
from .directability import (
    ALL_KINDS,
    DirectingKind,
    build_recognizer,
)
from .errors import StateCapError

CLASS_NAMES = ("DD1", "DD2", "DD3", "nDD1", "nDD2", "nDD3", "Dir")


@dataclass
class ClassificationReport:
    """Everything `classify` learns about one automaton.

    `directable` and `shortest` are keyed by kind; a None value means the
    analysis hit the state cap and the corresponding message sits in
    `errors`. Class membership follows from these: nDDi adds normality,
    Dir additionally demands the automaton be a deterministic one.
    """

    complete: bool
    normal: bool
    crisp: bool
    deterministic: bool
    directable: Dict[DirectingKind, Optional[bool]] = field(default_factory=dict)
    shortest: Dict[DirectingKind, Optional[Word]] = field(default_factory=dict)
    classes: Dict[str, Optional[bool]] = field(default_factory=dict)
    errors: Dict[str, str] = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        """JSON-ready view: kinds as strings, words formatted, None kept."""

        def word_out(w: Optional[Word]) -> Optional[str]:
            return None if w is None else "".join(w) if all(len(x) == 1 for x in w) else " ".join(w)

        return {
            "complete": self.complete,
            "normal": self.normal,
            "crisp": self.crisp,
            "deterministic": self.deterministic,
            "directable": {k.value: v for k, v in self.directable.items()},
            "shortest": {
                k.value: word_out(w) for k, w in self.shortest.items()
            },
            "classes": dict(self.classes),
            "errors": dict(self.errors),
        }


def classify(ffa: Ffa, cap: Optional[int] = None) -> ClassificationReport:
    """Build the full report; a per-kind cap overrun is recorded, not raised,
    so one runaway recognizer does not void the rest of the report."""
    report = ClassificationReport(
        complete=ffa.is_complete(),
        normal=ffa.is_normal(),
        crisp=ffa.is_crisp(),
        deterministic=ffa.is_deterministic(),
    )
    for kind in ALL_KINDS:
        try:
            word = build_recognizer(ffa, kind, cap).shortest_accepted()
        except StateCapError as exc:
            report.directable[kind] = None
            report.shortest[kind] = None
            report.errors[kind.value] = str(exc)
            continue
        report.directable[kind] = word is not None
        report.shortest[kind] = word

    def normal_and(kind: DirectingKind) -> Optional[bool]:
        base = report.directable[kind]
        return None if base is None else (base and report.normal)

    report.classes["DD1"] = report.directable[DirectingKind.DD1]
    report.classes["DD2"] = report.directable[DirectingKind.DD2]
    report.classes["DD3"] = report.directable[DirectingKind.DD3]
    report.classes["nDD1"] = normal_and(DirectingKind.DD1)
    report.classes["nDD2"] = normal_and(DirectingKind.DD2)
    report.classes["nDD3"] = normal_and(DirectingKind.DD3)
    if not report.deterministic:
        report.classes["Dir"] = False
    else:
        d1 = report.directable[DirectingKind.D1]
        report.classes["Dir"] = d1
    return report
