"""Command-line interface.

Subcommands cover deciding directability, enumerating and finding directing
words, exporting recognizers, lattice classification with optional figures
and CSV, the closure-law report, and the automaton constructions (product,
restriction, image, random generation). Exit codes: 0 on success, 1 when an
analysis came out negative and --fail-if-not was given, 2 on input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import List, Optional, Sequence

from .algebra import direct_product, epimorphic_image, subautomaton_induced
from .automata import Ffa, Nfa, Word, format_word
from .classify import CLASS_NAMES, ClassificationReport, classify
from .degrees import parse_degree
from .directability import (
    DirectingKind,
    build_recognizer,
    d3_decide_by_merging,
)
from .dot import dfr_to_dot
from .errors import FuzzdirError, ValidationError
from .fileformat import load_automaton, serialize_automaton
from .fixtures import fixture, fixture_names
from .generate import GeneratorConfig, generate
from .languages import (
    CLOSURE_LAWS,
    check_closure_equations,
    enumerate_directing_words,
    minimize,
)
from .reductions import dfa_to_ffa, nfa_to_ffa


def _load_ffa(path: str) -> Ffa:
    """Load a file and lift nfa/dfa content to a fuzzy automaton."""
    auto = load_automaton(path)
    if isinstance(auto, Ffa):
        return auto
    if isinstance(auto, Nfa):
        return nfa_to_ffa(auto)
    return dfa_to_ffa(auto)


def _print_json(payload) -> None:
    print(json.dumps(payload, indent=2))


def _word_text(word: Optional[Word]) -> str:
    return "none" if word is None else format_word(word)


def _word_json(word: Optional[Word]):
    if word is None:
        return None
    return "".join(word) if all(len(x) == 1 for x in word) else " ".join(word)


def _write_output(text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _cmd_decide(args) -> int:
    ffa = _load_ffa(args.file)
    kind = DirectingKind.parse(args.kind)
    method = "recognizer" if args.method == "powerset" else args.method
    if method == "merge":
        if kind is not DirectingKind.D3:
            raise ValidationError("the merge method decides d3 only")
        verdict = d3_decide_by_merging(ffa)
        shortest = None
    else:
        shortest = build_recognizer(ffa, kind).shortest_accepted()
        verdict = shortest is not None
    if args.format == "json":
        _print_json(
            {
                "file": args.file,
                "kind": kind.value,
                "method": method,
                "directable": verdict,
                "shortest": _word_json(shortest),
            }
        )
    else:
        line = f"directable: {str(verdict).lower()}"
        if verdict and shortest is not None:
            line += f"; shortest: {format_word(shortest)}"
        print(line)
    if args.fail_if_not and not verdict:
        return 1
    return 0


def _cmd_words(args) -> int:
    ffa = _load_ffa(args.file)
    kind = DirectingKind.parse(args.kind)
    words = enumerate_directing_words(ffa, kind, args.max_len)
    if args.format == "json":
        _print_json(
            {
                "file": args.file,
                "kind": kind.value,
                "max_len": args.max_len,
                "words": [_word_json(w) for w in words],
            }
        )
    else:
        for w in words:
            print(format_word(w))
    return 0


def _cmd_shortest(args) -> int:
    ffa = _load_ffa(args.file)
    kind = DirectingKind.parse(args.kind)
    word = build_recognizer(ffa, kind).shortest_accepted()
    if args.format == "json":
        _print_json(
            {"file": args.file, "kind": kind.value, "shortest": _word_json(word)}
        )
    else:
        print(f"shortest: {_word_text(word)}")
    return 0


def _cmd_recognizer(args) -> int:
    ffa = _load_ffa(args.file)
    kind = DirectingKind.parse(args.kind)
    rec = build_recognizer(ffa, kind)
    if args.minimize:
        rec = minimize(rec)
    if args.emit_dot is not None:
        _write_output(dfr_to_dot(rec, name=f"{kind.value}_recognizer"), args.emit_dot)
    if args.plot is not None:
        from .plotting import plot_recognizer

        plot_recognizer(rec, args.plot, title=f"{kind.value} recognizer")
    shortest = rec.shortest_accepted()
    summary = {
        "file": args.file,
        "kind": kind.value,
        "states": len(rec.states),
        "finals": len(rec.finals),
        "initial": rec.initial,
        "empty": shortest is None,
        "shortest": _word_json(shortest),
        "minimized": bool(args.minimize),
    }
    if args.format == "json":
        _print_json(summary)
    elif args.emit_dot != "-":
        print(f"states: {summary['states']}")
        print(f"finals: {summary['finals']}")
        print(f"initial: {summary['initial']}")
        print(f"empty: {str(summary['empty']).lower()}")
        print(f"shortest: {_word_text(shortest)}")
    return 0


def _report_lines(name: str, report: ClassificationReport) -> List[str]:
    lines = [f"{name}:"]
    flags = ", ".join(
        flag
        for flag, value in (
            ("complete", report.complete),
            ("normal", report.normal),
            ("crisp", report.crisp),
            ("deterministic", report.deterministic),
        )
        if value
    )
    lines.append(f"  flags: {flags if flags else '(none)'}")
    for kind in DirectingKind:
        verdict = report.directable[kind]
        if verdict is None:
            lines.append(f"  {kind.value}: undecided ({report.errors[kind.value]})")
        elif verdict:
            lines.append(
                f"  {kind.value}: directable, shortest "
                f"{format_word(report.shortest[kind])}"
            )
        else:
            lines.append(f"  {kind.value}: not directable")
    members = [c for c in CLASS_NAMES if report.classes[c]]
    lines.append(f"  classes: {', '.join(members) if members else '(none)'}")
    return lines


def _csv_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    return str(value)


def _cmd_classify(args) -> int:
    rows = []
    for path in args.files:
        ffa = _load_ffa(path)
        report = classify(ffa)
        rows.append((path, ffa, report))
        if args.figures:
            os.makedirs(args.figures, exist_ok=True)
            from .plotting import plot_class_lattice

            stem = os.path.splitext(os.path.basename(path))[0]
            plot_class_lattice(
                report,
                os.path.join(args.figures, f"{stem}_classes.png"),
                title=stem,
            )
    if args.format == "json":
        payload = []
        for path, _ffa_obj, report in rows:
            entry = {"file": path}
            entry.update(report.to_json_dict())
            payload.append(entry)
        _print_json(payload[0] if len(payload) == 1 else payload)
    elif args.format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer)
        header = (
            ["file", "states", "letters", "complete", "normal", "crisp", "deterministic"]
            + [k.value for k in DirectingKind]
            + [f"shortest_{k.value}" for k in DirectingKind]
            + list(CLASS_NAMES)
        )
        writer.writerow(header)
        for path, ffa_obj, report in rows:
            writer.writerow(
                [
                    path,
                    len(ffa_obj.states),
                    len(ffa_obj.alphabet),
                    _csv_value(report.complete),
                    _csv_value(report.normal),
                    _csv_value(report.crisp),
                    _csv_value(report.deterministic),
                ]
                + [_csv_value(report.directable[k]) for k in DirectingKind]
                + [
                    _csv_value(_word_json(report.shortest[k]))
                    for k in DirectingKind
                ]
                + [_csv_value(report.classes[c]) for c in CLASS_NAMES]
            )
        sys.stdout.write(buffer.getvalue())
    else:
        for i, (path, _ffa_obj, report) in enumerate(rows):
            if i:
                print()
            for line in _report_lines(path, report):
                print(line)
    return 0


def _cmd_check_laws(args) -> int:
    ffa = _load_ffa(args.file)
    report = check_closure_equations(ffa)
    if args.format == "json":
        _print_json(
            {
                "file": args.file,
                "normal": report.normal,
                "laws": {
                    law: {
                        "holds": report.results[law],
                        "witness": _word_json(report.witnesses[law]),
                    }
                    for law in CLOSURE_LAWS
                },
            }
        )
    else:
        print(f"normal: {str(report.normal).lower()}")
        for law in CLOSURE_LAWS:
            if report.results[law]:
                print(f"{law}: holds")
            else:
                witness = format_word(report.witnesses[law])
                print(f"{law}: fails (witness: {witness})")
    return 0


def _cmd_product(args) -> int:
    left = _load_ffa(args.left)
    right = _load_ffa(args.right)
    _write_output(serialize_automaton(direct_product(left, right)), args.output)
    return 0


def _cmd_restrict(args) -> int:
    ffa = _load_ffa(args.file)
    subset = [s for s in args.states.split(",") if s]
    _write_output(serialize_automaton(subautomaton_induced(ffa, subset)), args.output)
    return 0


def _parse_state_map(text: str) -> dict:
    mapping = {}
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        if "=" not in piece:
            raise ValidationError(
                f"bad map entry {piece!r}; expected source=target"
            )
        src, dst = piece.split("=", 1)
        if src in mapping:
            raise ValidationError(f"duplicate map entry for {src!r}")
        mapping[src.strip()] = dst.strip()
    if not mapping:
        raise ValidationError("empty state map")
    return mapping


def _cmd_image(args) -> int:
    ffa = _load_ffa(args.file)
    mapping = _parse_state_map(args.map)
    _write_output(serialize_automaton(epimorphic_image(ffa, mapping)), args.output)
    return 0


def _cmd_gen(args) -> int:
    palette = tuple(
        parse_degree(tok) for tok in args.palette.split(",") if tok.strip()
    )
    config = GeneratorConfig(
        state_count=args.states,
        letter_count=args.letters,
        palette=palette,
        seed=args.seed,
        complete=args.complete,
        normal=args.normal,
        crisp=args.crisp,
    )
    _write_output(serialize_automaton(generate(config)), args.output)
    return 0


def _cmd_fixtures(args) -> int:
    names = [args.name] if args.name else fixture_names()
    if args.name:
        fixture(args.name)  # validate early for a clean error
    if args.write_dir is not None:
        os.makedirs(args.write_dir, exist_ok=True)
        for name in names:
            path = os.path.join(args.write_dir, f"{name}.ffa")
            with open(path, "w", encoding="utf-8") as handle:
                handle.write(serialize_automaton(fixture(name)))
            print(path)
        return 0
    if args.name:
        sys.stdout.write(serialize_automaton(fixture(args.name)))
        return 0
    for name in names:
        ffa = fixture(name)
        print(
            f"{name}: {len(ffa.states)} states, {len(ffa.alphabet)} letters, "
            f"{len(ffa.transitions)} moves"
        )
    return 0


def _add_format(parser, *, csv_too: bool = False) -> None:
    choices = ["text", "json"] + (["csv"] if csv_too else [])
    parser.add_argument(
        "--format", choices=choices, default="text", help="output format"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzdir",
        description=(
            "Directing words and directability classes of fuzzy finite "
            "automata. Input files use the line-oriented automaton format; "
            "nfa and dfa files are lifted to fuzzy automata where a fuzzy "
            "one is needed."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide directability of one kind")
    p.add_argument("file")
    p.add_argument("--kind", required=True, help="d1, d2, d3, dd1, dd2 or dd3")
    p.add_argument(
        "--method",
        choices=["recognizer", "powerset", "merge"],
        default="recognizer",
        help="recognizer/powerset build the word recognizer; merge runs the "
        "pair-merging procedure (d3, complete automata only)",
    )
    p.add_argument(
        "--fail-if-not",
        action="store_true",
        help="exit with status 1 when the automaton is not directable",
    )
    _add_format(p)
    p.set_defaults(func=_cmd_decide)

    p = sub.add_parser("words", help="enumerate directing words up to a length")
    p.add_argument("file")
    p.add_argument("--kind", required=True)
    p.add_argument("--max-len", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_words)

    p = sub.add_parser("shortest", help="shortest directing word of one kind")
    p.add_argument("file")
    p.add_argument("--kind", required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_shortest)

    p = sub.add_parser("recognizer", help="build the directing-word recognizer")
    p.add_argument("file")
    p.add_argument("--kind", required=True)
    p.add_argument("--minimize", action="store_true", help="minimize before output")
    p.add_argument(
        "--emit-dot",
        metavar="PATH",
        help="write DOT text to PATH ('-' for standard output)",
    )
    p.add_argument("--plot", metavar="PATH", help="render a figure to PATH")
    _add_format(p)
    p.set_defaults(func=_cmd_recognizer)

    p = sub.add_parser("classify", help="full class-lattice classification")
    p.add_argument("files", nargs="+")
    p.add_argument(
        "--figures",
        metavar="DIR",
        help="render a class-lattice figure per input into DIR",
    )
    _add_format(p, csv_too=True)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("check-laws", help="ideal-closure laws of the dd languages")
    p.add_argument("file")
    _add_format(p)
    p.set_defaults(func=_cmd_check_laws)

    p = sub.add_parser("product", help="direct product of two automata")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("-o", "--output", help="output file (default: stdout)")
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("restrict", help="restrict to a transition-closed subset")
    p.add_argument("file")
    p.add_argument(
        "--states", required=True, help="comma-separated state subset"
    )
    p.add_argument("-o", "--output", help="output file (default: stdout)")
    p.set_defaults(func=_cmd_restrict)

    p = sub.add_parser("image", help="epimorphic image under a state map")
    p.add_argument("file")
    p.add_argument(
        "--map",
        required=True,
        help="comma-separated source=target pairs covering all states",
    )
    p.add_argument("-o", "--output", help="output file (default: stdout)")
    p.set_defaults(func=_cmd_image)

    p = sub.add_parser("gen", help="generate a seeded random automaton")
    p.add_argument("--states", type=int, required=True)
    p.add_argument("--letters", type=int, required=True)
    p.add_argument(
        "--palette",
        default="0,1/5,1/2,1",
        help="comma-separated degree literals (default: 0,1/5,1/2,1)",
    )
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--complete", action="store_true")
    p.add_argument("--normal", action="store_true")
    p.add_argument("--crisp", action="store_true")
    p.add_argument("-o", "--output", help="output file (default: stdout)")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("fixtures", help="list or print the built-in automata")
    p.add_argument("name", nargs="?", help="print this fixture as a file")
    p.add_argument(
        "--write-dir", metavar="DIR", help="write fixture files into DIR"
    )
    p.set_defaults(func=_cmd_fixtures)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FuzzdirError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def app() -> None:
    sys.exit(main())


if __name__ == "__main__":
    app()
