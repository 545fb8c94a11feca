"""Command-line interface.

Exit codes: 0 yes/success, 1 no, 2 unknown, 64 usage error, 65 input
error, 69 inconclusive oracle.  Monoid words on the command line are
lowercase strings; group words may use uppercase letters for inverses;
the empty word is spelled ``-``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import decision
from .cwords import (
    check_properties,
    distinguish,
    generate_c_words,
    make_tuple,
    tuple_index,
)
from .errors import (
    AlphabetMismatchError,
    EmptyRelatorError,
    NotK211Error,
    OracleInconclusiveError,
    PresentationSyntaxError,
    RelationTooLongError,
    SpecialMonoidsError,
    UnknownGeneratorError,
)
from .oracle import Budget
from .presentation import parse_group_relators, parse_presentation
from .smallcancel import dehn_reduce, decide_identity, k_alpha_check
from .verdict import Verdict
from .words import symmetrize, text_to_group_word, text_to_word, word_to_text

EX_OK = 0
EX_NO = 1
EX_UNKNOWN = 2
EX_USAGE = 64
EX_INPUT = 65
EX_ORACLE = 69

_INPUT_ERRORS = (
    PresentationSyntaxError,
    RelationTooLongError,
    EmptyRelatorError,
    NotK211Error,
    OSError,
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


class _Report:
    """Accumulates the human-readable report and the machine object."""

    def __init__(self, command: str, as_json: bool):
        self.command = command
        self.as_json = as_json
        self.lines: list[str] = []
        self.details: dict = {}
        self.verdict: str | None = None

    def line(self, text: str):
        self.lines.append(text)

    def emit(self, stream=None):
        stream = stream or sys.stdout
        if self.as_json:
            obj = {
                "command": self.command,
                "verdict": self.verdict,
                "details": self.details,
            }
            print(json.dumps(obj, sort_keys=True), file=stream)
        else:
            for text in self.lines:
                print(text, file=stream)


def _verdict_exit(v: Verdict) -> int:
    return {Verdict.YES: EX_OK, Verdict.NO: EX_NO, Verdict.UNKNOWN: EX_UNKNOWN}[v]


def _budget(args) -> Budget:
    return Budget(max_len=args.max_len, max_states=args.max_states)


def _load_presentation(path: str):
    with open(path, encoding="utf-8") as handle:
        return parse_presentation(handle.read())


def _load_relators(path: str):
    with open(path, encoding="utf-8") as handle:
        return parse_group_relators(handle.read())


def _distinguished_tuple(args):
    p = _load_presentation(args.file)
    return distinguish(make_tuple(p, _budget(args)))


def _bool_verdict(report: _Report, flag: bool, yes: str, no: str) -> int:
    report.verdict = "yes" if flag else "no"
    report.line(yes if flag else no)
    return EX_OK if flag else EX_NO


def _group_presentation_lines(gp) -> list[str]:
    gens = " ".join(f"g{i}" for i in range(1, gp.num_generators + 1))
    rels = [
        " ".join(f"g{g}" for g in rel) + " = 1" for rel in gp.relations
    ]
    lines = [f"generators: {gens if gens else '(none)'}"]
    lines += [f"relation: {r}" for r in rels]
    return lines


def _cmd_analyze(args) -> int:
    report = _Report("analyze", args.json)
    p = _load_presentation(args.file)
    t = make_tuple(p, _budget(args))
    cs = generate_c_words(t)
    flags = check_properties(t, cs)
    idx = tuple_index(t)
    report.line(f"B-words: {', '.join(word_to_text(w) for w in t.cwords) or '(none)'}")
    report.line("derived group:")
    for line in _group_presentation_lines(t.gamma):
        report.line("  " + line)
    for i, fam in enumerate(cs.families):
        members = ", ".join(word_to_text(c) for c in sorted(fam))
        report.line(f"family of {word_to_text(t.cwords[i])}: {{{members}}}")
    report.line(f"index: ({idx.alpha}, {idx.beta})")
    report.line(
        "properties: "
        f"I={'yes' if flags.length_preserving else 'no'} "
        f"II={'yes' if flags.families_disjoint else 'no'} "
        f"III={'yes' if flags.non_overlapping else 'no'}"
    )
    d = distinguish(t)
    didx = tuple_index(d)
    report.line("distinguished tuple:")
    report.line(
        "  relations: "
        + (", ".join(word_to_text(r) for r in d.presentation.relations) or "(none)")
    )
    report.line(
        "  C-words: " + (", ".join(word_to_text(w) for w in d.cwords) or "(none)")
    )
    report.line(f"  index: ({didx.alpha}, {didx.beta})")
    report.line(f"  oracle backend: {d.oracle.backend_name}")
    report.verdict = "yes"
    report.details = {
        "b_words": [word_to_text(w) for w in t.cwords],
        "gamma_relations": [list(r) for r in t.gamma.relations],
        "index": [idx.alpha, idx.beta],
        "properties": {
            "I": flags.length_preserving,
            "II": flags.families_disjoint,
            "III": flags.non_overlapping,
        },
        "distinguished": {
            "relations": [word_to_text(r) for r in d.presentation.relations],
            "c_words": [word_to_text(w) for w in d.cwords],
            "index": [didx.alpha, didx.beta],
        },
    }
    report.emit()
    return EX_OK


def _cmd_wp(args) -> int:
    report = _Report("wp", args.json)
    t = _distinguished_tuple(args)
    x = text_to_word(args.x, t.presentation.alphabet)
    y = text_to_word(args.y, t.presentation.alphabet)
    equal = decision.words_equal(x, y, t)
    report.details = {"x": args.x, "y": args.y}
    code = _bool_verdict(report, equal, "equal", "not equal")
    report.emit()
    return code


def _cmd_div(args, left: bool) -> int:
    report = _Report("divl" if left else "divr", args.json)
    t = _distinguished_tuple(args)
    x = text_to_word(args.x, t.presentation.alphabet)
    y = text_to_word(args.y, t.presentation.alphabet)
    fn = decision.divides_left if left else decision.divides_right
    ok = fn(x, y, t)
    side = "left" if left else "right"
    report.details = {"x": args.x, "y": args.y, "side": side}
    code = _bool_verdict(
        report, ok, f"{side} divisible", f"not {side} divisible"
    )
    report.emit()
    return code


def _cmd_inv(args) -> int:
    report = _Report("inv", args.json)
    t = _distinguished_tuple(args)
    x = text_to_word(args.x, t.presentation.alphabet)
    ok = decision.is_invertible(x, t)
    report.details = {"x": args.x}
    code = _bool_verdict(report, ok, "invertible", "not invertible")
    report.emit()
    return code


def _cmd_maxgroup(args) -> int:
    report = _Report("maxgroup", args.json)
    t = _distinguished_tuple(args)
    gp = decision.maximal_subgroup(t)
    report.line("maximal subgroup:")
    for line in _group_presentation_lines(gp):
        report.line("  " + line)
    report.verdict = "yes"
    report.details = {
        "generators": gp.num_generators,
        "relations": [list(r) for r in gp.relations],
    }
    report.emit()
    return EX_OK


def _cmd_kcheck(args) -> int:
    report = _Report("kcheck", args.json)
    alphabet, relators = _load_relators(args.file)
    try:
        alpha = Fraction(args.alpha)
    except (ValueError, ZeroDivisionError) as exc:
        raise _UsageError(f"bad --alpha value {args.alpha!r}: {exc}")
    sym = symmetrize(relators)
    rep = k_alpha_check(sym, alpha)
    report.verdict = "yes" if rep.passed else "no"
    report.line(f"symmetrized set: {len(sym.relators)} relators, max length {sym.d}")
    if rep.worst:
        ri, rj, c = rep.worst
        report.line(
            f"worst pair: {word_to_text(ri)} * {word_to_text(rj)} cancels {c} letters"
            f" (threshold {alpha} * {len(ri)})"
        )
    report.line("passed" if rep.passed else "failed")
    report.details = {
        "alpha": str(alpha),
        "passed": rep.passed,
        "relators": len(sym.relators),
        "max_cancelled": rep.max_cancelled,
        "worst_pair": [word_to_text(rep.worst[0]), word_to_text(rep.worst[1])]
        if rep.worst
        else None,
    }
    report.emit()
    return EX_OK if rep.passed else EX_NO


def _cmd_dehn(args) -> int:
    report = _Report("dehn", args.json)
    alphabet, relators = _load_relators(args.file)
    w = text_to_group_word(args.word, alphabet)
    sym = symmetrize(relators)
    state = dehn_reduce(w, sym)
    report.line(f"fixpoint: {word_to_text(state.word)}")
    for step in state.log:
        report.line(
            f"  {step.op} @ {step.position}: "
            f"{word_to_text(step.removed)} -> {word_to_text(step.inserted)} "
            f"(length {step.length_after})"
        )
    report.verdict = "yes"
    report.details = {
        "fixpoint": word_to_text(state.word),
        "steps": [
            {
                "op": s.op,
                "position": s.position,
                "removed": word_to_text(s.removed),
                "inserted": word_to_text(s.inserted),
                "length_after": s.length_after,
            }
            for s in state.log
        ],
    }
    report.emit()
    return EX_OK


def _cmd_gwp(args) -> int:
    report = _Report("gwp", args.json)
    alphabet, relators = _load_relators(args.file)
    w = text_to_group_word(args.word, alphabet)
    sym = symmetrize(relators)
    verdict = decide_identity(w, sym, args.budget, greendlinger=args.greendlinger)
    report.verdict = verdict.value
    report.line({"yes": "trivial", "no": "non-trivial", "unknown": "unknown"}[verdict.value])
    report.details = {"word": args.word, "budget": args.budget}
    report.emit()
    return _verdict_exit(verdict)


def _build_parser() -> _Parser:
    parser = _Parser(prog="specialmonoids", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, words=0, word_names=("x", "y")):
        p.add_argument("file")
        for i in range(words):
            p.add_argument(word_names[i])
        p.add_argument("--json", action="store_true")
        p.add_argument("--max-len", type=int, default=16, dest="max_len")
        p.add_argument("--max-states", type=int, default=100_000, dest="max_states")

    common(sub.add_parser("analyze", help="factor base, derived group, families"))
    common(sub.add_parser("wp", help="word problem"), words=2)
    common(sub.add_parser("divl", help="left divisibility"), words=2)
    common(sub.add_parser("divr", help="right divisibility"), words=2)
    common(sub.add_parser("inv", help="two-sided invertibility"), words=1)
    common(sub.add_parser("maxgroup", help="maximal subgroup presentation"))

    kcheck = sub.add_parser("kcheck", help="cancellation condition check")
    kcheck.add_argument("file")
    kcheck.add_argument("--alpha", default="2/11")
    kcheck.add_argument("--json", action="store_true")

    dehn = sub.add_parser("dehn", help="Dehn rewriting fixpoint")
    dehn.add_argument("file")
    dehn.add_argument("word")
    dehn.add_argument("--json", action="store_true")

    gwp = sub.add_parser("gwp", help="group identity problem")
    gwp.add_argument("file")
    gwp.add_argument("word")
    gwp.add_argument("--budget", type=int, default=100_000)
    gwp.add_argument("--greendlinger", action="store_true")
    gwp.add_argument("--json", action="store_true")

    return parser


_COMMANDS = {
    "analyze": _cmd_analyze,
    "wp": _cmd_wp,
    "divl": lambda a: _cmd_div(a, left=True),
    "divr": lambda a: _cmd_div(a, left=False),
    "inv": _cmd_inv,
    "maxgroup": _cmd_maxgroup,
    "kcheck": _cmd_kcheck,
    "dehn": _cmd_dehn,
    "gwp": _cmd_gwp,
}


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EX_USAGE
    except AlphabetMismatchError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EX_USAGE
    except UnknownGeneratorError as exc:
        # word arguments come from the command line
        print(f"usage error: {exc}", file=sys.stderr)
        return EX_USAGE
    except _INPUT_ERRORS as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EX_INPUT
    except OracleInconclusiveError as exc:
        print(f"oracle inconclusive: {exc}", file=sys.stderr)
        return EX_ORACLE
    except SpecialMonoidsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_INPUT


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
