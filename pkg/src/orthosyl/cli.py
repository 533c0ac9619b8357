"""Command-line entry point exposing every pipeline stage.

One binary with subcommands; every subcommand reads standard input when no
input path applies and writes data to standard output. Diagnostics go to
standard error only. Exit status: 0 on success, 1 on data errors, 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import sys

from . import corpus as corpus_io
from . import metrics
from .errors import OrthosylError
from .scripts import SUPPORTED_SCRIPTS, ScriptId, classify
from .segment import (
    DEFAULT_MARKER,
    MorphLexicon,
    UnitScheme,
    detokenize,
    segment_corpus,
)
from .syllabify import syllabify

_SCRIPT_NAMES = sorted(s.value for s in SUPPORTED_SCRIPTS)


def _parse_script(value: str) -> ScriptId | None:
    if value.lower() == "auto":
        return None
    return ScriptId.parse(value)


def _add_marker_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--marker",
        default=DEFAULT_MARKER,
        help=f"word-boundary marker character (default: {DEFAULT_MARKER!r})",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orthosyl",
        description=(
            "Orthographic-syllable segmentation, subword unit representations "
            "and translation evaluation metrics."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("segment", help="segment sentences into units")
    p.add_argument("--unit", required=True, help="word|morph|char|char-ngram=N|os")
    _add_marker_flag(p)
    p.add_argument("--morph-lexicon", metavar="PATH")
    p.add_argument("--script", default="auto", help="|".join(_SCRIPT_NAMES) + "|auto")
    p.add_argument(
        "--on-marker-collision",
        choices=("error", "replace"),
        default="error",
    )
    p.add_argument("--skip-errors", action="store_true",
                   help="pass offending lines through instead of failing")

    p = sub.add_parser("desegment", help="invert segment output to sentences")
    _add_marker_flag(p)

    p = sub.add_parser("syllabify", help="orthographic syllables, one word per line")
    p.add_argument("--script", default="auto", help="|".join(_SCRIPT_NAMES) + "|auto")

    p = sub.add_parser("classify", help="dump per-code-point classifications")
    p.add_argument("--script", required=True, help="|".join(_SCRIPT_NAMES))

    p = sub.add_parser("lcsr", help="longest-common-subsequence ratio of two files")
    p.add_argument("--a", required=True, metavar="PATH")
    p.add_argument("--b", required=True, metavar="PATH")
    p.add_argument("--per-line", action="store_true")

    p = sub.add_parser("correlate", help="similarity vs translation-match correlation")
    p.add_argument("--src", required=True, metavar="PATH")
    p.add_argument("--tgt", required=True, metavar="PATH")
    p.add_argument("--hyp", required=True, metavar="PATH")
    p.add_argument("--ref", required=True, metavar="PATH")

    p = sub.add_parser("score", help="BLEU / Le-BLEU of a hypothesis file")
    p.add_argument("--metric", choices=("bleu", "lebleu"), required=True)
    p.add_argument("--hyp", required=True, metavar="PATH")
    p.add_argument("--ref", required=True, metavar="PATH")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--delta", type=float, default=0.6,
                   help="fuzzy word-match threshold (lebleu only)")
    p.add_argument("--report", metavar="PATH",
                   help="also write a key-value report file")

    p = sub.add_parser("nbest-rescore", help="append word-level BLEU to an n-best list")
    p.add_argument("--nbest", required=True, metavar="PATH")
    p.add_argument("--ref", required=True, metavar="PATH")
    _add_marker_flag(p)

    p = sub.add_parser("stats", help="unit-vocabulary statistics of a corpus")
    p.add_argument("--unit", required=True, help="word|morph|char|char-ngram=N|os")
    p.add_argument("--morph-lexicon", metavar="PATH")
    p.add_argument("--script", default="auto", help="|".join(_SCRIPT_NAMES) + "|auto")

    p = sub.add_parser("split", help="split a corpus into train/tune/test")
    p.add_argument("--sizes", required=True, metavar="TRAIN,TUNE,TEST")
    p.add_argument("--seed", type=int)
    p.add_argument("--out-prefix", required=True, metavar="PATH")

    return parser


def _load_lexicon(path: str | None, scheme: UnitScheme | None = None) -> MorphLexicon | None:
    if path:
        return MorphLexicon.load(path)
    # morph scheme without a lexicon: every word is unknown and passes
    # through whole, so an empty lexicon is the right default
    if scheme is not None and scheme.kind == "morph":
        return MorphLexicon()
    return None


def _cmd_segment(args, stdin, stdout) -> None:
    scheme = UnitScheme.parse(args.unit)
    lines = corpus_io.load_corpus(stdin)
    for out in segment_corpus(
        lines,
        scheme,
        marker=args.marker,
        morphs=_load_lexicon(args.morph_lexicon, scheme),
        script=_parse_script(args.script),
        on_marker_collision=args.on_marker_collision,
        skip_errors=args.skip_errors,
        error_sink=sys.stderr,
    ):
        print(out, file=stdout)


def _cmd_desegment(args, stdin, stdout) -> None:
    for lineno, line in enumerate(corpus_io.load_corpus(stdin), start=1):
        try:
            print(detokenize(line.split(), args.marker), file=stdout)
        except OrthosylError as exc:
            raise type(exc)(f"line {lineno}: {exc}") from None


def _cmd_syllabify(args, stdin, stdout) -> None:
    script = _parse_script(args.script)
    for lineno, line in enumerate(corpus_io.load_corpus(stdin), start=1):
        try:
            units = [
                unit.text for word in line.split() for unit in syllabify(word, script)
            ]
        except OrthosylError as exc:
            raise type(exc)(f"line {lineno}: {exc}") from None
        print(" ".join(units), file=stdout)


def _cmd_classify(args, stdin, stdout) -> None:
    script = ScriptId.parse(args.script)
    for line in corpus_io.load_corpus(stdin):
        for ch in line:
            print(f"{ch}\t{script.value}\t{classify(ch, script).value}", file=stdout)


def _cmd_lcsr(args, stdin, stdout) -> None:
    a_lines = corpus_io.load_corpus(args.a)
    b_lines = corpus_io.load_corpus(args.b)
    pairs = metrics.aligned_pairs(a_lines, b_lines)
    if args.per_line:
        for a, b in pairs:
            print(f"{metrics.lcsr(a, b):.6f}", file=stdout)
    else:
        print(f"LCSR = {metrics.corpus_lcsr(pairs):.6f}", file=stdout)


def _cmd_correlate(args, stdin, stdout) -> None:
    value = metrics.similarity_correlation(
        corpus_io.load_corpus(args.src),
        corpus_io.load_corpus(args.tgt),
        corpus_io.load_corpus(args.hyp),
        corpus_io.load_corpus(args.ref),
    )
    print(f"Pearson = {value:.6f}", file=stdout)


def _cmd_score(args, stdin, stdout) -> None:
    hyps = corpus_io.load_corpus(args.hyp)
    refs = corpus_io.load_corpus(args.ref)
    if args.metric == "bleu":
        report = metrics.bleu(hyps, refs, max_n=args.max_n)
        label = "BLEU"
    else:
        report = metrics.lebleu_report(hyps, refs, delta=args.delta, max_n=args.max_n)
        label = "Le-BLEU"
    print(f"{label} = {report.score:.2f}", file=stdout)
    if args.report:
        lines = [
            f"metric = {args.metric}",
            f"score = {report.score:.6f}",
            f"brevity_penalty = {report.brevity_penalty:.6f}",
            f"hyp_length = {report.hyp_length}",
            f"ref_length = {report.ref_length}",
        ]
        lines += [
            f"precision_{i + 1} = {p:.6f}" for i, p in enumerate(report.precisions)
        ]
        if args.metric == "lebleu":
            lines.append(f"delta = {args.delta}")
        corpus_io.write_corpus(lines, args.report)


def _cmd_nbest_rescore(args, stdin, stdout) -> None:
    nbest = metrics.parse_nbest(corpus_io.load_corpus(args.nbest))
    refs = corpus_io.load_corpus(args.ref)
    for line in metrics.rescore_nbest(nbest, refs, marker=args.marker).format_lines():
        print(line, file=stdout)


def _cmd_stats(args, stdin, stdout) -> None:
    scheme = UnitScheme.parse(args.unit)
    stats = corpus_io.vocab_stats(
        corpus_io.load_corpus(stdin),
        scheme,
        morphs=_load_lexicon(args.morph_lexicon, scheme),
        script=_parse_script(args.script),
    )
    print(stats.format_line(), file=stdout)


def _cmd_split(args, stdin, stdout) -> None:
    try:
        sizes = tuple(int(x) for x in args.sizes.split(","))
    except ValueError:
        raise OrthosylError(f"--sizes expects TRAIN,TUNE,TEST integers, got {args.sizes!r}")
    if len(sizes) != 3:
        raise OrthosylError(f"--sizes expects exactly three sizes, got {args.sizes!r}")
    lines = corpus_io.load_corpus(stdin)
    pieces = corpus_io.split_corpus(lines, sizes, seed=args.seed)
    for name, piece in zip(("train", "tune", "test"), pieces):
        corpus_io.write_corpus(piece, f"{args.out_prefix}.{name}")


_COMMANDS = {
    "segment": _cmd_segment,
    "desegment": _cmd_desegment,
    "syllabify": _cmd_syllabify,
    "classify": _cmd_classify,
    "lcsr": _cmd_lcsr,
    "correlate": _cmd_correlate,
    "score": _cmd_score,
    "nbest-rescore": _cmd_nbest_rescore,
    "stats": _cmd_stats,
    "split": _cmd_split,
}


def run(argv: list[str] | None = None, stdin=None, stdout=None) -> int:
    """Parse arguments and dispatch; returns the process exit status."""
    stdin = stdin if stdin is not None else sys.stdin.buffer
    stdout = stdout if stdout is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _COMMANDS[args.command](args, stdin, stdout)
    except OrthosylError as exc:
        print(f"orthosyl {args.command}: error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
