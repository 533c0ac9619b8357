"""Moses-style n-best lists and word-level rescoring of sub-word output.

Entry format, one per line, fields separated by " ||| ":

    sentence_id ||| token sequence ||| feature text ||| model_score

Rescoring desegments each entry's sub-word tokens back to words and appends
the smoothed word-level BLEU against the matching reference as a fifth
" ||| word_bleu" field, preserving entry order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ..errors import AlignmentError, MalformedStreamError
from ..segment import DEFAULT_MARKER, detokenize
from .bleu import sentence_bleu_smoothed

_SEP = " ||| "


@dataclass(frozen=True)
class NBestEntry:
    sentence_id: int
    tokens: tuple[str, ...]
    features: str
    model_score: float
    word_bleu: float | None = None
    score_text: str | None = None  # original field text, kept verbatim

    def format(self) -> str:
        fields = [
            str(self.sentence_id),
            " ".join(self.tokens),
            self.features,
            self.score_text if self.score_text is not None else f"{self.model_score:g}",
        ]
        if self.word_bleu is not None:
            fields.append(f"{self.word_bleu:.4f}")
        return _SEP.join(fields)


@dataclass(frozen=True)
class NBestList:
    entries: tuple[NBestEntry, ...]

    def format_lines(self) -> list[str]:
        return [entry.format() for entry in self.entries]


def parse_nbest(lines: Iterable[str]) -> NBestList:
    """Parse n-best lines, enforcing nondecreasing sentence ids."""
    entries: list[NBestEntry] = []
    last_id = None
    for lineno, line in enumerate(lines, start=1):
        line = line.rstrip("\n")
        if not line:
            continue
        fields = line.split(_SEP)
        if len(fields) < 4:
            raise MalformedStreamError(
                f"line {lineno}: expected 4 ' ||| '-separated fields, "
                f"got {len(fields)}"
            )
        try:
            sentence_id = int(fields[0].strip())
            model_score = float(fields[3].strip())
        except ValueError as exc:
            raise MalformedStreamError(f"line {lineno}: {exc}") from None
        if last_id is not None and sentence_id < last_id:
            raise MalformedStreamError(
                f"line {lineno}: sentence ids must be nondecreasing "
                f"({sentence_id} after {last_id})"
            )
        last_id = sentence_id
        entries.append(
            NBestEntry(
                sentence_id=sentence_id,
                tokens=tuple(fields[1].split()),
                features=fields[2],
                model_score=model_score,
                score_text=fields[3],
            )
        )
    return NBestList(tuple(entries))


def rescore_nbest(
    nbest: NBestList,
    refs: Sequence[str],
    marker: str = DEFAULT_MARKER,
    max_n: int = 4,
) -> NBestList:
    """Append word-level smoothed BLEU to every entry of a sub-word n-best list.

    Each entry's tokens are desegmented to words via the boundary marker and
    scored against the word-level reference with the same sentence id.
    """
    rescored: list[NBestEntry] = []
    for entry in nbest.entries:
        if not (0 <= entry.sentence_id < len(refs)):
            raise AlignmentError(
                f"sentence id {entry.sentence_id} has no reference "
                f"(got {len(refs)} reference lines)"
            )
        words = detokenize(entry.tokens, marker).split()
        ref_words = refs[entry.sentence_id].split()
        score = sentence_bleu_smoothed(words, ref_words, max_n=max_n)
        rescored.append(
            NBestEntry(
                sentence_id=entry.sentence_id,
                tokens=entry.tokens,
                features=entry.features,
                model_score=entry.model_score,
                word_bleu=score,
                score_text=entry.score_text,
            )
        )
    return NBestList(tuple(rescored))
