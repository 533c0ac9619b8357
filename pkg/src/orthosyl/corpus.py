"""Corpus reading, writing, splitting and unit-vocabulary statistics.

All corpus files are UTF-8, one sentence per line, LF-terminated. Lines are
NFC-normalized at ingestion: Indic matras and nukta have composed and
decomposed variants that would otherwise break code-point classification.
"""

from __future__ import annotations

import random
import unicodedata
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, Sequence

from .errors import CorpusDecodeError, DegenerateCorpusError, SplitSizeError
from .scripts import ScriptId
from .segment import MorphLexicon, UnitScheme, segment_word

_BOM = "﻿"


def load_corpus(source: str | Path | IO) -> list[str]:
    """Read sentences from a path or text/binary stream.

    Strips a leading byte-order mark and trailing line terminators, and
    NFC-normalizes every line. Invalid UTF-8 raises CorpusDecodeError
    naming the byte offset.
    """
    if isinstance(source, (str, Path)):
        data = Path(source).read_bytes()
    else:
        raw = source.read()
        data = raw.encode("utf-8") if isinstance(raw, str) else raw
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise CorpusDecodeError(
            f"invalid UTF-8 at byte offset {exc.start}: {exc.reason}", exc.start
        ) from None
    if text.startswith(_BOM):
        text = text[len(_BOM):]
    lines = text.splitlines()
    return [unicodedata.normalize("NFC", line) for line in lines]


def write_corpus(lines: Iterable[str], destination: str | Path | IO) -> None:
    """Write sentences one per line, LF-terminated."""
    payload = "".join(f"{line}\n" for line in lines)
    if isinstance(destination, (str, Path)):
        Path(destination).write_text(payload, encoding="utf-8", newline="\n")
    else:
        destination.write(payload)


def split_corpus(
    lines: Sequence[str],
    sizes: tuple[int, int, int],
    seed: int | None = None,
) -> tuple[list[str], list[str], list[str]]:
    """Split a corpus into train/tune/test pieces.

    The default split is the contiguous prefix in train/tune/test order;
    passing a seed shuffles reproducibly before splitting.
    """
    train_n, tune_n, test_n = sizes
    if min(sizes) < 0:
        raise SplitSizeError(f"split sizes must be nonnegative, got {sizes}")
    if train_n + tune_n + test_n > len(lines):
        raise SplitSizeError(
            f"requested {train_n + tune_n + test_n} lines "
            f"from a corpus of {len(lines)}"
        )
    pool = list(lines)
    if seed is not None:
        random.Random(seed).shuffle(pool)
    train = pool[:train_n]
    tune = pool[train_n:train_n + tune_n]
    test = pool[train_n + tune_n:train_n + tune_n + test_n]
    return train, tune, test


@dataclass(frozen=True)
class VocabStats:
    """Unit-vocabulary statistics of a corpus under one scheme.

    mean_unit_length is the mean code-point length over the distinct units
    (the inventory), not over unit occurrences: frequent units are mostly
    short, so an occurrence-weighted mean says little about the vocabulary.
    """

    scheme: UnitScheme
    type_count: int
    token_count: int
    mean_unit_length: float

    def format_line(self) -> str:
        return (
            f"{self.scheme}\t{self.type_count}\t{self.token_count}"
            f"\t{self.mean_unit_length:.4f}"
        )


def vocab_stats(
    lines: Iterable[str],
    scheme: UnitScheme,
    morphs: MorphLexicon | None = None,
    script: ScriptId | None = None,
) -> VocabStats:
    """Segment every word of the corpus and count the resulting units.

    Boundary markers are never counted (segment_word emits none).
    """
    counts: Counter[str] = Counter()
    for line in lines:
        for word in line.split():
            counts.update(segment_word(word, scheme, morphs, script))
    token_count = sum(counts.values())
    type_cp = sum(len(unit) for unit in counts)
    mean_len = (type_cp / len(counts)) if counts else 0.0
    return VocabStats(
        scheme=scheme,
        type_count=len(counts),
        token_count=token_count,
        mean_unit_length=mean_len,
    )


def unit_ratio(
    lines: Sequence[str],
    scheme_a: UnitScheme,
    scheme_b: UnitScheme,
    morphs: MorphLexicon | None = None,
    script: ScriptId | None = None,
) -> float:
    """Ratio of distinct-unit counts between two schemes on one corpus."""
    denom = vocab_stats(lines, scheme_b, morphs, script).type_count
    if denom == 0:
        raise DegenerateCorpusError(
            f"corpus yields no units under scheme {scheme_b}"
        )
    numer = vocab_stats(lines, scheme_a, morphs, script).type_count
    return numer / denom
