"""Orthographic-syllable segmentation and translation evaluation toolkit.

Segments words of abugida (Devanagari through Malayalam) and alphabetic
(Latin, Cyrillic) scripts into orthographic syllables and other subword
units, tokenizes sentences with invertible word-boundary markers, and
provides the measurement suite used to evaluate subword-level translation:
LCSR, Pearson correlation, BLEU, Le-BLEU and n-best word-level rescoring.
"""

from .corpus import VocabStats, load_corpus, split_corpus, unit_ratio, vocab_stats, write_corpus
from .errors import OrthosylError
from .metrics import (
    BleuReport,
    bleu,
    corpus_lcsr,
    edit_distance,
    lcs_length,
    lcsr,
    lebleu,
    lebleu_report,
    parse_nbest,
    pearson,
    rescore_nbest,
    similarity_correlation,
)
from .scripts import CharClass, ScriptId, ScriptTable, classify, detect_script, is_nasalizer
from .segment import (
    DEFAULT_MARKER,
    MorphLexicon,
    TokenizedSentence,
    UnitScheme,
    detokenize,
    segment_corpus,
    segment_word,
    tokenize_sentence,
)
from .syllabify import OrthoSyllable, OSKind, syllabify, syllabify_alpha, syllabify_indic

__version__ = "0.1.0"

__all__ = [
    "BleuReport",
    "CharClass",
    "DEFAULT_MARKER",
    "MorphLexicon",
    "OSKind",
    "OrthoSyllable",
    "OrthosylError",
    "ScriptId",
    "ScriptTable",
    "TokenizedSentence",
    "UnitScheme",
    "VocabStats",
    "bleu",
    "classify",
    "corpus_lcsr",
    "detect_script",
    "detokenize",
    "edit_distance",
    "is_nasalizer",
    "lcs_length",
    "lcsr",
    "lebleu",
    "lebleu_report",
    "load_corpus",
    "parse_nbest",
    "pearson",
    "rescore_nbest",
    "segment_corpus",
    "segment_word",
    "similarity_correlation",
    "split_corpus",
    "syllabify",
    "syllabify_alpha",
    "syllabify_indic",
    "tokenize_sentence",
    "unit_ratio",
    "vocab_stats",
    "write_corpus",
    "__version__",
]
