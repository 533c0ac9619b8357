"""Code-point classification for the supported scripts.

The nine supported Indic blocks (Devanagari .. Malayalam) share the
ISCII-derived layout, so one canonical offset -> class map is authored once
and instantiated per 128-code-point block. Offsets that are unassigned in a
given script fall out automatically (checked against unicodedata); offsets
whose character deviates from the shared layout are patched by a small
per-script exception table.

Latin and Cyrillic are alphabetic: classification needs only the block
ranges and a case-folded vowel set.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

from .errors import MixedScriptError, UnsupportedScriptError


class ScriptId(Enum):
    DEVANAGARI = "Devanagari"
    BENGALI = "Bengali"
    GURMUKHI = "Gurmukhi"
    GUJARATI = "Gujarati"
    ORIYA = "Oriya"
    TAMIL = "Tamil"
    TELUGU = "Telugu"
    KANNADA = "Kannada"
    MALAYALAM = "Malayalam"
    LATIN = "Latin"
    CYRILLIC = "Cyrillic"
    UNSUPPORTED = "Unsupported"

    @property
    def is_abugida(self) -> bool:
        return self in _INDIC_BLOCKS

    @property
    def is_alphabetic(self) -> bool:
        return self in (ScriptId.LATIN, ScriptId.CYRILLIC)

    @classmethod
    def parse(cls, name: str) -> "ScriptId":
        try:
            return cls(name.strip().capitalize())
        except ValueError:
            raise UnsupportedScriptError(f"unknown script name: {name!r}") from None


class CharClass(Enum):
    INDEPENDENT_VOWEL = "IndependentVowel"
    DEPENDENT_VOWEL = "DependentVowel"
    CONSONANT = "Consonant"
    HALANTA = "Halanta"
    ANUSVARA = "Anusvara"
    CHANDRABINDU = "Chandrabindu"
    VISARGA = "Visarga"
    NUKTA = "Nukta"
    OTHER_SIGN = "OtherSign"
    NON_SCRIPT = "NonScript"


# Classes that make a code point a "letter" for script detection purposes.
# Combining marks, signs and punctuation never decide the script of a word.
LETTER_CLASSES = frozenset({CharClass.CONSONANT, CharClass.INDEPENDENT_VOWEL})

_INDIC_BLOCKS = {
    ScriptId.DEVANAGARI: 0x0900,
    ScriptId.BENGALI: 0x0980,
    ScriptId.GURMUKHI: 0x0A00,
    ScriptId.GUJARATI: 0x0A80,
    ScriptId.ORIYA: 0x0B00,
    ScriptId.TAMIL: 0x0B80,
    ScriptId.TELUGU: 0x0C00,
    ScriptId.KANNADA: 0x0C80,
    ScriptId.MALAYALAM: 0x0D00,
}
_BLOCK_SIZE = 0x80

# Alphabetic letter ranges (inclusive). Latin-1 multiplication and division
# signs sit inside the letter range and are excluded below.
_LATIN_RANGES = ((0x41, 0x5A), (0x61, 0x7A), (0xC0, 0xD6), (0xD8, 0xF6), (0xF8, 0x24F))
_CYRILLIC_RANGES = ((0x400, 0x4FF), (0x500, 0x52F))

_LATIN_VOWELS = frozenset(
    "aeiou"
    "àáâãäåāăą"
    "èéêëēĕėęě"
    "ìíîïĩīĭįı"
    "òóôõöøōŏő"
    "ùúûüũūŭůűų"
    "æœ"
)
_CYRILLIC_VOWELS = frozenset("аеёиоуыэюяіїєѣѵѫ")

# Zero-width joiner / non-joiner attach to the current unit in any script.
_UNIVERSAL_SIGNS = frozenset({"‌", "‍"})


def _expand(spec: dict) -> dict:
    """Expand {offset-or-(lo,hi): class} into a flat offset -> class map."""
    out = {}
    for key, cls in spec.items():
        if isinstance(key, tuple):
            lo, hi = key
            for off in range(lo, hi + 1):
                out[off] = cls
        else:
            out[key] = cls
    return out


_C = CharClass

# Canonical map for the shared Indic block layout, authored from the
# published code charts with Devanagari as the reference block.
_CANONICAL = _expand({
    (0x00, 0x01): _C.CHANDRABINDU,
    0x02: _C.ANUSVARA,
    0x03: _C.VISARGA,
    (0x04, 0x14): _C.INDEPENDENT_VOWEL,
    (0x15, 0x39): _C.CONSONANT,
    (0x3A, 0x3B): _C.DEPENDENT_VOWEL,
    0x3C: _C.NUKTA,
    0x3D: _C.OTHER_SIGN,           # avagraha
    (0x3E, 0x4C): _C.DEPENDENT_VOWEL,
    0x4D: _C.HALANTA,
    (0x4E, 0x4F): _C.DEPENDENT_VOWEL,
    0x50: _C.OTHER_SIGN,           # om
    (0x51, 0x54): _C.OTHER_SIGN,   # vedic tone/stress marks
    (0x55, 0x57): _C.DEPENDENT_VOWEL,
    (0x58, 0x5F): _C.CONSONANT,    # nukta consonants
    (0x60, 0x61): _C.INDEPENDENT_VOWEL,
    (0x62, 0x63): _C.DEPENDENT_VOWEL,
    (0x64, 0x65): _C.OTHER_SIGN,   # dandas
    (0x66, 0x6F): _C.OTHER_SIGN,   # digits
    (0x70, 0x71): _C.OTHER_SIGN,
    (0x72, 0x77): _C.INDEPENDENT_VOWEL,
    (0x78, 0x7F): _C.CONSONANT,
})

# Assigned characters that deviate from the canonical layout, per script.
_EXCEPTIONS: dict[ScriptId, dict] = {
    ScriptId.DEVANAGARI: {},
    ScriptId.BENGALI: _expand({
        0x00: _C.OTHER_SIGN,        # anji
        0x4E: _C.CONSONANT,         # khanda ta
        (0x70, 0x71): _C.CONSONANT, # ra with middle/lower diagonal
        (0x72, 0x7B): _C.OTHER_SIGN,  # currency marks, isshar, ganda
        0x7C: _C.ANUSVARA,          # vedic anusvara letter
        (0x7D, 0x7E): _C.OTHER_SIGN,
    }),
    ScriptId.GURMUKHI: _expand({
        0x70: _C.ANUSVARA,          # tippi
        0x74: _C.OTHER_SIGN,        # ek onkar
        0x75: _C.OTHER_SIGN,        # yakash
        0x76: _C.OTHER_SIGN,        # abbreviation sign
    }),
    ScriptId.GUJARATI: _expand({
        (0x7A, 0x7C): _C.OTHER_SIGN,  # sukun/shadda/maddah-style signs
        (0x7D, 0x7F): _C.NUKTA,     # dotted/circled nukta-above marks
    }),
    ScriptId.ORIYA: _expand({
        0x71: _C.CONSONANT,         # wa
        (0x72, 0x77): _C.OTHER_SIGN,  # fraction marks
    }),
    ScriptId.TAMIL: _expand({
        (0x70, 0x7A): _C.OTHER_SIGN,  # tamil numbers and symbols
    }),
    ScriptId.TELUGU: _expand({
        0x04: _C.ANUSVARA,          # combining anusvara above
        0x77: _C.OTHER_SIGN,        # siddham
        (0x78, 0x7F): _C.OTHER_SIGN,  # fractions, tuumu
    }),
    ScriptId.KANNADA: _expand({
        0x04: _C.OTHER_SIGN,        # siddham
        (0x71, 0x72): _C.CONSONANT, # jihvamuliya, upadhmaniya
    }),
    ScriptId.MALAYALAM: _expand({
        0x00: _C.ANUSVARA,          # combining anusvara above
        0x04: _C.ANUSVARA,          # vedic anusvara
        0x3A: _C.CONSONANT,         # ttta
        (0x3B, 0x3C): _C.HALANTA,   # vertical bar / circular virama
        0x4E: _C.CONSONANT,         # dot reph
        0x4F: _C.OTHER_SIGN,        # para sign
        (0x54, 0x56): _C.CONSONANT, # chillu m/y/lll
        (0x58, 0x5E): _C.OTHER_SIGN,  # fractions
        0x5F: _C.INDEPENDENT_VOWEL, # archaic ii
        (0x72, 0x79): _C.OTHER_SIGN,  # malayalam numbers, fractions, date mark
    }),
}

# Stop consonants of the five articulation rows (velar, palatal, retroflex,
# dental, labial), each row's nasal excluded. Shared block layout, so the
# offsets hold for every Indic script; unassigned ones drop out per script.
_PLOSIVE_OFFSETS = frozenset(
    off
    for lo in (0x15, 0x1A, 0x1F, 0x24, 0x2A)
    for off in range(lo, lo + 4)
)


@dataclass(frozen=True)
class ScriptTable:
    """Immutable per-script classification table."""

    script: ScriptId
    block_start: int
    block_end: int
    class_by_offset: dict = field(repr=False)
    plosive_offsets: frozenset = field(repr=False)
    vowel_set: frozenset = field(repr=False)

    def classify(self, ch: str) -> CharClass:
        if ch in _UNIVERSAL_SIGNS:
            return CharClass.OTHER_SIGN
        cp = ord(ch)
        if self.script.is_alphabetic:
            if any(lo <= cp <= hi for lo, hi in self._ranges()):
                folded = ch.casefold()
                if folded and folded[0] in self.vowel_set:
                    return CharClass.INDEPENDENT_VOWEL
                return CharClass.CONSONANT
            return CharClass.NON_SCRIPT
        if not (self.block_start <= cp <= self.block_end):
            return CharClass.NON_SCRIPT
        return self.class_by_offset.get(cp - self.block_start, CharClass.NON_SCRIPT)

    def is_plosive(self, ch: str) -> bool:
        cp = ord(ch)
        if not (self.block_start <= cp <= self.block_end):
            return False
        return (cp - self.block_start) in self.plosive_offsets

    def _ranges(self):
        return _LATIN_RANGES if self.script is ScriptId.LATIN else _CYRILLIC_RANGES


def _build_indic_table(script: ScriptId) -> ScriptTable:
    start = _INDIC_BLOCKS[script]
    exceptions = _EXCEPTIONS[script]
    class_by_offset = {}
    for off in range(_BLOCK_SIZE):
        if unicodedata.category(chr(start + off)) == "Cn":
            continue  # unassigned in this script
        class_by_offset[off] = exceptions.get(off, _CANONICAL[off])
    plosives = frozenset(
        off for off in _PLOSIVE_OFFSETS
        if class_by_offset.get(off) is CharClass.CONSONANT
    )
    return ScriptTable(
        script=script,
        block_start=start,
        block_end=start + _BLOCK_SIZE - 1,
        class_by_offset=class_by_offset,
        plosive_offsets=plosives,
        vowel_set=frozenset(),
    )


def _build_alpha_table(script: ScriptId) -> ScriptTable:
    ranges = _LATIN_RANGES if script is ScriptId.LATIN else _CYRILLIC_RANGES
    vowels = _LATIN_VOWELS if script is ScriptId.LATIN else _CYRILLIC_VOWELS
    return ScriptTable(
        script=script,
        block_start=ranges[0][0],
        block_end=ranges[-1][1],
        class_by_offset={},
        plosive_offsets=frozenset(),
        vowel_set=vowels,
    )


TABLES: dict[ScriptId, ScriptTable] = {
    **{s: _build_indic_table(s) for s in _INDIC_BLOCKS},
    ScriptId.LATIN: _build_alpha_table(ScriptId.LATIN),
    ScriptId.CYRILLIC: _build_alpha_table(ScriptId.CYRILLIC),
}

SUPPORTED_SCRIPTS = tuple(TABLES)


def get_table(script: ScriptId) -> ScriptTable:
    table = TABLES.get(script)
    if table is None:
        raise UnsupportedScriptError(f"script {script.value} is not supported")
    return table


def classify(ch: str, script: ScriptId) -> CharClass:
    """Classify a single code point under the given script's table."""
    return get_table(script).classify(ch)


@lru_cache(maxsize=None)
def _script_of_letter(cp: int) -> ScriptId | None:
    """Script whose block holds this code point as a letter, if any."""
    ch = chr(cp)
    for script, start in _INDIC_BLOCKS.items():
        if start <= cp < start + _BLOCK_SIZE:
            if TABLES[script].classify(ch) in LETTER_CLASSES:
                return script
            return None
    for script in (ScriptId.LATIN, ScriptId.CYRILLIC):
        if TABLES[script].classify(ch) in LETTER_CLASSES:
            return script
    return None


def detect_script(word: str) -> ScriptId:
    """Script of a word, decided by its letter code points only.

    Combining marks, digits and punctuation never decide. Letters from two
    different supported scripts raise MixedScriptError; a word with no
    supported letters is Unsupported.
    """
    found: ScriptId | None = None
    for ch in word:
        script = _script_of_letter(ord(ch))
        if script is None:
            continue
        if found is None:
            found = script
        elif script is not found:
            raise MixedScriptError(
                f"word {word!r} mixes {found.value} and {script.value} letters"
            )
    return found if found is not None else ScriptId.UNSUPPORTED


def is_nasalizer(c1: str, c2: str | None, script: ScriptId) -> bool:
    """True iff c1 nasalizes the unit on its left rather than starting one.

    c1 must classify as anusvara or chandrabindu, and the following code
    point (if any) must not be a plosive consonant.
    """
    table = get_table(script)
    if not script.is_abugida:
        raise UnsupportedScriptError(
            f"nasalization rules apply to abugida scripts only, not {script.value}"
        )
    if table.classify(c1) not in (CharClass.ANUSVARA, CharClass.CHANDRABINDU):
        return False
    if c2 is None:
        return True
    return not table.is_plosive(c2)
