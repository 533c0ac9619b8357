"""Orthographic-syllable segmentation of single words.

An orthographic syllable is a consonant-vowel chunk of written text: a run
of consonants plus the vowel that follows it. For abugida scripts the
segmenter is a left-to-right state machine over classified code points;
for alphabetic scripts it scans maximal C*V+ runs.

Words are NFC-normalized before segmentation and the concatenation of the
output units always reproduces the (normalized) word exactly.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .errors import EmptyInputError, MixedScriptError, UnsupportedScriptError
from .scripts import (
    CharClass,
    ScriptId,
    _UNIVERSAL_SIGNS,
    detect_script,
    get_table,
)


class OSKind(Enum):
    CONSONANT_CORE = "ConsonantCore"
    INDEPENDENT_VOWEL = "IndependentVowel"
    NASAL_CONSONANT = "NasalConsonant"
    OTHER = "Other"


@dataclass(frozen=True)
class OrthoSyllable:
    text: str
    kind: OSKind

    def __str__(self) -> str:
        return self.text


_NASAL_SIGNS = (CharClass.ANUSVARA, CharClass.CHANDRABINDU)


def syllabify_indic(word: str, script: ScriptId) -> list[OrthoSyllable]:
    """Segment an abugida-script word into orthographic syllables.

    A consonant cluster is C(halanta C)* with nukta fused to its consonant.
    A bare consonant carries an implicit schwa and closes its unit; a
    dependent vowel attaches to the cluster and closes it; an independent
    vowel is a unit of its own. An anusvara/chandrabindu nasalizing the
    vowel joins the unit on its left, while one standing for a nasal
    consonant (next code point is a plosive) starts the next unit.
    """
    if not word:
        raise EmptyInputError("cannot syllabify an empty word")
    get_table(script)
    if not script.is_abugida:
        raise UnsupportedScriptError(
            f"{script.value} is not an abugida script; use syllabify_alpha"
        )
    return list(_syllabify_indic_cached(unicodedata.normalize("NFC", word), script))


@lru_cache(maxsize=65536)
def _syllabify_indic_cached(word: str, script: ScriptId) -> tuple[OrthoSyllable, ...]:
    table = get_table(script)
    cls = [table.classify(ch) for ch in word]
    n = len(word)
    units: list[OrthoSyllable] = []
    cur: list[str] = []

    def nasalizes(i: int) -> bool:
        # c1 at i is anusvara/chandrabindu; nasalizer unless a plosive follows
        return not (i + 1 < n and table.is_plosive(word[i + 1]))

    def close() -> None:
        if not cur:
            return
        first = table.classify(cur[0])
        if first in _NASAL_SIGNS:
            kind = OSKind.NASAL_CONSONANT
        elif any(table.classify(c) is CharClass.CONSONANT for c in cur):
            kind = OSKind.CONSONANT_CORE
        elif first is CharClass.INDEPENDENT_VOWEL:
            kind = OSKind.INDEPENDENT_VOWEL
        else:
            kind = OSKind.OTHER
        units.append(OrthoSyllable("".join(cur), kind))
        cur.clear()

    def absorb_nasalizer(i: int) -> int:
        if i < n and cls[i] in _NASAL_SIGNS and nasalizes(i):
            cur.append(word[i])
            i += 1
        return i

    i = 0
    while i < n:
        k = cls[i]
        if k is CharClass.CONSONANT:
            # consume the whole cluster C(halanta C)*, nukta fused
            while True:
                cur.append(word[i])
                i += 1
                while i < n and cls[i] is CharClass.NUKTA:
                    cur.append(word[i])
                    i += 1
                if i < n and cls[i] is CharClass.HALANTA:
                    cur.append(word[i])
                    i += 1
                    while i < n and word[i] in _UNIVERSAL_SIGNS:
                        cur.append(word[i])
                        i += 1
                    if i < n and cls[i] is CharClass.CONSONANT:
                        continue  # cluster grows through the halanta
                    close()  # word-final (or dangling) halanta attaches
                    break
                if i < n and cls[i] is CharClass.DEPENDENT_VOWEL:
                    cur.append(word[i])
                    i = absorb_nasalizer(i + 1)
                    close()
                    break
                if i < n and cls[i] in _NASAL_SIGNS and nasalizes(i):
                    cur.append(word[i])
                    i += 1
                    close()
                    break
                # implicit schwa: next is a consonant, an independent vowel,
                # a nasal-consonant sign, end of word, or a non-letter
                close()
                break
        elif k is CharClass.INDEPENDENT_VOWEL:
            cur.append(word[i])
            i = absorb_nasalizer(i + 1)
            close()
        elif k in _NASAL_SIGNS:
            # nasal consonant: boundary was placed before it; it opens the
            # next unit and fuses with the following cluster
            cur.append(word[i])
            i += 1
        elif k is CharClass.DEPENDENT_VOWEL:
            # stray matra (malformed input): keep it as its own unit
            cur.append(word[i])
            i = absorb_nasalizer(i + 1)
            close()
        elif k in (CharClass.HALANTA, CharClass.NUKTA):
            # stray joiner (malformed input): carry into whatever follows
            cur.append(word[i])
            i += 1
        else:
            # visarga, other signs, and non-script marks attach leftwards
            if cur:
                cur.append(word[i])
            elif units:
                last = units[-1]
                units[-1] = OrthoSyllable(last.text + word[i], last.kind)
            else:
                cur.append(word[i])
            i += 1
    close()
    return tuple(units)


def syllabify_alpha(
    word: str,
    script: ScriptId,
    vowels: frozenset[str] | None = None,
) -> list[OrthoSyllable]:
    """Segment an alphabetic-script word into maximal C*V+ runs.

    A word-initial vowel run is its own unit, a word-final consonant run
    attaches to the preceding unit, and a vowel-less word is a single unit.
    Casing is preserved; vowel membership is checked case-insensitively
    against the script's vowel set (overridable via `vowels`).
    """
    if not word:
        raise EmptyInputError("cannot syllabify an empty word")
    table = get_table(script)
    if not script.is_alphabetic:
        raise UnsupportedScriptError(
            f"{script.value} is not an alphabetic script; use syllabify_indic"
        )
    word = unicodedata.normalize("NFC", word)
    vowel_set = table.vowel_set if vowels is None else vowels

    def is_vowel(ch: str) -> bool:
        folded = ch.casefold()
        return bool(folded) and folded[0] in vowel_set

    units: list[OrthoSyllable] = []
    has_consonant = any(
        table.classify(ch) is CharClass.CONSONANT and not is_vowel(ch) for ch in word
    )
    i, n = 0, len(word)
    while i < n:
        start = i
        while i < n and not is_vowel(word[i]):
            i += 1
        if i == n:
            # trailing run without a vowel
            if units:
                last = units[-1]
                units[-1] = OrthoSyllable(last.text + word[start:], last.kind)
            else:
                kind = OSKind.CONSONANT_CORE if has_consonant else OSKind.OTHER
                units.append(OrthoSyllable(word, kind))
            break
        while i < n and is_vowel(word[i]):
            i += 1
        text = word[start:i]
        kind = OSKind.INDEPENDENT_VOWEL if is_vowel(text[0]) else OSKind.CONSONANT_CORE
        units.append(OrthoSyllable(text, kind))
    return units


def syllabify(word: str, script: ScriptId | None = None) -> list[OrthoSyllable]:
    """Segment a word, auto-detecting its script unless one is forced.

    With `script=None` the word's script is detected from its letters;
    words with no supported letters (punctuation, digits) come back as a
    single Other unit and mixed-script words raise MixedScriptError.
    With a forced script, words whose letters fall outside that script are
    returned whole as a single Other unit.
    """
    if not word:
        raise EmptyInputError("cannot syllabify an empty word")
    word = unicodedata.normalize("NFC", word)
    if script is None:
        detected = detect_script(word)
        if detected is ScriptId.UNSUPPORTED:
            return [OrthoSyllable(word, OSKind.OTHER)]
        script = detected
    else:
        get_table(script)  # validate support
        detected = _detect_or_none(word)
        if detected is not script:
            return [OrthoSyllable(word, OSKind.OTHER)]
    if script.is_abugida:
        return syllabify_indic(word, script)
    return syllabify_alpha(word, script)


def _detect_or_none(word: str) -> ScriptId | None:
    """detect_script, with mixed-script words mapped to None (forced mode)."""
    try:
        detected = detect_script(word)
    except MixedScriptError:
        return None
    return None if detected is ScriptId.UNSUPPORTED else detected
