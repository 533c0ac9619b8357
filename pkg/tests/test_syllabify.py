"""Orthographic syllabification: golden segmentations and properties."""

import unicodedata

import pytest
from hypothesis import given, settings, strategies as st

from orthosyl.errors import EmptyInputError, MixedScriptError, UnsupportedScriptError
from orthosyl.scripts import ScriptId
from orthosyl.syllabify import OSKind, syllabify, syllabify_alpha, syllabify_indic


def texts(units):
    return [u.text for u in units]


# The published segmentation examples, code-point exact.
GOLDEN_INDIC = [
    ("लक्षमी", ["ल", "क्ष", "मी"]),
    ("मुम्बई", ["मु", "म्ब", "ई"]),
    ("घरासमोरचा", ["घ", "रा", "स", "मो", "र", "चा"]),
    ("राजू", ["रा", "जू"]),
    ("घराबाहेर", ["घ", "रा", "बा", "हे", "र"]),
    ("जाऊ", ["जा", "ऊ"]),
    ("नको", ["न", "को"]),
]

# Hand-traced cases for the nasalization and cluster rules.
DERIVED_INDIC = [
    ("हंस", ["हं", "स"]),          # fricative after anusvara: attach left
    ("गंगा", ["ग", "ंगा"]),        # plosive after anusvara: new nasal unit
    ("लक्ष्मी", ["ल", "क्ष्मी"]),   # halanta chain keeps the cluster open
    ("हिंदी", ["हि", "ंदी"]),       # d is a plosive: anusvara is a nasal consonant
    ("उन्होंने", ["उ", "न्हों", "ने"]),  # n is a nasal, not a plosive: attach left
    ("संस्कृति", ["सं", "स्कृ", "ति"]),
    ("क्", ["क्"]),               # word-final halanta attaches
    ("अंक", ["अ", "ंक"]),          # independent vowel, then nasal consonant
    ("ऑंग्न", ["ऑ", "ंग्न"]),       # ग is a plosive: nasal unit after chandra o
]


@pytest.mark.parametrize("word,want", GOLDEN_INDIC)
def test_golden_devanagari(word, want):
    assert texts(syllabify_indic(word, ScriptId.DEVANAGARI)) == want
    assert texts(syllabify(word)) == want


@pytest.mark.parametrize("word,want", DERIVED_INDIC)
def test_derived_devanagari(word, want):
    assert texts(syllabify(word)) == want


GOLDEN_ALPHA = [
    ("lakshami", ["la", "ksha", "mi"]),
    ("mumbai", ["mu", "mbai"]),
    ("cool", ["cool"]),
    ("apple", ["a", "pple"]),
    ("xyz", ["xyz"]),
]


@pytest.mark.parametrize("word,want", GOLDEN_ALPHA)
def test_golden_latin(word, want):
    assert texts(syllabify_alpha(word, ScriptId.LATIN)) == want
    assert texts(syllabify(word)) == want


def test_latin_casing_preserved():
    assert texts(syllabify("Mumbai")) == ["Mu", "mbai"]
    assert texts(syllabify("APPLE")) == ["A", "PPLE"]


def test_cyrillic():
    assert texts(syllabify("привет")) == ["pri".replace("pri", "при"), "вет"]
    assert texts(syllabify("москва")) == ["мо", "сква"]


def test_custom_vowel_set():
    # treating y as a vowel changes the segmentation
    default = texts(syllabify_alpha("syllable", ScriptId.LATIN))
    custom = texts(
        syllabify_alpha("syllable", ScriptId.LATIN, vowels=frozenset("aeiouy"))
    )
    assert default == ["sylla", "ble"]
    assert custom == ["sy", "lla", "ble"]


def test_other_scripts_round_trip():
    words = {
        ScriptId.BENGALI: "বাংলা",
        ScriptId.TAMIL: "தமிழ்",
        ScriptId.TELUGU: "తెలుగు",
        ScriptId.KANNADA: "ಕನ್ನಡ",
        ScriptId.MALAYALAM: "മലയാളം",
        ScriptId.GUJARATI: "ગુજરાતી",
        ScriptId.GURMUKHI: "ਪੰਜਾਬੀ",
        ScriptId.ORIYA: "ଓଡ଼ିଆ",
    }
    for script, word in words.items():
        units = syllabify(word)
        assert "".join(texts(units)) == unicodedata.normalize("NFC", word)
        assert all(u.text for u in units)


def test_dispatch_pass_through():
    assert texts(syllabify(",")) == [","]
    assert texts(syllabify("42")) == ["42"]
    assert syllabify("...")[0].kind is OSKind.OTHER


def test_dispatch_mixed_script():
    with pytest.raises(MixedScriptError):
        syllabify("घरmix")


def test_forced_script():
    assert texts(syllabify("घर", ScriptId.DEVANAGARI)) == ["घ", "र"]
    # foreign letters under a forced script pass through whole
    assert texts(syllabify("mix", ScriptId.DEVANAGARI)) == ["mix"]
    assert syllabify("mix", ScriptId.DEVANAGARI)[0].kind is OSKind.OTHER
    assert texts(syllabify("घरmix", ScriptId.DEVANAGARI)) == ["घरmix"]


def test_empty_word_errors():
    with pytest.raises(EmptyInputError):
        syllabify("")
    with pytest.raises(EmptyInputError):
        syllabify_indic("", ScriptId.DEVANAGARI)
    with pytest.raises(EmptyInputError):
        syllabify_alpha("", ScriptId.LATIN)


def test_wrong_family_errors():
    with pytest.raises(UnsupportedScriptError):
        syllabify_indic("abc", ScriptId.LATIN)
    with pytest.raises(UnsupportedScriptError):
        syllabify_alpha("घर", ScriptId.DEVANAGARI)


def test_kinds():
    kinds = [u.kind for u in syllabify("मुम्बई")]
    assert kinds == [OSKind.CONSONANT_CORE, OSKind.CONSONANT_CORE, OSKind.INDEPENDENT_VOWEL]
    assert syllabify("गंगा")[1].kind is OSKind.NASAL_CONSONANT
    assert syllabify("apple")[0].kind is OSKind.INDEPENDENT_VOWEL


def test_visarga_and_signs_attach_left():
    assert texts(syllabify("दुःख")) == ["दुः", "ख"]
    assert texts(syllabify("क़लम")) == ["क़", "ल", "म"]  # nukta fuses
    zwj_word = "क्‍ष"
    assert "".join(texts(syllabify(zwj_word))) == unicodedata.normalize("NFC", zwj_word)


def test_no_os_has_two_dependent_vowels():
    from orthosyl.scripts import TABLES, CharClass

    table = TABLES[ScriptId.DEVANAGARI]
    for word in ("घरासमोरचा", "उन्होंने", "संस्कृति", "लक्ष्मी", "हिंदी"):
        for unit in syllabify(word):
            count = sum(
                1 for ch in unit.text
                if table.classify(ch) is CharClass.DEPENDENT_VOWEL
            )
            assert count <= 1


def test_consonant_core_shape_on_running_text():
    """Inside a unit, every non-final consonant is joined by halanta/nukta
    or licensed by the nasal rule; real prose should never violate this."""
    from pathlib import Path

    from orthosyl.scripts import TABLES, CharClass

    table = TABLES[ScriptId.DEVANAGARI]
    sample = Path(__file__).parent / "data" / "hindi_sample.txt"
    joiners = (CharClass.HALANTA, CharClass.NUKTA)
    for line in sample.read_text(encoding="utf-8").splitlines():
        for word in line.split():
            for unit in syllabify(word):
                if unit.kind is not OSKind.CONSONANT_CORE:
                    continue
                chars = unit.text
                classes = [table.classify(ch) for ch in chars]
                consonant_positions = [
                    i for i, c in enumerate(classes) if c is CharClass.CONSONANT
                ]
                assert consonant_positions
                for i in consonant_positions[:-1]:
                    follower = classes[i + 1]
                    assert follower in joiners, (word, unit.text)
                assert classes.count(CharClass.DEPENDENT_VOWEL) <= 1, unit.text


# --- property tests --------------------------------------------------------

DEVANAGARI_ALPHABET = (
    "कखगघङचछजझञटठडढणतथदधनपफबभमयरलवशषसह"
    "अआइईउऊऋएऐओऔ"
    "ािीुूृेैोौ"
    "्ंँः़"
)

devanagari_words = st.text(alphabet=DEVANAGARI_ALPHABET, min_size=1, max_size=14)
latin_words = st.text(
    alphabet=st.sampled_from("abcdefghijklmnopqrstuvwxyz"), min_size=1, max_size=14
)
cyrillic_words = st.text(
    alphabet=st.sampled_from("абвгдежзиклмнопрстуфхцчшщыьэюя"),
    min_size=1,
    max_size=14,
)


@settings(max_examples=300)
@given(devanagari_words)
def test_lossless_devanagari(word):
    normalized = unicodedata.normalize("NFC", word)
    units = syllabify_indic(word, ScriptId.DEVANAGARI)
    assert "".join(texts(units)) == normalized
    assert all(u.text for u in units)


@settings(max_examples=200)
@given(latin_words)
def test_lossless_latin(word):
    units = syllabify_alpha(word, ScriptId.LATIN)
    assert "".join(texts(units)) == word
    assert all(u.text for u in units)


@settings(max_examples=200)
@given(cyrillic_words)
def test_lossless_cyrillic(word):
    units = syllabify_alpha(word, ScriptId.CYRILLIC)
    assert "".join(texts(units)) == word


@settings(max_examples=200)
@given(devanagari_words)
def test_deterministic(word):
    first = texts(syllabify_indic(word, ScriptId.DEVANAGARI))
    second = texts(syllabify_indic(word, ScriptId.DEVANAGARI))
    assert first == second


@settings(max_examples=200)
@given(st.one_of(devanagari_words, latin_words, cyrillic_words))
def test_idempotent_boundaries(word):
    try:
        units = syllabify(word)
    except MixedScriptError:
        return
    for unit in units:
        again = syllabify(unit.text)
        assert texts(again) == [unit.text]
