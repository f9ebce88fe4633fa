"""Classify an input name by script to pick the prediction pipeline."""

from __future__ import annotations

import enum
import functools
import unicodedata

# CJK Unified Ideographs, base block plus extensions A-H.
_HAN_RANGES = (
    (0x4E00, 0x9FFF),
    (0x3400, 0x4DBF),
    (0x20000, 0x2A6DF),
    (0x2A700, 0x2B73F),
    (0x2B740, 0x2B81F),
    (0x2B820, 0x2CEAF),
    (0x2CEB0, 0x2EBEF),
    (0x30000, 0x3134F),
    (0x31350, 0x323AF),
)


class Script(enum.Enum):
    HAN = "Han"
    LATIN = "Latin"
    MIXED = "Mixed"
    OTHER = "Other"
    EMPTY = "Empty"


def is_han(ch: str) -> bool:
    cp = ord(ch)
    return any(lo <= cp <= hi for lo, hi in _HAN_RANGES)


@functools.lru_cache(maxsize=4096)
def is_latin_letter(ch: str) -> bool:
    return ch.isalpha() and unicodedata.name(ch, "").startswith("LATIN")


def detect_script(raw_name: str) -> Script:
    """Pure, total script verdict; digits and punctuation never count.

    Han wins over stray non-Latin letters, Latin likewise; both present
    means Mixed, only non-Latin non-Han letters means Other, and no
    letters at all means Empty.
    """
    has_han = False
    has_latin = False
    has_other_alpha = False
    for ch in raw_name:
        if is_han(ch):
            has_han = True
        elif is_latin_letter(ch):
            has_latin = True
        elif ch.isalpha():
            has_other_alpha = True
    if has_han and has_latin:
        return Script.MIXED
    if has_han:
        return Script.HAN
    if has_latin:
        return Script.LATIN
    if has_other_alpha:
        return Script.OTHER
    return Script.EMPTY


def han_substring(raw_name: str) -> str:
    """The Han characters of a name, in order."""
    return "".join(ch for ch in raw_name if is_han(ch))
