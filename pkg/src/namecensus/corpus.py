"""Parse and aggregate the name-frequency corpora into classifier models.

English side: a directory of yearly ``yob<YYYY>.txt`` files, each line
``Name,S,Count`` with no header. Chinese side: a single UTF-8 CSV
``char,female,male`` with a header row.
"""

from __future__ import annotations

import csv
import re
import unicodedata
from dataclasses import dataclass
from pathlib import Path

from namecensus.errors import CorpusError
from namecensus.scriptdetect import is_han

YEAR_FILE_RE = re.compile(r"^yob(\d{4})\.txt$")


@dataclass(frozen=True)
class EnglishNameModel:
    """Per-given-name gender counts aggregated over all yearly files.

    Keys are case-folded and NFC-normalized. Values are
    (female_count, male_count) pairs.
    """

    entries: dict[str, tuple[int, int]]
    total_female: int
    total_male: int

    @property
    def distinct_names(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class ChineseCharModel:
    """Per-character gender counts for Han given names."""

    entries: dict[str, tuple[int, int]]
    total_female: int
    total_male: int
    smoothing_alpha: float = 1.0

    @property
    def vocabulary_size(self) -> int:
        return len(self.entries)


def normalize_name_key(name: str) -> str:
    """Canonical lookup key for a Latin given name."""
    return unicodedata.normalize("NFC", name).casefold()


def _parse_year_line(line: str, path: Path, lineno: int) -> tuple[str, str, int]:
    parts = line.split(",")
    if len(parts) != 3:
        raise CorpusError(
            f"{path}:{lineno}: expected 3 comma-separated fields, got {len(parts)}"
        )
    name, sex, count_text = parts
    if sex not in ("F", "M"):
        raise CorpusError(f"{path}:{lineno}: sex must be F or M, got {sex!r}")
    if not name or any(ch.isdigit() for ch in name):
        raise CorpusError(f"{path}:{lineno}: bad name field {name!r}")
    try:
        count = int(count_text)
    except ValueError:
        raise CorpusError(f"{path}:{lineno}: count is not an integer: {count_text!r}")
    if count < 1:
        raise CorpusError(f"{path}:{lineno}: count must be >= 1, got {count}")
    return name, sex, count


def find_year_files(directory: str | Path) -> list[Path]:
    directory = Path(directory)
    if not directory.is_dir():
        raise CorpusError(f"corpus directory not found: {directory}")
    files = sorted(p for p in directory.iterdir() if YEAR_FILE_RE.match(p.name))
    if not files:
        raise CorpusError(f"no yob<YYYY>.txt files in {directory}")
    return files


def load_english_year_files(directory: str | Path) -> EnglishNameModel:
    """Aggregate every yearly file in `directory` into one model.

    Counts for the same (case-folded name, sex) sum across years, so the
    result is independent of file and row order.
    """
    entries: dict[str, list[int]] = {}
    for path in find_year_files(directory):
        with open(path, encoding="utf-8", newline="") as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.rstrip("\r\n")
                if not line:
                    continue
                name, sex, count = _parse_year_line(line, path, lineno)
                key = normalize_name_key(name)
                pair = entries.setdefault(key, [0, 0])
                pair[0 if sex == "F" else 1] += count
    final = {k: (v[0], v[1]) for k, v in entries.items()}
    return EnglishNameModel(
        entries=final,
        total_female=sum(v[0] for v in final.values()),
        total_male=sum(v[1] for v in final.values()),
    )


def load_chinese_charfreq(
    file_path: str | Path, smoothing_alpha: float = 1.0
) -> ChineseCharModel:
    """Load the single-character frequency table ``char,female,male``."""
    file_path = Path(file_path)
    if not file_path.is_file():
        raise CorpusError(f"character corpus not found: {file_path}")
    entries: dict[str, tuple[int, int]] = {}
    try:
        with open(file_path, encoding="utf-8", newline="") as fh:
            reader = csv.reader(fh)
            header = next(reader, None)
            if header != ["char", "female", "male"]:
                raise CorpusError(
                    f"{file_path}:1: expected header char,female,male, got {header}"
                )
            for row in reader:
                lineno = reader.line_num
                if not row:
                    continue
                if len(row) != 3:
                    raise CorpusError(
                        f"{file_path}:{lineno}: expected 3 columns, got {len(row)}"
                    )
                char, female_text, male_text = row
                if len(char) != 1 or not is_han(char):
                    raise CorpusError(
                        f"{file_path}:{lineno}: key must be one Han character, got {char!r}"
                    )
                if char in entries:
                    raise CorpusError(f"{file_path}:{lineno}: duplicate character {char!r}")
                try:
                    female, male = int(female_text), int(male_text)
                except ValueError:
                    raise CorpusError(f"{file_path}:{lineno}: non-integer count")
                if female < 0 or male < 0:
                    raise CorpusError(f"{file_path}:{lineno}: negative count")
                entries[char] = (female, male)
    except UnicodeDecodeError as exc:
        raise CorpusError(f"{file_path}: not valid UTF-8: {exc}") from exc
    if smoothing_alpha <= 0:
        raise CorpusError(f"smoothing alpha must be positive, got {smoothing_alpha}")
    return ChineseCharModel(
        entries=entries,
        total_female=sum(v[0] for v in entries.values()),
        total_male=sum(v[1] for v in entries.values()),
        smoothing_alpha=smoothing_alpha,
    )
