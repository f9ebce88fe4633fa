"""Read name lists, drive batch prediction in order, write results."""

from __future__ import annotations

import csv
import dataclasses
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from namecensus.classifier import (
    ClassifierConfig,
    GenderLabel,
    Prediction,
    predict,
)
from namecensus.corpus import ChineseCharModel, EnglishNameModel
from namecensus.errors import EmptyInputError, InputError


@dataclass(frozen=True)
class NameRecord:
    index: int  # 1-based, contiguous over kept records
    raw_name: str


@dataclass(frozen=True)
class AggregateStats:
    counts: dict[GenderLabel, int]
    percentages: dict[GenderLabel, float]
    total: int


def _read_text(path: Path) -> str:
    try:
        data = path.read_bytes()
    except FileNotFoundError:
        raise InputError(f"input file not found: {path}")
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InputError(f"{path}: invalid UTF-8 at byte offset {exc.start}")


def read_input(
    path: str | Path,
    format: str = "auto",
    name_column: str | int = "name",
    has_header: bool = True,
) -> list[NameRecord]:
    """One NameRecord per nonblank name, indices contiguous from 1.

    txt is one name per line; csv takes `name_column` (header name or
    0-based index); auto picks by file extension.
    """
    path = Path(path)
    text = _read_text(path)
    if format == "auto":
        format = "csv" if path.suffix.lower() == ".csv" else "txt"
    names: list[str] = []
    if format == "txt":
        names = [line.strip() for line in text.splitlines() if line.strip()]
    elif format == "csv":
        rows = list(csv.reader(text.splitlines()))
        if not rows:
            raise EmptyInputError(f"{path}: empty input")
        col: int
        if isinstance(name_column, int) or str(name_column).isdigit():
            col = int(name_column)
            body = rows[1:] if has_header else rows
        else:
            if not has_header:
                raise InputError(
                    f"{path}: name column {name_column!r} needs a header row"
                )
            header = rows[0]
            if name_column not in header:
                raise InputError(
                    f"{path}: no column {name_column!r} in header {header}"
                )
            col = header.index(name_column)
            body = rows[1:]
        for row in body:
            if not row or all(not cell.strip() for cell in row):
                continue
            if col >= len(row):
                raise InputError(
                    f"{path}: row {row} has no column index {col}"
                )
            name = row[col].strip()
            if name:
                names.append(name)
    else:
        raise InputError(f"unknown input format {format!r}")
    if not names:
        raise EmptyInputError(f"{path}: no name records found")
    return [NameRecord(i, name) for i, name in enumerate(names, start=1)]


def run_batch(
    english: EnglishNameModel,
    chinese: ChineseCharModel,
    config: ClassifierConfig,
    records: list[NameRecord],
    workers: int = 1,
) -> list[Prediction]:
    """Predict every record, preserving input order and indices.

    With workers > 1 the batch fans out over a thread pool; predict is
    pure over immutable models, so the output equals the sequential run.
    """

    def one(record: NameRecord) -> Prediction:
        pred = predict(english, chinese, config, record.raw_name)
        return dataclasses.replace(pred, index=record.index)

    if workers <= 1:
        return [one(r) for r in records]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(one, records, chunksize=1024))


RESULT_FIELDS = ["item", "name", "gender", "probability", "script", "given_name"]


def write_results(predictions: list[Prediction], path: str | Path) -> None:
    """Results CSV; probability is the max posterior, blank for Unknown."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(RESULT_FIELDS)
        for pred in predictions:
            if pred.posterior.evidence_found:
                prob = f"{max(pred.posterior.p_female, pred.posterior.p_male):.4f}"
            else:
                prob = ""
            writer.writerow(
                [pred.index, pred.raw_name, pred.label.value, prob,
                 pred.script.value, pred.given]
            )


def aggregate(predictions: list[Prediction]) -> AggregateStats:
    if not predictions:
        raise EmptyInputError("cannot aggregate zero predictions")
    counts = {label: 0 for label in GenderLabel}
    for pred in predictions:
        counts[pred.label] += 1
    total = len(predictions)
    percentages = {label: 100.0 * n / total for label, n in counts.items()}
    return AggregateStats(counts=counts, percentages=percentages, total=total)
