"""Aggregate chart emission (JSON + static SVG) and accuracy evaluation."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path

from namecensus.batchio import AggregateStats
from namecensus.classifier import GenderLabel, Prediction
from namecensus.errors import GoldLabelError

LABEL_ORDER = [
    GenderLabel.FEMALE,
    GenderLabel.MALE,
    GenderLabel.UNISEX,
    GenderLabel.UNKNOWN,
]

SVG_BAR_SCALE = 400  # px for a 100% bar
_BAR_WIDTH = 80
_BAR_GAP = 30
_MARGIN = 40


def chart_payload(stats: AggregateStats) -> dict:
    return {
        "total": stats.total,
        "labels": [
            {
                "name": label.value,
                "count": stats.counts[label],
                "percent": stats.percentages[label],
            }
            for label in LABEL_ORDER
        ],
    }


def render_svg(stats: AggregateStats) -> str:
    width = 2 * _MARGIN + 4 * _BAR_WIDTH + 3 * _BAR_GAP
    height = 2 * _MARGIN + SVG_BAR_SCALE + 30
    baseline = _MARGIN + SVG_BAR_SCALE
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
        f'<line x1="{_MARGIN}" y1="{baseline}" x2="{width - _MARGIN}" '
        f'y2="{baseline}" stroke="black"/>',
    ]
    for i, label in enumerate(LABEL_ORDER):
        pct = stats.percentages[label]
        bar_h = pct / 100.0 * SVG_BAR_SCALE
        x = _MARGIN + i * (_BAR_WIDTH + _BAR_GAP)
        y = baseline - bar_h
        parts.append(
            f'<rect class="bar" x="{x}" y="{y:.3f}" width="{_BAR_WIDTH}" '
            f'height="{bar_h:.3f}" fill="#4c72b0"/>'
        )
        parts.append(
            f'<text x="{x + _BAR_WIDTH / 2}" y="{baseline + 20}" '
            f'text-anchor="middle" font-size="14">{label.value}</text>'
        )
        parts.append(
            f'<text x="{x + _BAR_WIDTH / 2}" y="{y - 6:.3f}" '
            f'text-anchor="middle" font-size="13">'
            f"{pct:.1f}% ({stats.counts[label]})</text>"
        )
    parts.append("</svg>")
    return "\n".join(parts)


def emit_chart(stats: AggregateStats, json_path: str | Path, svg_path: str | Path) -> None:
    """Write the aggregate as machine-readable JSON and a static bar chart."""
    Path(json_path).write_text(
        json.dumps(chart_payload(stats), indent=2) + "\n", encoding="utf-8"
    )
    Path(svg_path).write_text(render_svg(stats) + "\n", encoding="utf-8")


@dataclass(frozen=True)
class EvalResult:
    total: int
    correct: int
    accuracy: float
    confusion: dict[tuple[GenderLabel, GenderLabel], int]  # (predicted, gold)
    mismatches: list[tuple[str, GenderLabel, GenderLabel]]


def load_gold_labels(path: str | Path) -> dict[str, GenderLabel]:
    """Gold CSV `name,gender` with header; gender is Female or Male."""
    gold: dict[str, GenderLabel] = {}
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or not {"name", "gender"} <= set(reader.fieldnames):
            raise GoldLabelError(f"{path}: expected columns name,gender")
        for row in reader:
            name = row["name"].strip()
            gender = row["gender"].strip()
            if gender not in ("Female", "Male"):
                raise GoldLabelError(f"{path}: gold gender must be Female or Male: {gender!r}")
            label = GenderLabel(gender)
            if name in gold and gold[name] is not label:
                raise GoldLabelError(f"{path}: conflicting gold labels for {name!r}")
            gold[name] = label
    if not gold:
        raise GoldLabelError(f"{path}: empty gold set")
    return gold


def evaluate(
    predictions: list[Prediction], gold: dict[str, GenderLabel]
) -> EvalResult:
    """Strict scoring: only an exact label match counts as correct, so
    Unisex and Unknown are always wrong against binary gold."""
    if not gold:
        raise GoldLabelError("empty gold set")
    by_name = {p.raw_name: p for p in predictions}
    missing = sorted(name for name in gold if name not in by_name)
    if missing:
        raise GoldLabelError(f"gold names absent from predictions: {missing}")
    confusion = {(p, g): 0 for p in GenderLabel for g in (GenderLabel.FEMALE, GenderLabel.MALE)}
    mismatches = []
    correct = 0
    for name in sorted(gold):
        predicted = by_name[name].label
        confusion[(predicted, gold[name])] += 1
        if predicted is gold[name]:
            correct += 1
        else:
            mismatches.append((name, predicted, gold[name]))
    total = len(gold)
    return EvalResult(
        total=total,
        correct=correct,
        accuracy=correct / total,
        confusion=confusion,
        mismatches=mismatches,
    )
