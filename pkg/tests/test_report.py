import json
import random
import re

import pytest

from namecensus.batchio import AggregateStats
from namecensus.classifier import GenderLabel, Posterior, Prediction
from namecensus.errors import GoldLabelError
from namecensus.report import (
    SVG_BAR_SCALE,
    chart_payload,
    emit_chart,
    evaluate,
    load_gold_labels,
    render_svg,
)
from namecensus.scriptdetect import Script


def stats_from_counts(female, male, unisex, unknown):
    counts = {
        GenderLabel.FEMALE: female,
        GenderLabel.MALE: male,
        GenderLabel.UNISEX: unisex,
        GenderLabel.UNKNOWN: unknown,
    }
    total = sum(counts.values())
    return AggregateStats(
        counts=counts,
        percentages={lb: 100.0 * n / total for lb, n in counts.items()},
        total=total,
    )


def svg_bar_heights(svg: str) -> list[float]:
    return [
        float(m.group(1))
        for m in re.finditer(r'class="bar"[^/]*height="([0-9.]+)"', svg)
    ]


class TestChart:
    def test_json_schema_and_round_trip(self, tmp_path):
        stats = stats_from_counts(3, 6, 1, 0)
        json_path, svg_path = tmp_path / "c.json", tmp_path / "c.svg"
        emit_chart(stats, json_path, svg_path)
        doc = json.loads(json_path.read_text(encoding="utf-8"))
        assert doc["total"] == 10
        assert [e["name"] for e in doc["labels"]] == [
            "Female", "Male", "Unisex", "Unknown",
        ]
        for entry in doc["labels"]:
            label = GenderLabel(entry["name"])
            assert entry["count"] == stats.counts[label]
            assert entry["percent"] == stats.percentages[label]  # no re-rounding

    def test_bar_heights_proportional(self):
        stats = stats_from_counts(3, 6, 1, 0)
        heights = svg_bar_heights(render_svg(stats))
        assert len(heights) == 4
        assert heights[1] == pytest.approx(2 * heights[0], abs=1.0)
        for label, height in zip(
            [GenderLabel.FEMALE, GenderLabel.MALE, GenderLabel.UNISEX,
             GenderLabel.UNKNOWN],
            heights,
        ):
            expected = stats.percentages[label] / 100.0 * SVG_BAR_SCALE
            assert height == pytest.approx(expected, abs=1.0)

    def test_single_label_stats(self):
        heights = svg_bar_heights(render_svg(stats_from_counts(0, 0, 0, 4)))
        assert heights == [0.0, 0.0, 0.0, SVG_BAR_SCALE]

    def test_payload_percent_exact(self):
        stats = stats_from_counts(1, 2, 0, 0)
        payload = chart_payload(stats)
        assert payload["labels"][0]["percent"] == stats.percentages[GenderLabel.FEMALE]


def _pred(name, label):
    found = label is not GenderLabel.UNKNOWN
    return Prediction(name, Script.LATIN, name.lower(),
                      Posterior(found, 0.9, 0.1) if found else Posterior(False),
                      label, index=1)


class TestEvaluate:
    def test_strict_scoring_counts_unisex_as_wrong(self):
        preds = [_pred(f"n{i}", GenderLabel.FEMALE) for i in range(9)]
        preds.append(_pred("n9", GenderLabel.UNISEX))
        gold = {f"n{i}": GenderLabel.FEMALE for i in range(10)}
        result = evaluate(preds, gold)
        assert result.accuracy == pytest.approx(0.9)
        assert result.mismatches == [("n9", GenderLabel.UNISEX, GenderLabel.FEMALE)]

    def test_all_unknown_is_zero_accuracy(self):
        preds = [_pred(f"n{i}", GenderLabel.UNKNOWN) for i in range(4)]
        gold = {f"n{i}": GenderLabel.MALE for i in range(4)}
        assert evaluate(preds, gold).accuracy == 0.0

    def test_permutation_invariant(self):
        preds = [_pred(f"n{i}", random.Random(i).choice(list(GenderLabel)))
                 for i in range(20)]
        gold = {f"n{i}": GenderLabel.FEMALE for i in range(20)}
        shuffled = preds[::-1]
        assert evaluate(preds, gold) == evaluate(shuffled, gold)

    def test_confusion_reconciles_with_total(self):
        preds = [
            _pred("a", GenderLabel.FEMALE),
            _pred("b", GenderLabel.MALE),
            _pred("c", GenderLabel.UNISEX),
            _pred("d", GenderLabel.UNKNOWN),
        ]
        gold = {
            "a": GenderLabel.FEMALE,
            "b": GenderLabel.FEMALE,
            "c": GenderLabel.MALE,
            "d": GenderLabel.MALE,
        }
        result = evaluate(preds, gold)
        assert sum(result.confusion.values()) == result.total == 4
        assert result.correct == 1
        assert len(result.mismatches) == result.total - result.correct

    def test_unmatched_gold_names_error(self):
        with pytest.raises(GoldLabelError, match="absent"):
            evaluate([_pred("a", GenderLabel.MALE)], {"zz": GenderLabel.MALE})

    def test_empty_gold_error(self):
        with pytest.raises(GoldLabelError, match="empty"):
            evaluate([_pred("a", GenderLabel.MALE)], {})


class TestGoldFile:
    def test_load(self, tmp_path):
        path = tmp_path / "gold.csv"
        path.write_text("name,gender\nAda Lovelace,Female\n王青,Male\n", encoding="utf-8")
        gold = load_gold_labels(path)
        assert gold == {
            "Ada Lovelace": GenderLabel.FEMALE,
            "王青": GenderLabel.MALE,
        }

    def test_conflicting_duplicates(self, tmp_path):
        path = tmp_path / "gold.csv"
        path.write_text("name,gender\nA,Female\nA,Male\n", encoding="utf-8")
        with pytest.raises(GoldLabelError, match="conflicting"):
            load_gold_labels(path)

    def test_bad_gender_value(self, tmp_path):
        path = tmp_path / "gold.csv"
        path.write_text("name,gender\nA,Unisex\n", encoding="utf-8")
        with pytest.raises(GoldLabelError, match="Female or Male"):
            load_gold_labels(path)

    def test_empty_gold_file(self, tmp_path):
        path = tmp_path / "gold.csv"
        path.write_text("name,gender\n", encoding="utf-8")
        with pytest.raises(GoldLabelError, match="empty"):
            load_gold_labels(path)
