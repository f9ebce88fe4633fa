"""Command-line entry point: build-cache, predict, eval, chart."""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from namecensus import __version__
from namecensus.batchio import aggregate, read_input, run_batch, write_results
from namecensus.cache import (
    digest_corpus_files,
    load_cache,
    read_source_digest,
    save_cache,
)
from namecensus.classifier import ClassifierConfig, GenderLabel
from namecensus.corpus import (
    find_year_files,
    load_chinese_charfreq,
    load_english_year_files,
)
from namecensus.errors import CacheError, NamecensusError
from namecensus.report import LABEL_ORDER, emit_chart, evaluate, load_gold_labels


def _default_cache() -> str | None:
    return os.environ.get("NAMECENSUS_CACHE")


def _add_cache_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--cache",
        default=_default_cache(),
        metavar="FILE.ncm",
        help="model cache path (default: $NAMECENSUS_CACHE)",
    )


def _add_classifier_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--threshold", type=float, default=None,
                        help="decisive posterior threshold (default 0.60)")
    parser.add_argument("--unisex-floor", type=float, default=None,
                        help="lower edge of the unisex band (default 0.50)")
    parser.add_argument("--alpha", type=float, default=None,
                        help="add-alpha smoothing for Chinese characters (default 1.0)")
    parser.add_argument("--priors", choices=["empirical", "uniform"], default=None,
                        help="gender priors mode (default empirical)")
    parser.add_argument("--config", metavar="FILE.json", default=None,
                        help="JSON config file; flags override its values")


def _resolve_config(args: argparse.Namespace) -> ClassifierConfig:
    base = {}
    if args.config:
        base = json.loads(Path(args.config).read_text(encoding="utf-8"))
    def pick(flag, key, default):
        return flag if flag is not None else base.get(key, default)
    return ClassifierConfig(
        decisive_threshold=pick(args.threshold, "threshold", 0.60),
        unisex_floor=pick(args.unisex_floor, "unisex_floor", 0.50),
        smoothing_alpha=pick(args.alpha, "alpha", 1.0),
        priors_mode=pick(args.priors, "priors", "empirical"),
    )


def _require(value, flag: str):
    if not value:
        raise NamecensusError(f"missing required flag {flag}")
    return value


def cmd_build_cache(args: argparse.Namespace) -> int:
    out = Path(_require(args.out, "--out"))
    year_files = find_year_files(args.english_dir)
    chinese_path = Path(args.chinese_csv)
    digest = digest_corpus_files(year_files + [chinese_path])
    if out.exists():
        try:
            if read_source_digest(out) == digest:
                print(f"cache up to date: {out}")
                return 0
        except CacheError:
            pass  # unreadable cache: rebuild
    english = load_english_year_files(args.english_dir)
    chinese = load_chinese_charfreq(chinese_path)
    save_cache(english, chinese, out, source_digest=digest)
    print(f"wrote cache: {out}")
    print(f"english distinct names: {english.distinct_names}")
    print(f"chinese distinct characters: {chinese.vocabulary_size}")
    return 0


def _print_stats(stats) -> None:
    print(f"total names: {stats.total}")
    for label in LABEL_ORDER:
        print(
            f"  {label.value:<8} {stats.counts[label]:>8} "
            f"({stats.percentages[label]:.1f}%)"
        )


def cmd_predict(args: argparse.Namespace) -> int:
    config = _resolve_config(args)
    cache = load_cache(_require(args.cache, "--cache"))
    records = read_input(
        _require(args.infile, "--in"),
        format=args.format,
        name_column=args.name_column,
        has_header=not args.no_header,
    )
    start = time.perf_counter()
    predictions = run_batch(
        cache.english, cache.chinese, config, records, workers=args.workers
    )
    elapsed = time.perf_counter() - start
    write_results(predictions, _require(args.out, "--out"))
    stats = aggregate(predictions)
    _print_stats(stats)
    rate = len(predictions) / elapsed if elapsed > 0 else float("inf")
    print(f"predicted {len(predictions)} names in {elapsed:.3f}s ({rate:.0f} names/s)")
    if args.chart_json or args.chart_svg:
        if not (args.chart_json and args.chart_svg):
            raise NamecensusError("--chart-json and --chart-svg go together")
        emit_chart(stats, args.chart_json, args.chart_svg)
        print(f"wrote chart: {args.chart_json}, {args.chart_svg}")
    return 0


def cmd_eval(args: argparse.Namespace) -> int:
    config = _resolve_config(args)
    cache = load_cache(_require(args.cache, "--cache"))
    records = read_input(
        _require(args.infile, "--in"),
        format=args.format,
        name_column=args.name_column,
        has_header=not args.no_header,
    )
    predictions = run_batch(cache.english, cache.chinese, config, records)
    gold = load_gold_labels(_require(args.gold, "--gold"))
    result = evaluate(predictions, gold)
    print(f"total: {result.total}")
    print(f"correct: {result.correct}")
    print(f"accuracy: {result.accuracy:.4f}")
    print("confusion (predicted x gold):")
    print(f"  {'':<8} {'Female':>8} {'Male':>8}")
    for predicted in LABEL_ORDER:
        row = [
            result.confusion[(predicted, gold_label)]
            for gold_label in (GenderLabel.FEMALE, GenderLabel.MALE)
        ]
        print(f"  {predicted.value:<8} {row[0]:>8} {row[1]:>8}")
    if result.mismatches:
        print("mismatches:")
        for name, predicted, gold_label in result.mismatches:
            print(f"  {name}: predicted {predicted.value}, gold {gold_label.value}")
    return 0


def cmd_chart(args: argparse.Namespace) -> int:
    import csv

    from namecensus.batchio import AggregateStats

    with open(args.results, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        labels = [GenderLabel(row["gender"]) for row in reader]
    if not labels:
        raise NamecensusError(f"no result rows in {args.results}")
    counts = {label: labels.count(label) for label in GenderLabel}
    total = len(labels)
    stats = AggregateStats(
        counts=counts,
        percentages={lb: 100.0 * n / total for lb, n in counts.items()},
        total=total,
    )
    emit_chart(stats, args.json, args.svg)
    _print_stats(stats)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="namecensus",
        description="Batch gender inference for mixed Chinese/English name lists.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-cache", help="train models from corpora and cache them")
    p.add_argument("--english-dir", required=True, metavar="DIR",
                   help="directory of yob<YYYY>.txt files")
    p.add_argument("--chinese-csv", required=True, metavar="FILE.csv",
                   help="char,female,male frequency table")
    p.add_argument("--out", required=True, metavar="FILE.ncm")
    p.set_defaults(func=cmd_build_cache)

    for name, func in (("predict", cmd_predict), ("eval", cmd_eval)):
        p = sub.add_parser(name, help=f"{name} a batch of names")
        _add_cache_flag(p)
        p.add_argument("--in", dest="infile", required=True, metavar="NAMES")
        p.add_argument("--format", choices=["txt", "csv", "auto"], default="auto")
        p.add_argument("--name-column", default="name",
                       help="CSV column holding names (name or 0-based index)")
        p.add_argument("--no-header", action="store_true",
                       help="CSV input has no header row")
        _add_classifier_flags(p)
        if name == "predict":
            p.add_argument("--out", required=True, metavar="RESULTS.csv")
            p.add_argument("--chart-json", default=None, metavar="CHART.json")
            p.add_argument("--chart-svg", default=None, metavar="CHART.svg")
            p.add_argument("--workers", type=int, default=1,
                           help="worker threads for the batch (default 1)")
        else:
            p.add_argument("--gold", required=True, metavar="GOLD.csv",
                           help="gold labels CSV: name,gender")
        p.set_defaults(func=func)

    p = sub.add_parser("chart", help="re-emit the chart from a results CSV")
    p.add_argument("--results", required=True, metavar="RESULTS.csv")
    p.add_argument("--json", required=True, metavar="CHART.json")
    p.add_argument("--svg", required=True, metavar="CHART.svg")
    p.set_defaults(func=cmd_chart)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NamecensusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
