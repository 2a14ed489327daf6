"""Command-line front end.

Subcommands: evaluate, compare, correlate, scatter, segment, check-token,
stats. Exit codes: 0 success, 1 user/input error, 2 internal invariant
violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import data as bundled
from .corpus import corpus_stats, load_corpus
from .errors import ConfigError, TokbenchError
from .figures import svg_heatmap, svg_scatter
from .metrics import EvalReport, evaluate_tokenizer
from .morphology import (
    TurkishValidator,
    load_affixes,
    load_lexicon,
    load_wordlist,
    turkish_lower,
)
from .report import (
    render_comparison_markdown,
    render_report_markdown,
    reports_to_json,
    write_reports_csv,
)
from .stats import (
    MetricTable,
    correlation_matrix,
    matrix_to_json,
    read_table_csv,
    write_matrix_csv,
    write_table_csv,
)
from .tokenizer import load_tokenizer


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; route through the normal
    # user-error path (exit 1) instead.
    def error(self, message):
        raise ConfigError(message)


@dataclass
class ComparisonEntry:
    name: str
    tokenizer_file: Path | None = None
    params_b: float | None = None
    external_scores: dict[str, float] = field(default_factory=dict)
    metrics: dict | None = None


@dataclass
class ComparisonConfig:
    entries: list[ComparisonEntry]
    corpus: Path | None = None
    corpus_format: str = "jsonl"
    text_fields: list[str] = field(default_factory=lambda: ["text"])
    lexicon: Path | None = None
    affixes: Path | None = None
    wordlist: Path | None = None
    weighting: str = "unique"
    purity_mode: str = "single"
    letters_only: bool = False


def load_comparison_config(path) -> ComparisonConfig:
    """Load and validate a comparison config; paths resolve relative to it."""
    base = Path(path).parent
    with open(path, encoding="utf-8") as handle:
        try:
            raw = json.load(handle)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: malformed JSON ({exc.msg})") from exc
    if not isinstance(raw, dict):
        raise ConfigError(f"{path}: top-level value must be an object")

    def resolve(value):
        return None if value is None else (base / value)

    entries = []
    names = set()
    for index, item in enumerate(raw.get("entries", [])):
        if not isinstance(item, dict) or "name" not in item:
            raise ConfigError(f"{path}: entry {index} must be an object with a name")
        name = item["name"]
        if name in names:
            raise ConfigError(f"{path}: duplicate entry name {name!r}")
        names.add(name)
        tokenizer_file = resolve(item.get("tokenizer_file"))
        metrics = item.get("metrics")
        if tokenizer_file is None and metrics is None:
            raise ConfigError(
                f"{path}: entry {name!r} needs a tokenizer_file or pre-filled metrics"
            )
        entries.append(
            ComparisonEntry(
                name=name,
                tokenizer_file=tokenizer_file,
                params_b=item.get("params_b"),
                external_scores=dict(item.get("external_scores") or {}),
                metrics=metrics,
            )
        )
    if not entries:
        raise ConfigError(f"{path}: entries list is empty")

    config = ComparisonConfig(
        entries=entries,
        corpus=resolve(raw.get("corpus")),
        corpus_format=raw.get("corpus_format", "jsonl"),
        text_fields=list(raw.get("text_fields") or ["text"]),
        lexicon=resolve(raw.get("lexicon")),
        affixes=resolve(raw.get("affixes")),
        wordlist=resolve(raw.get("wordlist")),
        weighting=raw.get("weighting", "unique"),
        purity_mode=raw.get("purity_mode", "single"),
        letters_only=bool(raw.get("letters_only", False)),
    )

    needs_corpus = any(e.metrics is None for e in entries)
    if needs_corpus and config.corpus is None:
        raise ConfigError(f"{path}: a corpus is required when entries are tokenized")
    referenced = [e.tokenizer_file for e in entries if e.tokenizer_file is not None]
    referenced += [p for p in (config.corpus, config.lexicon, config.affixes, config.wordlist)
                   if p is not None]
    for ref in referenced:
        if not Path(ref).exists():
            raise ConfigError(f"{path}: referenced file does not exist: {ref}")
    return config


def _entry_report(entry: ComparisonEntry) -> EvalReport:
    metrics = entry.metrics or {}
    try:
        return EvalReport(
            model_name=entry.name,
            vocab_size=metrics["vocab_size"],
            total_tokens=metrics["total_tokens"],
            unique_tokens=metrics["unique_tokens"],
            processing_time_s=metrics["processing_time_s"],
            pct_tr=metrics["pct_tr"],
            pct_pure=metrics["pct_pure"],
            fertility=metrics.get("fertility"),
            params_b=entry.params_b,
            external_scores=entry.external_scores,
        )
    except KeyError as exc:
        raise ConfigError(f"entry {entry.name!r}: missing metric {exc.args[0]!r}") from exc


def _load_validator(args) -> TurkishValidator:
    lexicon = load_lexicon(args.lexicon or bundled.DEFAULT_LEXICON)
    affixes = load_affixes(args.affixes or bundled.DEFAULT_AFFIXES)
    wordlist = load_wordlist(args.wordlist or bundled.DEFAULT_WORDLIST)
    return TurkishValidator(lexicon, affixes, wordlist, purity_mode=args.purity_mode)


def _text_fields(args) -> list[str]:
    return [f for f in (args.text_fields or "text").split(",") if f]


def _emit(text: str, out) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _parse_scores(pairs) -> dict[str, float]:
    scores = {}
    for pair in pairs or []:
        name, sep, value = pair.partition("=")
        if not sep or not name:
            raise ConfigError(f"--score expects name=value, got {pair!r}")
        try:
            scores[name] = float(value)
        except ValueError:
            raise ConfigError(f"--score {name}: {value!r} is not a number") from None
    return scores


def cmd_evaluate(args) -> int:
    model = load_tokenizer(args.tokenizer)
    corpus = load_corpus(args.corpus, format=args.corpus_format, text_fields=_text_fields(args))
    validator = _load_validator(args)
    report = evaluate_tokenizer(
        model,
        corpus,
        validator,
        model_name=args.name or Path(args.tokenizer).stem,
        params_b=args.params_b,
        external_scores=_parse_scores(args.score),
        weighting=args.weighting,
        letters_only=args.letters_only,
        workers=args.workers,
    )
    fmt = args.format or "json"
    if fmt == "json":
        _emit(reports_to_json([report]), args.out)
    elif fmt == "md":
        _emit(render_report_markdown(report), args.out)
    else:
        if not args.out:
            raise ConfigError("--format csv requires --out")
        write_reports_csv([report], args.out)
    return 0


def cmd_compare(args) -> int:
    config = load_comparison_config(args.config)
    reports: list[EvalReport] = []
    shared = None
    for entry in config.entries:
        if entry.metrics is not None:
            reports.append(_entry_report(entry))
            continue
        if shared is None:
            corpus = load_corpus(
                config.corpus, format=config.corpus_format, text_fields=config.text_fields
            )
            validator = TurkishValidator(
                load_lexicon(config.lexicon or bundled.DEFAULT_LEXICON),
                load_affixes(config.affixes or bundled.DEFAULT_AFFIXES),
                load_wordlist(config.wordlist or bundled.DEFAULT_WORDLIST),
                purity_mode=config.purity_mode,
            )
            shared = (corpus, validator)
        try:
            reports.append(
                evaluate_tokenizer(
                    load_tokenizer(entry.tokenizer_file),
                    shared[0],
                    shared[1],
                    model_name=entry.name,
                    params_b=entry.params_b,
                    external_scores=entry.external_scores,
                    weighting=config.weighting,
                    letters_only=config.letters_only,
                )
            )
        except TokbenchError as exc:
            raise ConfigError(f"entry {entry.name!r}: {exc}") from exc

    table = MetricTable.from_reports(reports)
    table_out = args.table_out
    if table_out is None:
        table_out = str(Path(args.out).with_suffix(".csv")) if args.out else "comparison.csv"
    write_table_csv(table, table_out)

    fmt = args.format or "md"
    if fmt == "md":
        _emit(render_comparison_markdown(reports), args.out)
    elif fmt == "json":
        _emit(reports_to_json(reports), args.out)
    else:
        write_reports_csv(reports, args.out or table_out)
    return 0


def cmd_correlate(args) -> int:
    table = read_table_csv(args.table)
    if args.columns:
        table = table.select([c for c in args.columns.split(",") if c])
    matrix = correlation_matrix(table)
    if (args.format or "csv") == "json":
        _emit(matrix_to_json(matrix), args.out)
    elif args.out:
        write_matrix_csv(matrix, args.out)
    else:
        lines = ["," + ",".join(matrix.labels)]
        lines.extend(
            label + "," + ",".join(repr(v) for v in row)
            for label, row in zip(matrix.labels, matrix.r)
        )
        _emit("\n".join(lines) + "\n", None)
    if args.svg:
        Path(args.svg).write_text(svg_heatmap(matrix), encoding="utf-8")
    return 0


def cmd_scatter(args) -> int:
    if not args.out:
        raise ConfigError("scatter requires --out for the SVG file")
    table = read_table_csv(args.table)
    svg = svg_scatter(table, args.x, args.y, size=args.size, color=args.color)
    Path(args.out).write_text(svg, encoding="utf-8")
    return 0


def cmd_segment(args) -> int:
    validator = _load_validator(args)
    parses = validator.segment(turkish_lower(args.word))
    if not parses:
        print("no parse")
    for parse in parses:
        print(str(parse))
    return 0


def cmd_check_token(args) -> int:
    validator = _load_validator(args)
    word = turkish_lower(args.token)
    tr = validator.is_valid_word(word)
    pure = validator.is_pure_token(word)
    print(f"tr={str(tr).lower()} pure={str(pure).lower()}")
    return 0


def cmd_stats(args) -> int:
    corpus = load_corpus(args.corpus, format=args.corpus_format, text_fields=_text_fields(args))
    stats = corpus_stats(corpus)
    if args.format == "json":
        _emit(
            json.dumps(
                {
                    "document_count": stats.document_count,
                    "char_count": stats.char_count,
                    "word_count": stats.word_count,
                },
                indent=2,
            ),
            args.out,
        )
    else:
        _emit(
            f"documents: {stats.document_count}\n"
            f"characters: {stats.char_count}\n"
            f"words: {stats.word_count}\n",
            args.out,
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--lexicon", help="root lexicon TSV (default: bundled)")
    common.add_argument("--affixes", help="affix inventory TSV (default: bundled)")
    common.add_argument("--wordlist", help="whole-word list (default: bundled)")
    common.add_argument("--weighting", choices=("unique", "frequency"), default="unique")
    common.add_argument("--purity-mode", choices=("single", "extended"), default="single")
    common.add_argument("--letters-only", action="store_true",
                        help="restrict percentage denominators to letters-only tokens")
    common.add_argument("--text-fields", default="text",
                        help="comma-separated JSONL fields joined into the document text")
    common.add_argument("--format", choices=("json", "csv", "md"))
    common.add_argument("--out", help="output path (default: stdout)")

    parser = _Parser(prog="tokbench", description="Tokenizer evaluation toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("evaluate", parents=[common], help="evaluate one tokenizer over a corpus")
    p.add_argument("--tokenizer", required=True)
    p.add_argument("--corpus", required=True)
    p.add_argument("--corpus-format", choices=("jsonl", "plain"), default="jsonl")
    p.add_argument("--name", help="model name for the report (default: tokenizer file stem)")
    p.add_argument("--params-b", type=float)
    p.add_argument("--score", action="append", metavar="NAME=VALUE",
                   help="external score, e.g. --score mmlu=72.10 (repeatable)")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("compare", parents=[common], help="evaluate/compare several tokenizers")
    p.add_argument("--config", required=True, help="comparison config JSON")
    p.add_argument("--table-out", help="metric table CSV path (default: next to --out)")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("correlate", parents=[common],
                       help="correlation matrix over a metric table CSV")
    p.add_argument("--table", required=True, help="metric table CSV (as written by compare)")
    p.add_argument("--columns", help="comma-separated subset of columns")
    p.add_argument("--svg", help="also write a heat map SVG")
    p.set_defaults(func=cmd_correlate)

    p = sub.add_parser("scatter", parents=[common], help="scatter plot SVG from a metric table")
    p.add_argument("--table", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--size", help="column controlling marker area")
    p.add_argument("--color", help="column controlling marker color")
    p.set_defaults(func=cmd_scatter)

    p = sub.add_parser("segment", parents=[common], help="morphological parses of a word")
    p.add_argument("word")
    p.set_defaults(func=cmd_segment)

    p = sub.add_parser("check-token", parents=[common], help="TR/pure verdict for a token")
    p.add_argument("token")
    p.set_defaults(func=cmd_check_token)

    p = sub.add_parser("stats", parents=[common], help="corpus statistics")
    p.add_argument("--corpus", required=True)
    p.add_argument("--corpus-format", choices=("jsonl", "plain"), default="jsonl")
    p.set_defaults(func=cmd_stats)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except TokbenchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        name = getattr(exc, "filename", None)
        detail = f"{exc.strerror}: {name}" if name else str(exc)
        print(f"error: {detail}", file=sys.stderr)
        return 1
    except Exception as exc:  # invariant violation: should not happen
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
