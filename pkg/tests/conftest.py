import json

import pytest

from tokbench import data as bundled
from tokbench.cli import load_comparison_config, report_from_entry
from tokbench.morphology import load_affixes, load_lexicon, load_wordlist, TurkishValidator
from tokbench.stats import MetricTable
from tokbench.tokenizer import load_tokenizer


@pytest.fixture(scope="session")
def lexicon():
    return load_lexicon(bundled.DEFAULT_LEXICON)


@pytest.fixture(scope="session")
def affixes():
    return load_affixes(bundled.DEFAULT_AFFIXES)


@pytest.fixture(scope="session")
def wordlist():
    return load_wordlist(bundled.DEFAULT_WORDLIST)


@pytest.fixture(scope="session")
def validator(lexicon, affixes, wordlist):
    return TurkishValidator(lexicon, affixes, wordlist)


@pytest.fixture(scope="session")
def toy_bpe():
    return load_tokenizer(bundled.TOY_BPE_TOKENIZER)


@pytest.fixture(scope="session")
def toy_greedy():
    return load_tokenizer(bundled.TOY_GREEDY_TOKENIZER)


@pytest.fixture(scope="session")
def bench_reports():
    config = load_comparison_config(bundled.BENCHMARK_FIXTURE)
    return [report_from_entry(entry) for entry in config.entries]


@pytest.fixture(scope="session")
def bench_table(bench_reports):
    return MetricTable.from_reports(bench_reports)


@pytest.fixture
def write_jsonl(tmp_path):
    def _write(records, name="corpus.jsonl"):
        path = tmp_path / name
        with open(path, "w", encoding="utf-8") as handle:
            for record in records:
                handle.write(json.dumps(record, ensure_ascii=False) + "\n")
        return path

    return _write
