"""Paths to the resources bundled with the package.

``benchmark_fixture.json`` holds the reference benchmark of four production
LLM tokenizers (pre-filled metrics plus externally reported MMLU scores and
parameter counts); the TSV files are the default Turkish validator
resources; the toy tokenizers and corpus back the demos and tests.
"""

from __future__ import annotations

from pathlib import Path

_DATA_DIR = Path(__file__).parent / "data"

BENCHMARK_FIXTURE = _DATA_DIR / "benchmark_fixture.json"
DEFAULT_LEXICON = _DATA_DIR / "roots.tsv"
DEFAULT_AFFIXES = _DATA_DIR / "affixes.tsv"
DEFAULT_WORDLIST = _DATA_DIR / "wordlist.txt"
TOY_BPE_TOKENIZER = _DATA_DIR / "toy_bpe.json"
TOY_GREEDY_TOKENIZER = _DATA_DIR / "toy_greedy.json"
TOY_CORPUS = _DATA_DIR / "corpus_tr.jsonl"
TOY_QUESTIONS = _DATA_DIR / "questions.jsonl"
TOY_COMPARE_CONFIG = _DATA_DIR / "toy_compare.json"


def default_validator(purity_mode: str = "single"):
    """Validator built from the bundled lexicon, affixes, and word list."""
    from .morphology import TurkishValidator, load_affixes, load_lexicon, load_wordlist

    return TurkishValidator(
        lexicon=load_lexicon(DEFAULT_LEXICON),
        affixes=load_affixes(DEFAULT_AFFIXES),
        wordlist=load_wordlist(DEFAULT_WORDLIST),
        purity_mode=purity_mode,
    )
