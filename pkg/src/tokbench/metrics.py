"""Tokenizer evaluation over a corpus: the benchmark metric row.

For one tokenizer this produces vocabulary size, total and unique token
counts, encoding wall time, the TR % and Pure % percentages over the
distinct-token set (or frequency weighted), and fertility (tokens per
word).
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .corpus import Corpus, corpus_stats
from .errors import MetricsError, TokenizerError
from .morphology import normalize_token
from .tokenizer import TokenizerModel, UnknownToken, decode_token, encode

WEIGHTINGS = ("unique", "frequency")


@dataclass
class EvalReport:
    """One tokenizer's full metric row."""

    model_name: str
    vocab_size: int
    total_tokens: int
    unique_tokens: int
    processing_time_s: float
    pct_tr: float
    pct_pure: float
    fertility: float | None = None
    params_b: float | None = None
    external_scores: dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if not 0 <= self.pct_tr <= 100:
            raise MetricsError(f"pct_tr out of range: {self.pct_tr}")
        if not 0 <= self.pct_pure <= 100:
            raise MetricsError(f"pct_pure out of range: {self.pct_pure}")
        if self.unique_tokens > min(self.total_tokens, self.vocab_size):
            raise MetricsError(
                "unique_tokens cannot exceed total_tokens or vocab_size "
                f"({self.unique_tokens} > min({self.total_tokens}, {self.vocab_size}))"
            )

    def to_dict(self) -> dict:
        return {
            "model_name": self.model_name,
            "params_b": self.params_b,
            "external_scores": dict(self.external_scores),
            "vocab_size": self.vocab_size,
            "total_tokens": self.total_tokens,
            "unique_tokens": self.unique_tokens,
            "processing_time_s": self.processing_time_s,
            "pct_tr": self.pct_tr,
            "pct_pure": self.pct_pure,
            "fertility": self.fertility,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "EvalReport":
        return cls(
            model_name=data["model_name"],
            vocab_size=data["vocab_size"],
            total_tokens=data["total_tokens"],
            unique_tokens=data["unique_tokens"],
            processing_time_s=data["processing_time_s"],
            pct_tr=data["pct_tr"],
            pct_pure=data["pct_pure"],
            fertility=data.get("fertility"),
            params_b=data.get("params_b"),
            external_scores=dict(data.get("external_scores") or {}),
        )


def unique_tokens(stream) -> set[int]:
    """Distinct vocabulary ids in a token stream (unknown records excluded)."""
    return {item for item in stream if isinstance(item, int)}


def compute_percentages(tokens, validator, counts=None) -> tuple[float, float]:
    """TR % and Pure % over a set of decoded tokens.

    ``tokens`` is the distinct-token set; with ``counts`` given, each token
    is weighted by its occurrence count (frequency weighting). Tokens whose
    normalized form is absent stay in the denominator and fail both
    predicates.
    """
    tokens = list(tokens)
    if not tokens:
        raise MetricsError("cannot compute percentages over an empty token set")
    if counts is None:
        counts = [1] * len(tokens)
    else:
        counts = list(counts)
        if len(counts) != len(tokens):
            raise MetricsError("counts must align with tokens")
    total_weight = sum(counts)
    tr_weight = 0
    pure_weight = 0
    for token, weight in zip(tokens, counts):
        word = normalize_token(token)
        if word is None:
            continue
        if validator.is_valid_word(word):
            tr_weight += weight
        if validator.is_pure_token(word):
            pure_weight += weight
    return 100.0 * tr_weight / total_weight, 100.0 * pure_weight / total_weight


def fertility(total_tokens: int, word_count: int) -> float:
    """Tokens per word."""
    if word_count <= 0:
        raise MetricsError("fertility requires a positive word count")
    return total_tokens / word_count


def _encode_document(model: TokenizerModel, doc):
    try:
        return encode(model, doc.text)
    except TokenizerError as exc:
        raise MetricsError(f"document {doc.id}: {exc}") from exc


def evaluate_tokenizer(
    model: TokenizerModel,
    corpus: Corpus,
    validator,
    *,
    model_name: str = "tokenizer",
    params_b: float | None = None,
    external_scores: dict[str, float] | None = None,
    weighting: str = "unique",
    letters_only: bool = False,
    workers: int = 1,
) -> EvalReport:
    """Run one tokenizer over a corpus and assemble its metric row.

    Timing covers encoding only (no I/O, no validation) on a monotonic
    clock; the canonical time is measured with ``workers=1``. Multiple
    workers change only wall time, never any other metric: aggregation is
    order-preserving sums and set unions.
    """
    if len(corpus) == 0:
        raise MetricsError("empty corpus")
    if weighting not in WEIGHTINGS:
        raise MetricsError(f"unknown weighting {weighting!r}")

    docs = list(corpus)
    start = time.perf_counter()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            streams = list(pool.map(lambda d: _encode_document(model, d), docs))
    else:
        streams = [_encode_document(model, doc) for doc in docs]
    elapsed = time.perf_counter() - start

    total = 0
    occurrences: dict[object, int] = {}
    for stream in streams:
        total += len(stream)
        for item in stream:
            key = item if isinstance(item, int) else ("unk", item.char)
            occurrences[key] = occurrences.get(key, 0) + 1

    distinct = []
    counts = []
    for key, count in occurrences.items():
        token = decode_token(model, key) if isinstance(key, int) else UnknownToken(key[1])
        if letters_only and normalize_token(token) is None:
            continue
        distinct.append(token)
        counts.append(count)

    unique_count = sum(1 for key in occurrences if isinstance(key, int))
    pct_tr, pct_pure = compute_percentages(
        distinct, validator, counts=counts if weighting == "frequency" else None
    )

    stats = corpus_stats(corpus)
    tokens_per_word = fertility(total, stats.word_count) if stats.word_count > 0 else None

    return EvalReport(
        model_name=model_name,
        vocab_size=model.vocab_size,
        total_tokens=total,
        unique_tokens=unique_count,
        processing_time_s=elapsed,
        pct_tr=pct_tr,
        pct_pure=pct_pure,
        fertility=tokens_per_word,
        params_b=params_b,
        external_scores=dict(external_scores or {}),
    )
