"""Corpus ingestion and corpus-level statistics.

A corpus is an ordered, immutable collection of documents loaded from a
JSONL file (one record per line) or a plain text file (one document per
file). Statistics count Unicode scalar values, not bytes, and words as
maximal runs of non-whitespace.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass

from .errors import CorpusError

CORPUS_FORMATS = ("jsonl", "plain")


@dataclass(frozen=True)
class Document:
    id: str
    text: str


@dataclass(frozen=True)
class Corpus:
    documents: tuple[Document, ...]

    def __len__(self) -> int:
        return len(self.documents)

    def __iter__(self):
        return iter(self.documents)

    def __getitem__(self, index):
        return self.documents[index]


@dataclass(frozen=True)
class CorpusStats:
    document_count: int
    char_count: int
    word_count: int

    def __post_init__(self):
        if min(self.document_count, self.char_count, self.word_count) < 0:
            raise CorpusError("corpus counts must be non-negative")
        if self.word_count > self.char_count:
            raise CorpusError("word count cannot exceed character count")


def load_corpus(path, format: str = "jsonl", text_fields=("text",)) -> Corpus:
    """Load a corpus file.

    JSONL: one UTF-8 JSON object per line; the document text is the values
    of ``text_fields`` joined by a single newline, in the given field order.
    Plain: the whole file becomes one document. Document order is file
    order and loading is byte-for-byte deterministic.
    """
    if format not in CORPUS_FORMATS:
        raise CorpusError(f"unknown corpus format {format!r} (expected jsonl or plain)")
    fields = list(text_fields) if text_fields else ["text"]
    if not fields:
        raise CorpusError("text_fields must name at least one field")

    with open(path, encoding="utf-8") as handle:
        raw = handle.read()

    if format == "plain":
        doc_id = os.path.basename(str(path))
        return Corpus(documents=(Document(id=doc_id, text=raw),))

    documents = []
    for lineno, line in enumerate(raw.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CorpusError(f"{path}: line {lineno}: malformed JSON ({exc.msg})") from exc
        if not isinstance(record, dict):
            raise CorpusError(f"{path}: line {lineno}: record is not a JSON object")
        parts = []
        for name in fields:
            if name not in record:
                raise CorpusError(f"{path}: line {lineno}: missing field {name!r}")
            value = record[name]
            if not isinstance(value, str):
                raise CorpusError(
                    f"{path}: line {lineno}: field {name!r} is not a string"
                )
            parts.append(value)
        documents.append(Document(id=str(lineno), text="\n".join(parts)))
    return Corpus(documents=tuple(documents))


def corpus_stats(corpus: Corpus) -> CorpusStats:
    """Count documents, Unicode scalar values, and whitespace-delimited words."""
    chars = 0
    words = 0
    for doc in corpus:
        chars += len(doc.text)
        words += len(doc.text.split())
    return CorpusStats(document_count=len(corpus), char_count=chars, word_count=words)
