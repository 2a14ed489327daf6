"""Exception hierarchy shared across the toolkit.

Every error raised by tokbench derives from :class:`TokbenchError`, so
callers (including the CLI) can distinguish input problems from bugs.
"""


class TokbenchError(Exception):
    """Base class for all toolkit errors."""


class CorpusError(TokbenchError):
    """Corpus file cannot be read or violates its schema."""


class TokenizerError(TokbenchError):
    """Tokenizer file, model invariant, or encode/decode failure."""


class MorphologyError(TokbenchError):
    """Linguistic resource or predicate precondition failure."""


class MetricsError(TokbenchError):
    """Evaluation precondition or report invariant failure."""


class StatsError(TokbenchError):
    """Correlation/ranking precondition failure."""


class FigureError(TokbenchError):
    """Figure emission failure (missing columns, empty tables)."""


class ConfigError(TokbenchError):
    """Comparison config file is malformed or references missing files."""
