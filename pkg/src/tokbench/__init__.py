"""tokbench: tokenizer evaluation for morphologically rich languages.

Runs subword tokenizers over a corpus, computes the benchmark metric suite
(vocabulary size, token counts, timing, fertility, TR % and Pure %),
correlates metrics against external model scores, and emits comparison
tables, correlation matrices, and SVG figures.
"""

from .corpus import Corpus, CorpusStats, Document, corpus_stats, load_corpus
from .errors import (
    ConfigError,
    CorpusError,
    FigureError,
    MetricsError,
    MorphologyError,
    StatsError,
    TokbenchError,
    TokenizerError,
)
from .figures import svg_heatmap, svg_scatter
from .metrics import (
    EvalReport,
    compute_percentages,
    evaluate_tokenizer,
    fertility,
    unique_tokens,
)
from .morphology import (
    AffixEntry,
    AffixInventory,
    RootEntry,
    RootLexicon,
    Segmentation,
    TurkishValidator,
    harmony_ok,
    load_affixes,
    load_lexicon,
    load_wordlist,
    normalize_token,
    segment_word,
    turkish_lower,
)
from .stats import (
    CorrelationMatrix,
    MetricTable,
    correlation_matrix,
    pearson,
    rank_models,
    read_table_csv,
    write_table_csv,
)
from .tokenizer import (
    DecodedToken,
    TokenizerModel,
    UnknownToken,
    bpe_encode,
    byte_to_unicode,
    decode_bytes,
    decode_token,
    encode,
    greedy_encode,
    load_tokenizer,
    pretokenize,
    unicode_to_byte,
)

__version__ = "0.1.0"

__all__ = [
    "AffixEntry",
    "AffixInventory",
    "ConfigError",
    "Corpus",
    "CorpusError",
    "CorpusStats",
    "CorrelationMatrix",
    "DecodedToken",
    "Document",
    "EvalReport",
    "FigureError",
    "MetricTable",
    "MetricsError",
    "MorphologyError",
    "RootEntry",
    "RootLexicon",
    "Segmentation",
    "StatsError",
    "TokbenchError",
    "TokenizerError",
    "TokenizerModel",
    "TurkishValidator",
    "UnknownToken",
    "bpe_encode",
    "byte_to_unicode",
    "compute_percentages",
    "corpus_stats",
    "correlation_matrix",
    "decode_bytes",
    "decode_token",
    "encode",
    "evaluate_tokenizer",
    "fertility",
    "greedy_encode",
    "harmony_ok",
    "load_affixes",
    "load_corpus",
    "load_lexicon",
    "load_tokenizer",
    "load_wordlist",
    "normalize_token",
    "pearson",
    "pretokenize",
    "rank_models",
    "read_table_csv",
    "segment_word",
    "svg_heatmap",
    "svg_scatter",
    "turkish_lower",
    "unicode_to_byte",
    "unique_tokens",
    "write_table_csv",
]
