"""Tokenizer models: loading, byte-level BPE, and greedy longest-match.

Two model kinds are supported:

* ``byte-bpe``: text is pre-split into pieces, each piece's UTF-8 bytes are
  mapped onto printable code points through a fixed byte table, and merge
  rules are replayed in priority order. With a complete single-byte
  vocabulary this is lossless for arbitrary text.
* ``greedy``: longest-prefix dictionary matching over each piece; characters
  not covered by the vocabulary become explicit unknown records.

Model files are UTF-8 JSON::

    {
      "kind": "byte-bpe" | "greedy",
      "marker": "byte-level-space" | "underscore-prefix" | "none",
      "vocab": {"<token>": <id>, ...},
      "merges": ["<sym> <sym>", ...]        # byte-bpe only, priority order
    }
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import TokenizerError

KINDS = ("byte-bpe", "greedy")
MARKERS = ("byte-level-space", "underscore-prefix", "none")

# Word-boundary marker used by underscore-prefix vocabularies (U+2581).
WORD_MARKER = "▁"


def _build_byte_table() -> tuple[dict[int, int], dict[int, int]]:
    # Bytes 33..126, 161..172 and 174..255 map to the identical code point;
    # the remaining 68 bytes map, in increasing order, to 256, 257, ...
    keep = set(range(0x21, 0x7F)) | set(range(0xA1, 0xAD)) | set(range(0xAE, 0x100))
    forward: dict[int, int] = {}
    next_cp = 0x100
    for b in range(256):
        if b in keep:
            forward[b] = b
        else:
            forward[b] = next_cp
            next_cp += 1
    inverse = {cp: b for b, cp in forward.items()}
    return forward, inverse


_BYTE_TO_UNICODE, _UNICODE_TO_BYTE = _build_byte_table()


def byte_to_unicode(b: int) -> int:
    """Map a byte value (0..255) to its printable stand-in code point."""
    if not 0 <= b <= 255:
        raise TokenizerError(f"byte value {b} out of range")
    return _BYTE_TO_UNICODE[b]


def unicode_to_byte(cp: int) -> int:
    """Inverse of :func:`byte_to_unicode`; fails on code points outside the image."""
    try:
        return _UNICODE_TO_BYTE[cp]
    except KeyError:
        raise TokenizerError(f"code point U+{cp:04X} is not in the byte table") from None


def _char_class(ch: str) -> str:
    if ch.isspace():
        return "space"
    if ch.isalpha():
        return "letter"
    if ch.isdigit():
        return "digit"
    return "other"


def pretokenize(text: str) -> list[str]:
    """Split text into pieces at letter/digit/other/whitespace run boundaries.

    A single space immediately preceding a letter, digit, or other run is
    attached to that run as its first character, so ``"Ali okula"`` becomes
    ``["Ali", " okula"]``. Concatenating the pieces always reproduces the
    input exactly.
    """
    if not text:
        return []
    runs: list[tuple[str, str]] = []
    cls = _char_class(text[0])
    start = 0
    for i in range(1, len(text)):
        nxt = _char_class(text[i])
        if nxt != cls:
            runs.append((cls, text[start:i]))
            cls = nxt
            start = i
    runs.append((cls, text[start:]))

    pieces: list[str] = []
    carry = ""
    for i, (run_cls, run) in enumerate(runs):
        chunk = carry + run
        carry = ""
        if run_cls == "space" and chunk.endswith(" ") and i + 1 < len(runs):
            carry = " "
            chunk = chunk[:-1]
        if chunk:
            pieces.append(chunk)
    # carry is always consumed: it is only set when a following run exists
    return pieces


@dataclass(frozen=True)
class DecodedToken:
    """A vocabulary entry decoded back to bytes and (when valid UTF-8) text.

    ``raw`` keeps the word-boundary marker byte so that concatenating raw
    bytes over an encoded stream reproduces the input; ``surface`` has the
    marker stripped.
    """

    id: int
    raw: bytes
    surface: str | None
    word_initial: bool


@dataclass(frozen=True)
class UnknownToken:
    """Single character a greedy model could not cover; kept explicit."""

    char: str

    @property
    def surface(self) -> str:
        return self.char


class TokenizerModel:
    """Validated, immutable tokenizer definition."""

    def __init__(self, kind, vocab, merges=(), marker="none"):
        if kind not in KINDS:
            raise TokenizerError(f"unknown tokenizer kind {kind!r}")
        if marker not in MARKERS:
            raise TokenizerError(f"unknown marker convention {marker!r}")
        if kind == "byte-bpe" and marker == "underscore-prefix":
            raise TokenizerError("byte-bpe models cannot use the underscore-prefix marker")
        if kind == "greedy" and marker == "byte-level-space":
            raise TokenizerError("greedy models cannot use the byte-level-space marker")
        if kind == "greedy" and merges:
            raise TokenizerError("merges are only valid for byte-bpe models")

        self.kind = kind
        self.marker = marker
        self.vocab: dict[str, int] = {}
        seen_ids: dict[int, str] = {}
        for token, token_id in vocab.items():
            if not isinstance(token, str) or not token:
                raise TokenizerError(f"invalid vocabulary token {token!r}")
            if not isinstance(token_id, int) or isinstance(token_id, bool) or token_id < 0:
                raise TokenizerError(f"token {token!r} has invalid id {token_id!r}")
            if token_id in seen_ids:
                raise TokenizerError(
                    f"duplicate id {token_id} ({seen_ids[token_id]!r} and {token!r})"
                )
            seen_ids[token_id] = token
            self.vocab[token] = token_id

        self.merges: list[tuple[str, str]] = []
        for index, pair in enumerate(merges):
            left, right = pair
            for side in (left, right):
                if side not in self.vocab:
                    raise TokenizerError(f"merge {index} references absent symbol {side!r}")
            if left + right not in self.vocab:
                raise TokenizerError(
                    f"merge {index}: concatenation {left + right!r} is not in the vocabulary"
                )
            self.merges.append((left, right))

        self.id_to_token = {i: t for t, i in self.vocab.items()}
        self.merge_ranks = {pair: rank for rank, pair in enumerate(self.merges)}
        self._max_token_len = max((len(t) for t in self.vocab), default=0)

    @property
    def vocab_size(self) -> int:
        return len(self.vocab)


def load_tokenizer(path) -> TokenizerModel:
    """Load and validate a tokenizer JSON file."""
    with open(path, encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise TokenizerError(f"{path}: malformed JSON ({exc.msg})") from exc
    if not isinstance(data, dict):
        raise TokenizerError(f"{path}: top-level value must be an object")
    for required in ("kind", "vocab"):
        if required not in data:
            raise TokenizerError(f"{path}: missing required key {required!r}")
    if not isinstance(data["vocab"], dict):
        raise TokenizerError(f"{path}: vocab must be an object")

    merges = []
    for index, entry in enumerate(data.get("merges", [])):
        parts = entry.split(" ") if isinstance(entry, str) else None
        if not parts or len(parts) != 2 or not all(parts):
            raise TokenizerError(f"{path}: merge {index} must be two symbols joined by a space")
        merges.append((parts[0], parts[1]))

    try:
        return TokenizerModel(
            kind=data["kind"],
            vocab=data["vocab"],
            merges=merges,
            marker=data.get("marker", "none"),
        )
    except TokenizerError as exc:
        raise TokenizerError(f"{path}: {exc}") from exc


def bpe_encode(model: TokenizerModel, piece: str) -> list[int]:
    """Encode one piece with byte-level BPE.

    The piece's UTF-8 bytes are mapped through the byte table into single
    code point symbols; then, repeatedly, the adjacent pair with the lowest
    merge index is replaced by its concatenation (leftmost occurrence first
    on ties) until no adjacent pair is in the merge list. Every final symbol
    must exist in the vocabulary.
    """
    if model.kind != "byte-bpe":
        raise TokenizerError("bpe_encode requires a byte-bpe model")
    if not piece:
        raise TokenizerError("cannot encode an empty piece")
    symbols = [chr(_BYTE_TO_UNICODE[b]) for b in piece.encode("utf-8")]
    ranks = model.merge_ranks
    while len(symbols) > 1:
        best_rank = None
        best_pos = None
        for i in range(len(symbols) - 1):
            rank = ranks.get((symbols[i], symbols[i + 1]))
            if rank is not None and (best_rank is None or rank < best_rank):
                best_rank = rank
                best_pos = i
        if best_pos is None:
            break
        symbols[best_pos : best_pos + 2] = [symbols[best_pos] + symbols[best_pos + 1]]
    ids = []
    for symbol in symbols:
        token_id = model.vocab.get(symbol)
        if token_id is None:
            raise TokenizerError(f"symbol {symbol!r} is not in the vocabulary")
        ids.append(token_id)
    return ids


def greedy_encode(model: TokenizerModel, piece: str) -> list[int | UnknownToken]:
    """Encode one piece by greedy longest-prefix matching.

    Scanning left to right, the longest vocabulary entry that is a prefix of
    the remainder is emitted; where none matches, the next scalar becomes an
    :class:`UnknownToken` record.
    """
    if model.kind != "greedy":
        raise TokenizerError("greedy_encode requires a greedy model")
    out: list[int | UnknownToken] = []
    pos = 0
    n = len(piece)
    while pos < n:
        matched = None
        for length in range(min(model._max_token_len, n - pos), 0, -1):
            candidate = piece[pos : pos + length]
            if candidate in model.vocab:
                matched = (model.vocab[candidate], length)
                break
        if matched is None:
            out.append(UnknownToken(piece[pos]))
            pos += 1
        else:
            out.append(matched[0])
            pos += matched[1]
    return out


def encode(model: TokenizerModel, text: str) -> list[int | UnknownToken]:
    """Encode text: pretokenize, then encode each piece in order.

    For greedy models the single attached leading space of a piece is the
    word-boundary marker: it is rewritten to U+2581 under the
    underscore-prefix convention and dropped under ``none``. Byte-bpe pieces
    keep their bytes untouched (the space flows through the byte table).
    """
    stream: list[int | UnknownToken] = []
    for piece in pretokenize(text):
        if model.kind == "byte-bpe":
            stream.extend(bpe_encode(model, piece))
        else:
            if piece.startswith(" "):
                rest = piece[1:]
                piece = WORD_MARKER + rest if model.marker == "underscore-prefix" else rest
            if piece:
                stream.extend(greedy_encode(model, piece))
    return stream


def decode_token(model: TokenizerModel, token_id: int) -> DecodedToken:
    """Decode one vocabulary id to raw bytes, surface text, and word flag."""
    token = model.id_to_token.get(token_id)
    if token is None:
        raise TokenizerError(f"token id {token_id} out of range")
    if model.kind == "byte-bpe":
        try:
            raw = bytes(_UNICODE_TO_BYTE[ord(ch)] for ch in token)
        except KeyError:
            raise TokenizerError(
                f"token {token!r} contains characters outside the byte table"
            ) from None
        word_initial = model.marker == "byte-level-space" and raw.startswith(b" ")
        visible = raw[1:] if word_initial else raw
        try:
            surface = visible.decode("utf-8")
        except UnicodeDecodeError:
            surface = None
        return DecodedToken(id=token_id, raw=raw, surface=surface, word_initial=word_initial)

    text = token
    word_initial = False
    if model.marker == "underscore-prefix" and text.startswith(WORD_MARKER):
        word_initial = True
        text = text[len(WORD_MARKER) :]
    return DecodedToken(
        id=token_id, raw=text.encode("utf-8"), surface=text, word_initial=word_initial
    )


def decode_bytes(model: TokenizerModel, stream) -> bytes:
    """Concatenate raw bytes over a token stream (unknowns contribute their char)."""
    parts = []
    for item in stream:
        if isinstance(item, UnknownToken):
            parts.append(item.char.encode("utf-8"))
        else:
            parts.append(decode_token(model, item).raw)
    return b"".join(parts)
