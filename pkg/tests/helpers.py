"""Shared test oracles and frozen reference values.

The oracles here are deliberately independent of the library paths they
check: the segmentation oracle enumerates splits instead of walking the
affix FSM, harmony is reimplemented from its definition, and the frozen
correlation table was recomputed by hand with the plain product-moment
formula before the build.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

TURKISH_LETTERS = "abcçdefgğhıijklmnoöprsştuüvyz"

# ---------------------------------------------------------------------------
# Benchmark fixture values (four production tokenizers; external inputs).

BENCH_MODELS = ["gemma-2", "llama-3.1", "Qwen2.5", "aya-expanse"]
BENCH_COLUMNS = {
    "params_b": [27.2, 70.6, 7.6, 32.3],
    "mmlu": [72.10, 70.42, 61.68, 70.66],
    "vocab_size": [256000, 128256, 151665, 255029],
    "total_tokens": [497015, 488535, 561866, 434526],
    "processing_time_s": [2.95, 3.12, 3.31, 2.77],
    "unique_tokens": [6383, 6823, 5752, 8562],
    "pct_tr": [48.63, 45.80, 40.33, 50.67],
    "pct_pure": [37.05, 30.91, 30.15, 32.96],
}

# Pearson r for every unordered column pair, recomputed independently
# (two-pass product-moment on the values above), rounded to 4 decimals.
FROZEN_PEARSON = {
    ("params_b", "mmlu"): 0.5906,
    ("params_b", "vocab_size"): -0.3415,
    ("params_b", "total_tokens"): -0.4636,
    ("params_b", "processing_time_s"): -0.1709,
    ("params_b", "unique_tokens"): 0.2962,
    ("params_b", "pct_tr"): 0.3267,
    ("params_b", "pct_pure"): -0.1159,
    ("mmlu", "vocab_size"): 0.5357,
    ("mmlu", "total_tokens"): -0.7965,
    ("mmlu", "processing_time_s"): -0.7875,
    ("mmlu", "unique_tokens"): 0.5495,
    ("mmlu", "pct_tr"): 0.9001,
    ("mmlu", "pct_pure"): 0.6838,
    ("vocab_size", "total_tokens"): -0.5665,
    ("vocab_size", "processing_time_s"): -0.8283,
    ("vocab_size", "unique_tokens"): 0.5065,
    ("vocab_size", "pct_tr"): 0.7670,
    ("vocab_size", "pct_pure"): 0.8161,
    ("total_tokens", "processing_time_s"): 0.9308,
    ("total_tokens", "unique_tokens"): -0.9426,
    ("total_tokens", "pct_tr"): -0.9331,
    ("total_tokens", "pct_pure"): -0.3429,
    ("processing_time_s", "unique_tokens"): -0.8604,
    ("processing_time_s", "pct_tr"): -0.9773,
    ("processing_time_s", "pct_pure"): -0.6030,
    ("unique_tokens", "pct_tr"): 0.7990,
    ("unique_tokens", "pct_pure"): 0.1122,
    ("pct_tr", "pct_pure"): 0.6577,
}

# ---------------------------------------------------------------------------
# Independent segmentation oracle (split enumeration, own harmony rules).

_FRONT = set("eiöü")
_BACK = set("aıou")
_VOWELS = _FRONT | _BACK
_SOFT = {"p": "b", "t": "d", "k": "ğ", "ç": "c"}


def _oracle_last_vowel(text):
    for ch in reversed(text):
        if ch in _VOWELS:
            return ch
    return None


def _oracle_harmony(stem, affix):
    last = _oracle_last_vowel(stem)
    if last is None:
        return False
    if affix.harmony == "neutral":
        return True
    if affix.harmony == "front":
        return last in _FRONT
    return last in _BACK


def _oracle_chain_ok(surface, root, chain):
    stem = surface
    last_slot = 0
    for affix in chain:
        if affix.slot <= last_slot:
            return False
        if affix.attaches_to != "any" and affix.attaches_to != root.category:
            return False
        if not _oracle_harmony(stem, affix):
            return False
        stem += affix.allomorph
        last_slot = affix.slot
    return True


def brute_force_segment(word, lexicon, inventory, max_affixes=4):
    """All parses of ``word`` as a set of comparable keys.

    Enumerates every way to cut the post-root remainder into 1..max_affixes
    chunks and keeps combinations satisfying slot order, attachment,
    harmony, and the final-stop voicing rule.
    """
    by_allomorph = {}
    for entry in inventory.entries:
        by_allomorph.setdefault(entry.allomorph, []).append(entry)

    results = set()
    for root in lexicon.entries:
        surfaces = [(root.form, False)]
        if root.soft_final:
            surfaces.append((root.form[:-1] + _SOFT[root.form[-1]], True))
        for surface, alternated in surfaces:
            if not word.startswith(surface):
                continue
            rest = word[len(surface):]
            next_vowel = bool(rest) and rest[0] in _VOWELS
            if alternated and not next_vowel:
                continue
            if not alternated and root.soft_final and next_vowel:
                continue
            if not rest:
                results.add(((root.form, root.category), surface, ()))
                continue
            n = len(rest)
            for count in range(1, max_affixes + 1):
                for cuts in combinations(range(1, n), count - 1):
                    bounds = (0, *cuts, n)
                    chunks = [rest[bounds[i]:bounds[i + 1]] for i in range(count)]
                    options = [by_allomorph.get(chunk) for chunk in chunks]
                    if any(opt is None for opt in options):
                        continue
                    for chain in product(*options):
                        if _oracle_chain_ok(surface, root, chain):
                            results.add(
                                (
                                    (root.form, root.category),
                                    surface,
                                    tuple((a.allomorph, a.morpheme) for a in chain),
                                )
                            )
    return results


def parse_key(segmentation):
    """Comparable key for a library Segmentation."""
    return (
        (segmentation.root.form, segmentation.root.category),
        segmentation.root_surface,
        tuple((a.allomorph, a.morpheme) for a in segmentation.affixes),
    )


# ---------------------------------------------------------------------------
# Random data generators (seeded by callers for reproducibility).


def random_letter_word(rng, max_len=12):
    length = rng.randint(1, max_len)
    return "".join(rng.choice(TURKISH_LETTERS) for _ in range(length))


def random_unicode_string(rng, max_len=48):
    """Arbitrary Unicode scalars across scripts; never surrogates."""
    length = rng.randrange(0, max_len)
    chars = []
    for _ in range(length):
        bucket = rng.random()
        if bucket < 0.35:
            cp = rng.randrange(0x20, 0x7F)
        elif bucket < 0.55:
            cp = ord(rng.choice("çğıöşüÇĞİÖŞÜâîû"))
        elif bucket < 0.70:
            cp = rng.randrange(0x0370, 0x2000)
        elif bucket < 0.80:
            cp = rng.randrange(0x2000, 0x3000)
        elif bucket < 0.90:
            cp = rng.randrange(0x4E00, 0xA000)
        elif bucket < 0.97:
            cp = rng.randrange(0x1F300, 0x1F700)
        else:
            cp = rng.randrange(0x00, 0x20)
        chars.append(chr(cp))
    return "".join(chars)


@dataclass(frozen=True)
class FakeToken:
    """Minimal stand-in for a decoded token in percentage tests."""

    surface: str | None
