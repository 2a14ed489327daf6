"""Turkish morphological validation.

Decides whether a token is a valid standalone Turkish word (the TR %
predicate) and whether it is a single complete morph (the Pure %
predicate), driven entirely by offline resources: a root lexicon, an affix
inventory with slot ordering and vowel harmony classes, and an optional
whole-word list.

Resource formats (UTF-8, tab separated, ``#`` comment lines allowed):

* root lexicon:   ``form<TAB>category<TAB>soft_final(0|1)``
* affix inventory: ``allomorph<TAB>morpheme<TAB>slot<TAB>harmony<TAB>attaches_to``
* whole-word list: one word per line

The analyzer covers a nominal inflection chain (plural < possessive < case)
plus a small verb chain; it is deliberately approximate. Anything matching
its interface (``is_valid_word`` / ``is_pure_token``) can replace
:class:`TurkishValidator` in the metrics layer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MorphologyError

FRONT_VOWELS = frozenset("eiöü")
BACK_VOWELS = frozenset("aıou")
VOWELS = FRONT_VOWELS | BACK_VOWELS

# Final stop voicing before a vowel-initial affix (kitap -> kitabı).
SOFT_FINAL_MAP = {"p": "b", "t": "d", "k": "ğ", "ç": "c"}

CATEGORIES = ("noun", "verb", "other")
HARMONY_CLASSES = ("front", "back", "neutral")
ATTACHES_TO = ("noun", "verb", "any")
PURITY_MODES = ("single", "extended")

_LOWER_MAP = {ord("I"): "ı", ord("İ"): "i"}


def turkish_lower(s: str) -> str:
    """Lowercase with the Turkish dotted/dotless i rule: I -> ı, İ -> i."""
    return s.translate(_LOWER_MAP).lower()


def normalize_token(token) -> str | None:
    """Reduce a decoded token to a lowercase letters-only word, or None.

    None marks tokens that can never satisfy a predicate: invalid UTF-8,
    empty after trimming, or containing any non-letter character.
    """
    surface = token.surface
    if surface is None:
        return None
    word = turkish_lower(surface).strip()
    if not word or not word.isalpha():
        return None
    return word


@dataclass(frozen=True)
class RootEntry:
    form: str
    category: str
    soft_final: bool


@dataclass(frozen=True)
class AffixEntry:
    allomorph: str
    morpheme: str
    slot: int
    harmony: str
    attaches_to: str


@dataclass(frozen=True)
class Segmentation:
    """One parse: a root surface plus an ordered affix chain."""

    root: RootEntry
    root_surface: str
    affixes: tuple[AffixEntry, ...]

    @property
    def word(self) -> str:
        return self.root_surface + "".join(a.allomorph for a in self.affixes)

    def __str__(self) -> str:
        parts = [self.root_surface]
        parts.extend(f"{a.allomorph}({a.morpheme})" for a in self.affixes)
        return "+".join(parts)


class RootLexicon:
    def __init__(self, entries):
        self.entries: tuple[RootEntry, ...] = tuple(entries)
        self.forms = frozenset(e.form for e in self.entries)

    def __len__(self) -> int:
        return len(self.entries)


class AffixInventory:
    def __init__(self, entries):
        # deterministic iteration order for segmentation results
        self.entries: tuple[AffixEntry, ...] = tuple(
            sorted(entries, key=lambda e: (e.slot, e.allomorph, e.morpheme))
        )
        self.allomorphs = frozenset(e.allomorph for e in self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def _data_rows(path):
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            yield lineno, stripped


def load_lexicon(path) -> RootLexicon:
    """Load the root lexicon TSV."""
    entries = []
    seen = set()
    for lineno, row in _data_rows(path):
        fields = row.split("\t")
        if len(fields) != 3:
            raise MorphologyError(f"{path}: line {lineno}: expected 3 tab-separated fields")
        form, category, soft_flag = fields
        if not form or form != turkish_lower(form) or not form.isalpha():
            raise MorphologyError(
                f"{path}: line {lineno}: root form must be non-empty lowercase letters"
            )
        if category not in CATEGORIES:
            raise MorphologyError(f"{path}: line {lineno}: unknown category {category!r}")
        if soft_flag not in ("0", "1"):
            raise MorphologyError(f"{path}: line {lineno}: soft_final must be 0 or 1")
        soft_final = soft_flag == "1"
        if soft_final and form[-1] not in SOFT_FINAL_MAP:
            raise MorphologyError(
                f"{path}: line {lineno}: soft_final root must end in p, t, k, or ç"
            )
        key = (form, category)
        if key in seen:
            raise MorphologyError(f"{path}: line {lineno}: duplicate root {form!r} ({category})")
        seen.add(key)
        entries.append(RootEntry(form=form, category=category, soft_final=soft_final))
    return RootLexicon(entries)


def load_affixes(path) -> AffixInventory:
    """Load the affix inventory TSV."""
    entries = []
    seen = set()
    slot_by_morpheme: dict[str, int] = {}
    for lineno, row in _data_rows(path):
        fields = row.split("\t")
        if len(fields) != 5:
            raise MorphologyError(f"{path}: line {lineno}: expected 5 tab-separated fields")
        allomorph, morpheme, slot_text, harmony, attaches_to = fields
        if not allomorph or allomorph != turkish_lower(allomorph) or not allomorph.isalpha():
            raise MorphologyError(
                f"{path}: line {lineno}: allomorph must be non-empty lowercase letters"
            )
        try:
            slot = int(slot_text)
        except ValueError:
            raise MorphologyError(f"{path}: line {lineno}: slot must be an integer") from None
        if slot < 1:
            raise MorphologyError(f"{path}: line {lineno}: slot must be >= 1")
        if harmony not in HARMONY_CLASSES:
            raise MorphologyError(f"{path}: line {lineno}: unknown harmony class {harmony!r}")
        if attaches_to not in ATTACHES_TO:
            raise MorphologyError(f"{path}: line {lineno}: unknown attaches_to {attaches_to!r}")
        if morpheme in slot_by_morpheme and slot_by_morpheme[morpheme] != slot:
            raise MorphologyError(
                f"{path}: line {lineno}: morpheme {morpheme!r} appears with conflicting slots"
            )
        slot_by_morpheme[morpheme] = slot
        key = (allomorph, morpheme)
        if key in seen:
            raise MorphologyError(
                f"{path}: line {lineno}: duplicate allomorph {allomorph!r} for {morpheme!r}"
            )
        seen.add(key)
        entries.append(
            AffixEntry(
                allomorph=allomorph,
                morpheme=morpheme,
                slot=slot,
                harmony=harmony,
                attaches_to=attaches_to,
            )
        )
    return AffixInventory(entries)


def load_wordlist(path) -> frozenset[str]:
    """Load the optional whole-word list (normalized to Turkish lowercase)."""
    words = set()
    for lineno, row in _data_rows(path):
        word = turkish_lower(row)
        if not word.isalpha():
            raise MorphologyError(f"{path}: line {lineno}: word must contain letters only")
        words.add(word)
    return frozenset(words)


def _last_vowel(stem: str) -> str | None:
    for ch in reversed(stem):
        if ch in VOWELS:
            return ch
    return None


def harmony_ok(stem: str, affix: AffixEntry) -> bool:
    """Two-way vowel harmony: the affix class must match the stem's last vowel."""
    last = _last_vowel(stem)
    if last is None:
        raise MorphologyError(f"stem {stem!r} contains no vowel")
    if affix.harmony == "neutral":
        return True
    if affix.harmony == "front":
        return last in FRONT_VOWELS
    return last in BACK_VOWELS


def _root_surfaces(root: RootEntry):
    yield root.form, False
    if root.soft_final:
        yield root.form[:-1] + SOFT_FINAL_MAP[root.form[-1]], True


def segment_word(word: str, lexicon: RootLexicon, inventory: AffixInventory) -> list[Segmentation]:
    """Find all parses of a normalized word.

    A parse consumes a root surface (voiced-final alternant only before a
    vowel-initial affix), then affixes with strictly increasing slots, each
    passing vowel harmony against the string consumed so far and category
    compatibility against the root. The whole word must be consumed. Results
    are ordered by root length descending, then affix count ascending.
    """
    if not word:
        return []
    parses: list[Segmentation] = []
    for root in lexicon.entries:
        for surface, alternated in _root_surfaces(root):
            if not word.startswith(surface):
                continue
            rest = word[len(surface):]
            next_is_vowel = bool(rest) and rest[0] in VOWELS
            if alternated and not next_is_vowel:
                continue
            if not alternated and root.soft_final and next_is_vowel:
                continue  # voicing is obligatory before a vowel-initial affix
            _extend_parse(root, surface, surface, rest, 0, (), inventory, parses)
    parses.sort(
        key=lambda p: (
            -len(p.root_surface),
            len(p.affixes),
            tuple(a.allomorph for a in p.affixes),
            tuple(a.morpheme for a in p.affixes),
        )
    )
    return parses


def _extend_parse(root, root_surface, stem, rest, last_slot, chain, inventory, out):
    if not rest:
        out.append(Segmentation(root=root, root_surface=root_surface, affixes=chain))
        return
    if _last_vowel(stem) is None:
        return  # harmony undefined; no Turkish word lacks a vowel
    for affix in inventory.entries:
        if affix.slot <= last_slot:
            continue
        if affix.attaches_to != "any" and affix.attaches_to != root.category:
            continue
        if not rest.startswith(affix.allomorph):
            continue
        if not harmony_ok(stem, affix):
            continue
        _extend_parse(
            root,
            root_surface,
            stem + affix.allomorph,
            rest[len(affix.allomorph):],
            affix.slot,
            chain + (affix,),
            inventory,
            out,
        )


class TurkishValidator:
    """Bundles the loaded resources behind the two token predicates."""

    def __init__(self, lexicon: RootLexicon, affixes: AffixInventory,
                 wordlist: frozenset[str] = frozenset(), purity_mode: str = "single"):
        if purity_mode not in PURITY_MODES:
            raise MorphologyError(f"unknown purity mode {purity_mode!r}")
        self.lexicon = lexicon
        self.affixes = affixes
        self.wordlist = frozenset(wordlist)
        self.purity_mode = purity_mode

    def segment(self, word: str) -> list[Segmentation]:
        return segment_word(turkish_lower(word), self.lexicon, self.affixes)

    def is_valid_word(self, word: str) -> bool:
        """TR % predicate: the token is a valid standalone word."""
        if not word or not word.isalpha():
            return False
        word = turkish_lower(word)
        if word in self.wordlist:
            return True
        return bool(segment_word(word, self.lexicon, self.affixes))

    def is_pure_token(self, word: str, mode: str | None = None) -> bool:
        """Pure % predicate: the token aligns with complete morphs.

        ``single`` (default): the token is exactly one root form or one affix
        allomorph. ``extended``: additionally true for a complete root+affix
        chain or a pure affix chain (allomorphs with strictly increasing
        slots, harmony holding once the chain contains a vowel).
        """
        mode = self.purity_mode if mode is None else mode
        if mode not in PURITY_MODES:
            raise MorphologyError(f"unknown purity mode {mode!r}")
        if not word or not word.isalpha():
            return False
        word = turkish_lower(word)
        if word in self.lexicon.forms or word in self.affixes.allomorphs:
            return True
        if mode == "extended":
            if segment_word(word, self.lexicon, self.affixes):
                return True
            if self._affix_chain(word, "", 0):
                return True
        return False

    def _affix_chain(self, rest: str, stem: str, last_slot: int) -> bool:
        if not rest:
            return last_slot > 0
        for affix in self.affixes.entries:
            if affix.slot <= last_slot:
                continue
            if not rest.startswith(affix.allomorph):
                continue
            if _last_vowel(stem) is not None and not harmony_ok(stem, affix):
                continue
            if self._affix_chain(rest[len(affix.allomorph):], stem + affix.allomorph, affix.slot):
                return True
        return False
