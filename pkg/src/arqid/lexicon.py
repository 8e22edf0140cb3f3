"""Sentiment lexicon loading and term matching.

A lexicon directory holds six flat UTF-8 files, one entry per line, with
``#`` comment lines and blank lines ignored:

    positive_terms.txt, negative_terms.txt        single words
    positive_compounds.txt, negative_compounds.txt space-separated phrases
    positive_emojis.txt, negative_emojis.txt      emoji chars or ASCII emoticons

Entries are normalized with :func:`arqid.text.normalize_text` on load, so
files may be written in natural orthography. A small built-in lexicon ships
with the package (see :func:`builtin_lexicon_path`).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from pathlib import Path

from .errors import BadParams, PolarityConflict
from .text import TokenKind, TokenStream, normalize_text

__all__ = [
    "Polarity",
    "TermMatch",
    "SentimentLexicon",
    "load_lexicon",
    "match_terms",
    "builtin_lexicon_path",
]

FILE_NAMES = {
    "pos_terms": "positive_terms.txt",
    "neg_terms": "negative_terms.txt",
    "pos_compounds": "positive_compounds.txt",
    "neg_compounds": "negative_compounds.txt",
    "pos_emojis": "positive_emojis.txt",
    "neg_emojis": "negative_emojis.txt",
}


class Polarity(Enum):
    POS = "pos"
    NEG = "neg"


@dataclass(frozen=True, slots=True)
class TermMatch:
    polarity: Polarity
    start: int  # token index of first matched token
    end: int    # token index of last matched token, inclusive
    is_compound: bool


@dataclass(frozen=True)
class SentimentLexicon:
    """Immutable set of polarized terms, compounds, emojis and emoticons."""

    pos_terms: frozenset[str] = frozenset()
    neg_terms: frozenset[str] = frozenset()
    pos_compounds: tuple[tuple[str, ...], ...] = ()
    neg_compounds: tuple[tuple[str, ...], ...] = ()
    pos_emojis: frozenset[str] = frozenset()
    neg_emojis: frozenset[str] = frozenset()

    def __post_init__(self):
        _check_disjoint(self.pos_terms, self.neg_terms, "terms")
        _check_disjoint(set(self.pos_compounds), set(self.neg_compounds), "compounds")
        _check_disjoint(self.pos_emojis, self.neg_emojis, "emojis")
        for seq in (*self.pos_compounds, *self.neg_compounds):
            if len(seq) < 2:
                raise BadParams(f"compound entry must have at least two words: {seq!r}")
        for entry in (*self.pos_terms, *self.neg_terms, *self.pos_emojis, *self.neg_emojis):
            if not entry:
                raise BadParams("lexicon entries must be non-empty")

    def is_empty(self) -> bool:
        return not (self.pos_terms or self.neg_terms or self.pos_compounds
                    or self.neg_compounds or self.pos_emojis or self.neg_emojis)

    def category_sizes(self) -> dict[str, int]:
        return {name: len(getattr(self, name)) for name in FILE_NAMES}


def _check_disjoint(pos, neg, what: str) -> None:
    overlap = set(pos) & set(neg)
    if overlap:
        shown = ", ".join(str(e) for e in sorted(overlap))
        raise PolarityConflict(f"entries listed as both positive and negative {what}: {shown}")


def _read_entries(path: Path) -> list[str]:
    if not path.exists():
        return []
    entries = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            entries.append(normalize_text(line))
    return entries


def load_lexicon(root: str | Path) -> SentimentLexicon:
    """Load a lexicon directory; missing files count as empty categories.

    Raises PolarityConflict when an entry appears on both sides of one
    category, OSError on unreadable paths, UnicodeDecodeError on bad UTF-8,
    and BadParams on malformed compound lines.
    """
    root = Path(root)
    if not root.is_dir():
        raise FileNotFoundError(f"lexicon directory not found: {root}")

    def words(name: str) -> frozenset[str]:
        return frozenset(_read_entries(root / FILE_NAMES[name]))

    def compounds(name: str) -> tuple[tuple[str, ...], ...]:
        seqs = set()
        for line in _read_entries(root / FILE_NAMES[name]):
            seq = tuple(line.split())
            if len(seq) < 2:
                raise BadParams(
                    f"{FILE_NAMES[name]}: compound line needs at least two words: {line!r}")
            seqs.add(seq)
        return tuple(sorted(seqs))

    return SentimentLexicon(
        pos_terms=words("pos_terms"),
        neg_terms=words("neg_terms"),
        pos_compounds=compounds("pos_compounds"),
        neg_compounds=compounds("neg_compounds"),
        pos_emojis=words("pos_emojis"),
        neg_emojis=words("neg_emojis"),
    )


def builtin_lexicon_path() -> Path:
    """Path of the small lexicon bundled with the package."""
    return Path(str(resources.files("arqid").joinpath("data/lexicon")))


@functools.lru_cache(maxsize=16)
def _match_index(lex: SentimentLexicon):
    """Per-lexicon lookup tables: singles dict and first-word compound index."""
    singles: dict[str, Polarity] = {}
    for term in lex.pos_terms:
        singles[term] = Polarity.POS
    for term in lex.neg_terms:
        singles[term] = Polarity.NEG
    by_first: dict[str, list[tuple[tuple[str, ...], Polarity]]] = {}
    for seqs, polarity in ((lex.pos_compounds, Polarity.POS),
                           (lex.neg_compounds, Polarity.NEG)):
        for seq in seqs:
            by_first.setdefault(seq[0], []).append((seq, polarity))
    for cands in by_first.values():
        cands.sort(key=lambda sp: (-len(sp[0]), sp[0]))
    return singles, by_first


def match_terms(stream: TokenStream, lex: SentimentLexicon) -> list[TermMatch]:
    """Greedy leftmost longest-first matching with token consumption.

    Word tokens are scanned left to right. At each unconsumed position,
    compounds are tried longest first, then single terms; a match consumes
    its tokens so no token contributes to two matches. A compound only
    matches token-adjacent words: any intervening punctuation, emoji or
    other non-word token breaks the phrase.
    """
    singles, by_first = _match_index(lex)
    tokens = stream.tokens
    content = stream.content_indices
    matches: list[TermMatch] = []

    pos = 0
    while pos < len(content):
        ti = content[pos]
        surface = tokens[ti].surface
        found: TermMatch | None = None
        for seq, polarity in by_first.get(surface, ()):
            span = len(seq)
            if ti + span > len(tokens):
                continue
            if all(tokens[ti + k].kind is TokenKind.WORD
                   and tokens[ti + k].surface == seq[k] for k in range(span)):
                found = TermMatch(polarity, ti, ti + span - 1, True)
                break
        if found is None and surface in singles:
            found = TermMatch(singles[surface], ti, ti, False)
        if found is None:
            pos += 1
            continue
        matches.append(found)
        while pos < len(content) and content[pos] <= found.end:
            pos += 1
    return matches
