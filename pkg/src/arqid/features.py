"""Feature extraction for question-seeking classification.

Two fixed groups make up the full 22-feature vector. The ``baseline`` group
covers lexical, structural, question-specific and tweet-specific signals of
a post; the ``emotional`` group is derived from the sentiment lexicon:
polarized term and compound counts, boundary flags (does the text start or
end with a polarized term), term percentages and polarized emoji/emoticon
counts. Classifiers are trained per feature mode, so in baseline-only mode
the emitted vector has 12 dimensions, not 22 with zeros.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Mapping

import numpy as np

from .lexicon import Polarity, SentimentLexicon, match_terms
from .text import TokenKind, TokenStream, normalize_text, tokenize

__all__ = [
    "BASELINE_FEATURES",
    "EMOTIONAL_FEATURES",
    "FeatureSchema",
    "FeatureMode",
    "SCHEMA_BASELINE",
    "SCHEMA_ALL",
    "INTERROGATIVES",
    "extract_baseline",
    "extract_emotional",
    "extract_features",
    "vector_from_values",
]

SCHEMA_VERSION = "1"

BASELINE_FEATURES = (
    "numTokens",
    "numChars",
    "hasQuestionMark",
    "numQuestionMarks",
    "hasInterrogative",
    "interrogativePosition",
    "numURLs",
    "numMentions",
    "numHashtags",
    "numEmojiTotal",
    "numElongations",
    "numPunctBursts",
)

EMOTIONAL_FEATURES = (
    "numOfPos",
    "numOfNeg",
    "startWithPos",
    "startWithNeg",
    "endWithPos",
    "endWithNeg",
    "posPercentage",
    "negPercentage",
    "numOfPosEmo",
    "numOfNegEmo",
)

# Question words checked against normalized word surfaces.
INTERROGATIVES = frozenset(normalize_text(w) for w in (
    "ما", "ماذا", "لماذا", "كيف", "متى", "أين", "من", "هل", "كم", "أي",
))

_ELONGATION = re.compile(r"(.)\1\1+")
_BURST_CHARS = frozenset({"!", "?", "؟"})


@dataclass(frozen=True)
class FeatureSchema:
    """Ordered feature names plus a fingerprint binding models to them."""

    names: tuple[str, ...]
    version: str
    groups: tuple[str, ...]

    @cached_property
    def fingerprint(self) -> str:
        digest = hashlib.sha256()
        digest.update(self.version.encode("utf-8"))
        for name in self.names:
            digest.update(b"\n" + name.encode("utf-8"))
        return digest.hexdigest()[:16]

    def __len__(self) -> int:
        return len(self.names)


SCHEMA_BASELINE = FeatureSchema(
    names=BASELINE_FEATURES,
    version=SCHEMA_VERSION,
    groups=("baseline",) * len(BASELINE_FEATURES),
)

SCHEMA_ALL = FeatureSchema(
    names=BASELINE_FEATURES + EMOTIONAL_FEATURES,
    version=SCHEMA_VERSION,
    groups=("baseline",) * len(BASELINE_FEATURES) + ("emotional",) * len(EMOTIONAL_FEATURES),
)


class FeatureMode(Enum):
    BASELINE = "baseline"
    ALL = "all"

    @property
    def schema(self) -> FeatureSchema:
        return SCHEMA_BASELINE if self is FeatureMode.BASELINE else SCHEMA_ALL


def _elongations(stream: TokenStream) -> int:
    """Runs of the same letter repeated three or more times inside words."""
    count = 0
    for token in stream.tokens:
        if token.kind is TokenKind.WORD:
            count += sum(1 for _ in _ELONGATION.finditer(token.surface))
    return count


def _punct_bursts(stream: TokenStream) -> int:
    """Offset-contiguous runs of two or more ! / ? / Arabic question marks."""
    bursts = 0
    run = 0
    prev_end = -1
    for token in stream.tokens:
        if token.surface in _BURST_CHARS and token.start == prev_end and run:
            run += 1
        else:
            if run >= 2:
                bursts += 1
            run = 1 if token.surface in _BURST_CHARS else 0
        prev_end = token.start + len(token.original)
    if run >= 2:
        bursts += 1
    return bursts


def extract_baseline(stream: TokenStream) -> dict[str, float]:
    """Lexicon-independent half of the feature vector."""
    tokens = stream.tokens
    n = len(tokens)
    kinds = [t.kind for t in tokens]
    n_qmarks = kinds.count(TokenKind.QUESTION_MARK)

    interrogative_index = next(
        (t.index for t in tokens
         if t.kind is TokenKind.WORD and t.surface in INTERROGATIVES),
        None)

    return {
        "numTokens": float(n),
        "numChars": float(sum(len(t.original) for t in tokens)),
        "hasQuestionMark": 1.0 if n_qmarks else 0.0,
        "numQuestionMarks": float(n_qmarks),
        "hasInterrogative": 0.0 if interrogative_index is None else 1.0,
        "interrogativePosition": (0.0 if interrogative_index is None
                                  else interrogative_index / n),
        "numURLs": float(kinds.count(TokenKind.URL)),
        "numMentions": float(kinds.count(TokenKind.MENTION)),
        "numHashtags": float(kinds.count(TokenKind.HASHTAG)),
        "numEmojiTotal": float(kinds.count(TokenKind.EMOJI)),
        "numElongations": float(_elongations(stream)),
        "numPunctBursts": float(_punct_bursts(stream)),
    }


def extract_emotional(stream: TokenStream, lex: SentimentLexicon) -> dict[str, float]:
    """Sentiment-lexicon half of the feature vector.

    Counts positive/negative matches (a compound counts once), flags whether
    a match begins at the first word token or ends at the last one, reports
    match counts as a fraction of word tokens clamped to [0, 1], and counts
    polarized emoji/emoticon tokens.
    """
    matches = match_terms(stream, lex)
    n_pos = sum(1 for m in matches if m.polarity is Polarity.POS)
    n_neg = len(matches) - n_pos

    content = stream.content_indices
    first = content[0] if content else -1
    last = content[-1] if content else -1
    start_pol = next((m.polarity for m in matches if m.start == first), None)
    end_pol = next((m.polarity for m in matches if m.end == last), None)

    denom = max(1, len(content))
    n_pos_emo = n_neg_emo = 0
    for token in stream.tokens:
        if token.kind in (TokenKind.EMOJI, TokenKind.EMOTICON):
            if token.surface in lex.pos_emojis:
                n_pos_emo += 1
            elif token.surface in lex.neg_emojis:
                n_neg_emo += 1

    return {
        "numOfPos": float(n_pos),
        "numOfNeg": float(n_neg),
        "startWithPos": 1.0 if start_pol is Polarity.POS else 0.0,
        "startWithNeg": 1.0 if start_pol is Polarity.NEG else 0.0,
        "endWithPos": 1.0 if end_pol is Polarity.POS else 0.0,
        "endWithNeg": 1.0 if end_pol is Polarity.NEG else 0.0,
        "posPercentage": min(1.0, n_pos / denom),
        "negPercentage": min(1.0, n_neg / denom),
        "numOfPosEmo": float(n_pos_emo),
        "numOfNegEmo": float(n_neg_emo),
    }


def vector_from_values(values: Mapping[str, float], schema: FeatureSchema) -> np.ndarray:
    return np.array([values[name] for name in schema.names], dtype=float)


def extract_features(raw: str, lex: SentimentLexicon,
                     mode: FeatureMode = FeatureMode.ALL) -> np.ndarray:
    """Normalize, tokenize and extract the feature vector for ``mode``.

    Pure function of its inputs: identical text, lexicon and mode always
    yield an identical vector.
    """
    stream = tokenize(normalize_text(raw), lex)
    values = extract_baseline(stream)
    if mode is FeatureMode.ALL:
        values.update(extract_emotional(stream, lex))
    return vector_from_values(values, mode.schema)
