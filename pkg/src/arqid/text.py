"""Arabic social-media text normalization and tokenization.

The pipeline is ``tokenize(normalize_text(raw), lexicon)``; every downstream
consumer (lexicon matching, feature extraction) works on the resulting
:class:`TokenStream`. Normalization is deliberately minimal: diacritics,
tatweel, alef variants and alef maqsura. Ta-marbuta is left alone so lexicon
authors keep control over surface forms, and no stemming or clitic stripping
is performed.
"""

from __future__ import annotations

import functools
import re
import unicodedata
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

__all__ = [
    "TokenKind",
    "Token",
    "TokenStream",
    "normalize_text",
    "tokenize",
]

# Arabic short vowels, tanween, shadda and sukun.
_DIACRITICS = re.compile("[ً-ْ]")
_TATWEEL = "ـ"

# Alef with madda/hamza variants fold to bare alef; alef maqsura to yaa.
_CHAR_FOLD = str.maketrans({"آ": "ا", "أ": "ا",
                            "إ": "ا", "ى": "ي"})


def normalize_text(raw: str) -> str:
    """Return the canonical matching form of ``raw``.

    Applies NFC composition, strips U+064B..U+0652 diacritics and tatweel,
    folds alef variants to bare alef and alef maqsura to yaa. Everything
    else (Latin text, digits, emojis, punctuation) passes through. The
    function is total and idempotent.
    """
    s = unicodedata.normalize("NFC", raw)
    s = _DIACRITICS.sub("", s)
    s = s.replace(_TATWEEL, "")
    return s.translate(_CHAR_FOLD)


class TokenKind(Enum):
    WORD = "word"
    PUNCT = "punct"
    QUESTION_MARK = "question_mark"
    EMOJI = "emoji"
    EMOTICON = "emoticon"
    URL = "url"
    MENTION = "mention"
    HASHTAG = "hashtag"


@dataclass(frozen=True, slots=True)
class Token:
    """One tokenizer output unit.

    ``start`` is the character offset in the normalized input; adjacency of
    offsets lets feature extraction detect punctuation runs that the
    tokenizer split into single-character tokens.
    """

    surface: str
    original: str
    kind: TokenKind
    index: int
    start: int


@dataclass(frozen=True)
class TokenStream:
    tokens: tuple[Token, ...]
    content_indices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)


# Pictograph codepoint ranges treated as emoji. Multi-codepoint sequences
# (ZWJ, variation selectors, skin tones) are not joined; each codepoint in
# these ranges yields one token.
_EMOJI_RANGES = (
    (0x1F1E6, 0x1F1FF),  # regional indicators
    (0x1F300, 0x1F5FF),  # symbols & pictographs
    (0x1F600, 0x1F64F),  # emoticons block
    (0x1F680, 0x1F6FF),  # transport & map
    (0x1F900, 0x1F9FF),  # supplemental pictographs
    (0x1FA70, 0x1FAFF),  # extended-A
    (0x2600, 0x26FF),    # miscellaneous symbols
    (0x2700, 0x27BF),    # dingbats
    (0x2B00, 0x2BFF),    # arrows, stars
)

_EMOJI_CLASS = "[" + "".join(f"{chr(lo)}-{chr(hi)}" for lo, hi in _EMOJI_RANGES) + "]"

_URL_PAT = r"[A-Za-z][A-Za-z0-9+.\-]*://\S+"
_MENTION_PAT = r"@\w+"
_HASHTAG_PAT = r"#\w+"
_QMARK_PAT = "[?؟]"
_WORD_PAT = r"[^\W\d_]+"  # unicode letter runs
_NUMBER_PAT = r"\d+"      # digit runs stay one (punct) token


def is_emoji_char(ch: str) -> bool:
    cp = ord(ch)
    return any(lo <= cp <= hi for lo, hi in _EMOJI_RANGES)


def _is_pure_emoji(entry: str) -> bool:
    return all(is_emoji_char(c) for c in entry)


@functools.lru_cache(maxsize=64)
def _token_pattern(emoticons: tuple[str, ...]) -> re.Pattern:
    parts = [
        f"(?P<url>{_URL_PAT})",
        f"(?P<mention>{_MENTION_PAT})",
        f"(?P<hashtag>{_HASHTAG_PAT})",
    ]
    if emoticons:
        alts = "|".join(re.escape(e) for e in sorted(emoticons, key=len, reverse=True))
        parts.append(f"(?P<emoticon>{alts})")
    parts.extend([
        f"(?P<emoji>{_EMOJI_CLASS})",
        f"(?P<qmark>{_QMARK_PAT})",
        f"(?P<word>{_WORD_PAT})",
        f"(?P<number>{_NUMBER_PAT})",
        r"(?P<punct>\S)",
    ])
    return re.compile("|".join(parts))


_GROUP_KIND = {
    "url": TokenKind.URL,
    "mention": TokenKind.MENTION,
    "hashtag": TokenKind.HASHTAG,
    "emoticon": TokenKind.EMOTICON,
    "emoji": TokenKind.EMOJI,
    "qmark": TokenKind.QUESTION_MARK,
    "word": TokenKind.WORD,
    "number": TokenKind.PUNCT,
    "punct": TokenKind.PUNCT,
}


def _lexicon_emoticons(lexicon) -> tuple[str, ...]:
    """ASCII-art entries of the lexicon's emoji files (non-pictograph ones).

    Bare question marks are excluded: they must stay QUESTION_MARK tokens
    even if a lexicon lists them.
    """
    if lexicon is None:
        return ()
    entries: Iterable[str] = set(lexicon.pos_emojis) | set(lexicon.neg_emojis)
    return tuple(sorted(e for e in entries
                        if e and e not in ("?", "؟") and not _is_pure_emoji(e)))


def tokenize(raw: str, lexicon=None) -> TokenStream:
    """Segment normalized text into a tagged token stream.

    ``raw`` must already be in normalized form (``normalize_text`` output);
    a ValueError is raised otherwise. The lexicon only contributes its
    emoticon inventory: any maximal substring equal to a lexicon emoticon
    becomes a single EMOTICON token. URLs, @mentions and #hashtags each form
    one token, pictograph codepoints become EMOJI tokens, "?" and Arabic
    question marks become QUESTION_MARK tokens, letter runs become WORD
    tokens, and everything else is PUNCT: digit runs as one token, any other
    non-space character on its own.

    Concatenating the tokens' ``original`` fields reproduces the input with
    whitespace removed.
    """
    if normalize_text(raw) != raw:
        raise ValueError("tokenize expects normalized text; apply normalize_text first")

    pattern = _token_pattern(_lexicon_emoticons(lexicon))
    tokens: list[Token] = []
    content: list[int] = []
    for match in pattern.finditer(raw):
        kind = _GROUP_KIND[match.lastgroup]
        index = len(tokens)
        tokens.append(Token(surface=match.group(), original=match.group(),
                            kind=kind, index=index, start=match.start()))
        if kind is TokenKind.WORD:
            content.append(index)
    return TokenStream(tokens=tuple(tokens), content_indices=tuple(content))
