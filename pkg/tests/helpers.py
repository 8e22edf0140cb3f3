"""Independent oracles and random-input builders shared by the test modules.

The match-cover oracle enumerates every non-overlapping set of candidate
matches and picks the preferred one by an explicit ordering, taking a
completely different computational path from the linear greedy scanner it
checks.
"""

import math
import random

import numpy as np

from arqid.lexicon import Polarity, SentimentLexicon, TermMatch
from arqid.text import TokenKind, TokenStream, normalize_text, tokenize


def _candidates(stream: TokenStream, lex: SentimentLexicon) -> list[TermMatch]:
    tokens = stream.tokens
    cands = []
    compounds = [(seq, Polarity.POS) for seq in lex.pos_compounds] \
        + [(seq, Polarity.NEG) for seq in lex.neg_compounds]
    for t in tokens:
        if t.kind is not TokenKind.WORD:
            continue
        for seq, pol in compounds:
            span = len(seq)
            if t.index + span > len(tokens):
                continue
            if all(tokens[t.index + k].kind is TokenKind.WORD
                   and tokens[t.index + k].surface == seq[k] for k in range(span)):
                cands.append(TermMatch(pol, t.index, t.index + span - 1, True))
        if t.surface in lex.pos_terms:
            cands.append(TermMatch(Polarity.POS, t.index, t.index, False))
        elif t.surface in lex.neg_terms:
            cands.append(TermMatch(Polarity.NEG, t.index, t.index, False))
    return cands


def brute_force_matches(stream: TokenStream, lex: SentimentLexicon) -> list[TermMatch]:
    """Enumerate all non-overlapping match covers; return the one preferring
    the earliest start, then the longest span, then more matches."""
    cands = _candidates(stream, lex)
    covers: list[tuple[TermMatch, ...]] = []

    def recurse(chosen: list[TermMatch], min_start: int) -> None:
        nexts = [c for c in cands if c.start >= min_start]
        if not nexts:
            covers.append(tuple(chosen))
            return
        first = min(c.start for c in nexts)
        recurse(chosen, first + 1)  # cover that skips this position
        for cand in nexts:
            if cand.start == first:
                chosen.append(cand)
                recurse(chosen, cand.end + 1)
                chosen.pop()

    recurse([], 0)
    sentinel = (math.inf, math.inf)

    def preference(cover):
        return [(m.start, -(m.end - m.start)) for m in cover] + [sentinel]

    return list(min(covers, key=preference))


_VOCAB = ("a", "b", "c")


def random_match_lexicon(rng: random.Random) -> SentimentLexicon:
    """Tiny lexicon over a 3-word vocabulary with disjoint polarities."""
    singles = list(_VOCAB)
    rng.shuffle(singles)
    n_pos = rng.randint(0, len(singles))
    pos_terms = frozenset(singles[:n_pos])
    neg_terms = frozenset(s for s in singles[n_pos:] if rng.random() < 0.7)

    seqs = set()
    for _ in range(rng.randint(0, 4)):
        length = rng.randint(2, 3)
        seqs.add(tuple(rng.choice(_VOCAB) for _ in range(length)))
    seqs = sorted(seqs)
    rng.shuffle(seqs)
    n_posc = rng.randint(0, len(seqs))
    return SentimentLexicon(
        pos_terms=pos_terms,
        neg_terms=neg_terms,
        pos_compounds=tuple(sorted(seqs[:n_posc])),
        neg_compounds=tuple(sorted(seqs[n_posc:])),
    )


def random_word_stream(rng: random.Random, lex: SentimentLexicon,
                       max_tokens: int = 8) -> TokenStream:
    parts = []
    for _ in range(rng.randint(0, max_tokens)):
        parts.append(rng.choice(_VOCAB) if rng.random() < 0.85 else ".")
    return tokenize(normalize_text(" ".join(parts)), lex)


def finite_difference_gradient(func, w: np.ndarray, h: float = 1e-6) -> np.ndarray:
    grad = np.zeros_like(w)
    for i in range(w.size):
        step = np.zeros_like(w)
        step[i] = h
        grad[i] = (func(w + step) - func(w - step)) / (2.0 * h)
    return grad
