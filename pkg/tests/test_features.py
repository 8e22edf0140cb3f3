import random

import numpy as np
import pytest

from arqid.features import (
    BASELINE_FEATURES,
    EMOTIONAL_FEATURES,
    SCHEMA_ALL,
    SCHEMA_BASELINE,
    FeatureMode,
    extract_baseline,
    extract_emotional,
    extract_features,
)
from arqid.lexicon import SentimentLexicon
from arqid.text import normalize_text, tokenize

from helpers import random_match_lexicon, random_word_stream


def stream_of(text, lex):
    return tokenize(normalize_text(text), lex)


class TestSchema:
    def test_sizes_and_groups(self):
        assert len(SCHEMA_BASELINE) == 12
        assert len(SCHEMA_ALL) == 22
        assert set(SCHEMA_BASELINE.groups) == {"baseline"}
        assert SCHEMA_ALL.names == BASELINE_FEATURES + EMOTIONAL_FEATURES
        assert SCHEMA_ALL.groups[:12] == ("baseline",) * 12
        assert SCHEMA_ALL.groups[12:] == ("emotional",) * 10

    def test_fingerprints_distinct_and_stable(self):
        assert SCHEMA_BASELINE.fingerprint != SCHEMA_ALL.fingerprint
        assert SCHEMA_ALL.fingerprint == SCHEMA_ALL.fingerprint
        assert len(SCHEMA_ALL.fingerprint) == 16


class TestEmotional:
    def test_empty_text_all_zero(self, lex):
        values = extract_emotional(stream_of("", lex), lex)
        assert set(values) == set(EMOTIONAL_FEATURES)
        assert all(v == 0.0 for v in values.values())

    def test_positive_term_with_emoji(self, lex):
        values = extract_emotional(stream_of("المنتج ممتاز 😊", lex), lex)
        assert values == {
            "numOfPos": 1.0, "numOfNeg": 0.0,
            "startWithPos": 0.0, "startWithNeg": 0.0,
            "endWithPos": 1.0, "endWithNeg": 0.0,
            "posPercentage": 0.5, "negPercentage": 0.0,
            "numOfPosEmo": 1.0, "numOfNegEmo": 0.0,
        }

    def test_compound_at_start(self, lex):
        values = extract_emotional(stream_of("جودة عالية فعلا", lex), lex)
        assert values["numOfPos"] == 1.0
        assert values["startWithPos"] == 1.0
        assert values["endWithPos"] == 0.0
        assert values["posPercentage"] == pytest.approx(1 / 3)
        assert values["numOfNeg"] == 0.0

    def test_negative_boundary_flags(self, lex):
        values = extract_emotional(stream_of("سيء جدا الوضع بطيء", lex), lex)
        assert values["numOfNeg"] == 2.0
        assert values["startWithNeg"] == 1.0
        assert values["endWithNeg"] == 1.0
        assert values["negPercentage"] == 0.5

    def test_start_flag_skips_leading_mention(self, lex):
        values = extract_emotional(stream_of("@dev ممتاز الشغل", lex), lex)
        assert values["startWithPos"] == 1.0

    def test_emoticon_counts(self, lex):
        values = extract_emotional(stream_of("الرد :( من البوت", lex), lex)
        assert values["numOfNegEmo"] == 1.0
        assert values["numOfPosEmo"] == 0.0

    def test_empty_lexicon_zeroes_everything(self, lex):
        empty = SentimentLexicon()
        rng = random.Random(7)
        texts = ["ممتاز 😊 جودة عالية", "هل الخدمة بطيء ؟", "شكرا :)"]
        texts += [" ".join(rng.choice("abc") for _ in range(rng.randint(0, 6)))
                  for _ in range(50)]
        for text in texts:
            values = extract_emotional(stream_of(text, empty), empty)
            assert all(v == 0.0 for v in values.values()), text

    def test_percentage_and_flag_invariants_random(self):
        rng = random.Random(2024)
        for _ in range(300):
            rlex = random_match_lexicon(rng)
            stream = random_word_stream(rng, rlex)
            values = extract_emotional(stream, rlex)
            n_content = len(stream.content_indices)
            assert values["posPercentage"] * max(1, n_content) \
                <= values["numOfPos"] + 1e-9
            assert values["negPercentage"] * max(1, n_content) \
                <= values["numOfNeg"] + 1e-9
            if values["startWithPos"]:
                assert values["numOfPos"] >= 1
            if values["endWithNeg"]:
                assert values["numOfNeg"] >= 1
            assert values["startWithPos"] + values["startWithNeg"] <= 1
            assert values["endWithPos"] + values["endWithNeg"] <= 1
            assert 0.0 <= values["posPercentage"] <= 1.0
            assert 0.0 <= values["negPercentage"] <= 1.0


class TestBaseline:
    def test_empty_text_all_zero(self, lex):
        values = extract_baseline(stream_of("", lex))
        assert set(values) == set(BASELINE_FEATURES)
        assert all(v == 0.0 for v in values.values())

    def test_question_fixture(self, lex):
        values = extract_baseline(stream_of("هل الخدمة بطيء ؟", lex))
        assert values["numTokens"] == 4.0
        assert values["hasQuestionMark"] == 1.0
        assert values["numQuestionMarks"] == 1.0
        assert values["hasInterrogative"] == 1.0
        assert values["interrogativePosition"] == 0.0

    def test_punct_burst_not_elongation(self, lex):
        values = extract_baseline(stream_of("رائع!!!", lex))
        assert values["numPunctBursts"] == 1.0
        assert values["numElongations"] == 0.0

    def test_letter_elongation(self, lex):
        values = extract_baseline(stream_of("رااائع!!!", lex))
        assert values["numElongations"] == 1.0
        assert values["numPunctBursts"] == 1.0

    def test_mixed_burst_chars(self, lex):
        values = extract_baseline(stream_of("ليش؟!", lex))
        assert values["numPunctBursts"] == 1.0
        assert values["numQuestionMarks"] == 1.0

    def test_separated_marks_not_a_burst(self, lex):
        values = extract_baseline(stream_of("هل ؟ نعم ؟", lex))
        assert values["numPunctBursts"] == 0.0
        assert values["numQuestionMarks"] == 2.0

    def test_interrogative_position_fraction(self, lex):
        values = extract_baseline(stream_of("قولوا لي كيف الحال", lex))
        assert values["hasInterrogative"] == 1.0
        assert values["interrogativePosition"] == pytest.approx(2 / 4)

    def test_counts_urls_mentions_hashtags_emoji(self, lex):
        values = extract_baseline(
            stream_of("@dev شوف https://x.io #عرض 😍 😡", lex))
        assert values["numMentions"] == 1.0
        assert values["numURLs"] == 1.0
        assert values["numHashtags"] == 1.0
        assert values["numEmojiTotal"] == 2.0


class TestExtractFeatures:
    def test_baseline_mode_is_12_dim(self, lex):
        vec = extract_features("هل تعمل؟", lex, FeatureMode.BASELINE)
        assert vec.shape == (12,)

    def test_all_mode_composes_emotional(self, lex):
        raw = "المنتج ممتاز 😊"
        vec = extract_features(raw, lex, FeatureMode.ALL)
        assert vec.shape == (22,)
        emotional = extract_emotional(stream_of(raw, lex), lex)
        np.testing.assert_array_equal(
            vec[12:], [emotional[name] for name in EMOTIONAL_FEATURES])

    def test_deterministic(self, lex):
        raw = "هل في جودة عالية ؟ 😊 @dev"
        a = extract_features(raw, lex, FeatureMode.ALL)
        b = extract_features(raw, lex, FeatureMode.ALL)
        np.testing.assert_array_equal(a, b)

    def test_accepts_unnormalized_input(self, lex):
        vec = extract_features("هَلْ قـــال أحد؟", lex, FeatureMode.ALL)
        assert vec[BASELINE_FEATURES.index("hasInterrogative")] == 1.0

    def test_values_finite_nonnegative(self, lex):
        rng = random.Random(5)
        for _ in range(100):
            text = " ".join(rng.choice(["ممتاز", "سيء", "اليوم", "؟", "😊", "!!"])
                            for _ in range(rng.randint(0, 10)))
            vec = extract_features(text, lex, FeatureMode.ALL)
            assert np.isfinite(vec).all()
            assert (vec >= 0).all()

    def test_polarized_emoji_counts_bounded_by_token_counts(self, lex):
        from arqid.text import TokenKind
        rng = random.Random(8)
        pieces = ["😊", "😡", "😶", ":)", ":(", "ممتاز", "اليوم", "؟"]
        for _ in range(100):
            text = " ".join(rng.choice(pieces) for _ in range(rng.randint(0, 12)))
            stream = stream_of(text, lex)
            values = extract_emotional(stream, lex)
            n_emoji = sum(1 for t in stream if t.kind is TokenKind.EMOJI)
            n_emoticon = sum(1 for t in stream if t.kind is TokenKind.EMOTICON)
            assert values["numOfPosEmo"] + values["numOfNegEmo"] \
                <= n_emoji + n_emoticon
            assert extract_baseline(stream)["numEmojiTotal"] == n_emoji
