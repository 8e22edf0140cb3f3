"""Evaluation protocol: stratified 80/20 split, P/R/F metrics, the
before/after ablation runner, and a synthetic corpus generator for
desk-scale experiments.

The ablation trains every classifier twice on the identical split, once on
the baseline-only schema and once on the full schema, isolating what the
sentiment-derived features contribute.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .classifiers import (
    CLASSIFIER_ORDER,
    ClassifierKind,
    Hyperparams,
    default_hyperparams,
    fit,
    predict_many,
)
from .dataset import LabeledExample
from .errors import ArqidError, BadParams, EmptyDataset, LengthMismatch
from .features import (
    FeatureMode,
    extract_baseline,
    extract_emotional,
    vector_from_values,
)
from .lexicon import SentimentLexicon
from .text import normalize_text, tokenize

__all__ = [
    "Split",
    "EvalReport",
    "AblationCell",
    "AblationTable",
    "split_dataset",
    "compute_metrics",
    "run_ablation",
    "generate_synthetic",
]


@dataclass(frozen=True)
class Split:
    train_ids: tuple[str, ...]
    test_ids: tuple[str, ...]
    seed: int


def _fisher_yates(items: list, rng: random.Random) -> None:
    for i in range(len(items) - 1, 0, -1):
        j = rng.randrange(i + 1)
        items[i], items[j] = items[j], items[i]


def split_dataset(examples: Sequence[LabeledExample], seed: int) -> Split:
    """Stratified 80/20 partition, deterministic in (dataset order, seed).

    Each class is shuffled with a seeded Fisher-Yates pass, the first
    floor(0.8 * n_class) ids go to train, remainders to test.
    """
    if not examples:
        raise EmptyDataset("cannot split an empty dataset")
    by_label: dict[int, list[str]] = {}
    for ex in examples:
        by_label.setdefault(ex.label, []).append(ex.id)

    rng = random.Random(seed)
    train: list[str] = []
    test: list[str] = []
    for label in sorted(by_label):
        ids = by_label[label]
        _fisher_yates(ids, rng)
        cut = (4 * len(ids)) // 5
        train.extend(ids[:cut])
        test.extend(ids[cut:])
    return Split(train_ids=tuple(train), test_ids=tuple(test), seed=seed)


@dataclass(frozen=True)
class EvalReport:
    tp: int
    fp: int
    fn: int
    tn: int
    precision_pos: float
    recall_pos: float
    f1_pos: float
    macro_p: float
    macro_r: float
    macro_f: float

    def to_dict(self) -> dict:
        return {
            "confusion": {"tp": self.tp, "fp": self.fp, "fn": self.fn, "tn": self.tn},
            "precisionPos": self.precision_pos,
            "recallPos": self.recall_pos,
            "f1Pos": self.f1_pos,
            "macroP": self.macro_p,
            "macroR": self.macro_r,
            "macroF": self.macro_f,
        }


def _safe_div(num: float, den: float) -> float:
    return num / den if den else 0.0


def _f1(p: float, r: float) -> float:
    return _safe_div(2.0 * p * r, p + r)


def compute_metrics(predictions: Sequence[int], gold: Sequence[int]) -> EvalReport:
    """Confusion counts plus positive-class and macro-averaged P/R/F.

    Zero denominators yield 0 rather than an error, so degenerate
    predictions still produce a report.
    """
    if len(predictions) != len(gold):
        raise LengthMismatch(
            f"{len(predictions)} predictions vs {len(gold)} gold labels")
    if len(gold) == 0:
        raise EmptyDataset("cannot score an empty prediction list")
    tp = fp = fn = tn = 0
    for p, g in zip(predictions, gold):
        if p not in (0, 1) or g not in (0, 1):
            raise BadParams("labels must be 0 or 1")
        if p == 1 and g == 1:
            tp += 1
        elif p == 1 and g == 0:
            fp += 1
        elif p == 0 and g == 1:
            fn += 1
        else:
            tn += 1

    p1 = _safe_div(tp, tp + fp)
    r1 = _safe_div(tp, tp + fn)
    p0 = _safe_div(tn, tn + fn)
    r0 = _safe_div(tn, tn + fp)
    return EvalReport(
        tp=tp, fp=fp, fn=fn, tn=tn,
        precision_pos=p1, recall_pos=r1, f1_pos=_f1(p1, r1),
        macro_p=(p0 + p1) / 2.0,
        macro_r=(r0 + r1) / 2.0,
        macro_f=(_f1(p0, r0) + _f1(p1, r1)) / 2.0,
    )


@dataclass(frozen=True)
class AblationCell:
    report: EvalReport | None = None
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.report is not None


@dataclass(frozen=True)
class AblationTable:
    seed: int
    cells: dict[ClassifierKind, dict[FeatureMode, AblationCell]] = field(repr=False)

    def cell(self, kind: ClassifierKind, mode: FeatureMode) -> AblationCell:
        return self.cells[kind][mode]

    def rows(self):
        for kind in CLASSIFIER_ORDER:
            yield kind, self.cells[kind][FeatureMode.BASELINE], \
                self.cells[kind][FeatureMode.ALL]


def _feature_table(examples: Sequence[LabeledExample], lex: SentimentLexicon):
    """Per-example vectors for both modes, tokenizing each text once."""
    vectors = {}
    for ex in examples:
        stream = tokenize(normalize_text(ex.text), lex)
        values = extract_baseline(stream)
        base = vector_from_values(values, FeatureMode.BASELINE.schema)
        values.update(extract_emotional(stream, lex))
        full = vector_from_values(values, FeatureMode.ALL.schema)
        vectors[ex.id] = {FeatureMode.BASELINE: base, FeatureMode.ALL: full}
    return vectors


def run_ablation(examples: Sequence[LabeledExample], lex: SentimentLexicon,
                 seed: int = 42,
                 hyperparams_per_kind: Mapping[ClassifierKind, Hyperparams] | None = None,
                 ) -> AblationTable:
    """Train all five classifiers before and after adding the sentiment
    features, on one shared split, and report paired P/R/F.

    A failing cell records its error message instead of aborting the rest.
    """
    split = split_dataset(examples, seed)
    by_id = {ex.id: ex for ex in examples}
    vectors = _feature_table(examples, lex)
    y_train = np.array([by_id[i].label for i in split.train_ids])
    y_test = [by_id[i].label for i in split.test_ids]

    overrides = hyperparams_per_kind or {}
    cells: dict[ClassifierKind, dict[FeatureMode, AblationCell]] = {}
    for kind in CLASSIFIER_ORDER:
        hp = overrides.get(kind, default_hyperparams(kind, seed=seed))
        cells[kind] = {}
        for mode in (FeatureMode.BASELINE, FeatureMode.ALL):
            X_train = np.array([vectors[i][mode] for i in split.train_ids])
            X_test = np.array([vectors[i][mode] for i in split.test_ids])
            try:
                model = fit(kind, X_train, y_train, hp, schema=mode.schema)
                labels, _ = predict_many(model, X_test, schema=mode.schema)
                cell = AblationCell(report=compute_metrics(labels.tolist(), y_test))
            except ArqidError as exc:
                cell = AblationCell(error=f"{type(exc).__name__}: {exc}")
            cells[kind][mode] = cell
    return AblationTable(seed=seed, cells=cells)


# ---------------------------------------------------------------------------
# Synthetic corpus
# ---------------------------------------------------------------------------

# Neutral filler vocabulary; none of these words occur in the bundled
# lexicon, so planted sentiment terms fully control the match rate there.
_FILLERS = (
    "اليوم", "البيت", "الطريق", "العمل", "الوقت", "الناس", "المدينة",
    "السوق", "الجو", "الصباح", "المساء", "الاسبوع", "الشهر", "السنة",
    "الحساب", "الطلب", "الفرع", "الموقع", "التطبيق", "الرقم",
)
_QUESTION_WORDS = ("هل", "متى", "كيف", "لماذا", "اين", "كم")
_MENTIONS = ("@dev", "@support", "@shop1", "@news24")
_HASHTAGS = ("#عام", "#يوميات", "#سوق", "#تقنية")
_NEUTRAL_EMOJIS = ("😶", "🌙", "📌", "⚽")

_P_SENTIMENT = {1: 0.8, 0: 0.2}
_P_QUESTION_WORD = {1: 0.6, 0: 0.4}
_P_QUESTION_MARK = 0.5
_P_EMOJI_SLOT = 0.35
_P_DECOR = 0.15


def generate_synthetic(n: int, seed: int, lex: SentimentLexicon) -> list[LabeledExample]:
    """Balanced labeled corpus where the sentiment features carry the signal.

    Question-seeking texts contain a lexicon sentiment term or compound with
    probability 0.8 versus 0.2 for the rest; question marks appear with
    probability 0.5 in both classes, so punctuation alone cannot separate
    them, and the leading question-word rate differs only mildly (0.6 vs
    0.4). Emoji slots fire at the same rate in both classes but draw a
    lexicon emoji more often for the positive class, keeping the total emoji
    count uninformative while the polarized counts stay predictive.
    Deterministic: same (n, seed, lexicon) gives byte-identical examples.
    """
    if n < 10:
        raise BadParams(f"need n >= 10 synthetic examples, got {n}")
    empty = [name for name, size in lex.category_sizes().items() if size == 0]
    if empty:
        raise BadParams(f"synthetic generator needs every lexicon category "
                        f"non-empty; missing: {', '.join(sorted(empty))}")

    sentiment_words = sorted(lex.pos_terms) + sorted(lex.neg_terms) \
        + [" ".join(c) for c in lex.pos_compounds + lex.neg_compounds]
    sentiment_emojis = sorted(lex.pos_emojis) + sorted(lex.neg_emojis)

    rng = random.Random(seed)
    labels = [1] * (n // 2) + [0] * (n - n // 2)
    _fisher_yates(labels, rng)

    examples = []
    for i, label in enumerate(labels):
        words = [rng.choice(_FILLERS) for _ in range(rng.randint(3, 8))]
        if rng.random() < _P_QUESTION_WORD[label]:
            words.insert(0, rng.choice(_QUESTION_WORDS))
        if rng.random() < _P_SENTIMENT[label]:
            words.insert(rng.randrange(len(words) + 1), rng.choice(sentiment_words))
        if rng.random() < _P_DECOR:
            words.insert(0, rng.choice(_MENTIONS))
        if rng.random() < _P_DECOR:
            words.append(rng.choice(_HASHTAGS))
        text = " ".join(words)
        if rng.random() < _P_QUESTION_MARK:
            text += "؟"
        if rng.random() < _P_EMOJI_SLOT:
            pool = sentiment_emojis if rng.random() < _P_SENTIMENT[label] \
                else _NEUTRAL_EMOJIS
            text += " " + rng.choice(pool)
        examples.append(LabeledExample(
            id=f"synth-{i:05d}", text=text, label=label,
            sector="synthetic", source="generator"))
    return examples
