"""Shared classifier types: hyperparameters, trained models, prediction.

Each concrete trainer lives in its own module and registers a fitter and a
scorer here, keyed by :class:`ClassifierKind`. ``predict`` is therefore a
single dispatch point that also enforces the schema-fingerprint contract:
a model only accepts vectors produced under the exact ordered feature-name
list it was trained on.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields, replace
from enum import Enum
from typing import Callable

import numpy as np

from ..errors import (
    BadParams,
    DimensionMismatch,
    EmptyDataset,
    SchemaMismatch,
    SingleClass,
)
from ..features import FeatureSchema

__all__ = [
    "ClassifierKind",
    "CLASSIFIER_ORDER",
    "Hyperparams",
    "default_hyperparams",
    "TrainedModel",
    "Prediction",
    "fit",
    "predict",
    "predict_many",
    "decision_scores",
]


class ClassifierKind(Enum):
    KERNEL_SVM = "svm"
    LINEAR_SVM = "linsvm"
    MULTINOMIAL_NB = "nb"
    LOGISTIC_REGRESSION = "logreg"
    GAUSSIAN_NB = "gnb"


# Report row order: RBF SVM, linear SVM, multinomial NB, logistic regression,
# Gaussian NB.
CLASSIFIER_ORDER = (
    ClassifierKind.KERNEL_SVM,
    ClassifierKind.LINEAR_SVM,
    ClassifierKind.MULTINOMIAL_NB,
    ClassifierKind.LOGISTIC_REGRESSION,
    ClassifierKind.GAUSSIAN_NB,
)


@dataclass(frozen=True)
class Hyperparams:
    """All tunables for every classifier kind; irrelevant fields are ignored.

    Defaults follow common practice: logistic regression lr=0.1, L2=1e-4,
    1000 iterations, tol=1e-6; linear SVM lambda=1e-4, 100 epochs; RBF SVM
    C=1.0, tol=1e-3, 10 passes, gamma from the scale heuristic; multinomial
    NB alpha=1.0; Gaussian NB variance smoothing 1e-9 of the largest feature
    variance. ``max_iters`` may be 0 so a zero-iteration fit stays honored.
    """

    kind: ClassifierKind
    seed: int = 42
    # logistic regression
    lr: float = 0.1
    l2: float = 1e-4
    max_iters: int = 1000
    tol: float = 1e-6
    # linear SVM (stochastic subgradient)
    lam: float = 1e-4
    epochs: int = 100
    # RBF-kernel SVM (sequential minimal optimization)
    c: float = 1.0
    smo_tol: float = 1e-3
    max_passes: int = 10
    gamma: float | None = None
    # multinomial NB
    alpha: float = 1.0
    # Gaussian NB
    var_smoothing: float = 1e-9

    def __post_init__(self):
        positive = {"lr": self.lr, "l2": self.l2, "lam": self.lam, "c": self.c,
                    "alpha": self.alpha, "var_smoothing": self.var_smoothing}
        for name, value in positive.items():
            if not value > 0:
                raise BadParams(f"{name} must be > 0, got {value}")
        if self.epochs < 1:
            raise BadParams(f"epochs must be >= 1, got {self.epochs}")
        if self.max_passes < 1:
            raise BadParams(f"max_passes must be >= 1, got {self.max_passes}")
        if self.max_iters < 0:
            raise BadParams(f"max_iters must be >= 0, got {self.max_iters}")
        if self.tol < 0 or self.smo_tol < 0:
            raise BadParams("tolerances must be >= 0")
        if self.gamma is not None and not self.gamma > 0:
            raise BadParams(f"gamma must be > 0 when set, got {self.gamma}")

    def with_overrides(self, **kwargs) -> "Hyperparams":
        unknown = set(kwargs) - {f.name for f in fields(self)}
        if unknown:
            raise BadParams(f"unknown hyperparameters: {sorted(unknown)}")
        return replace(self, **kwargs)


def default_hyperparams(kind: ClassifierKind, seed: int = 42) -> Hyperparams:
    return Hyperparams(kind=kind, seed=seed)


@dataclass(frozen=True)
class TrainedModel:
    """Immutable fit result; safe to share across threads for prediction."""

    kind: ClassifierKind
    schema_names: tuple[str, ...]
    schema_version: str
    schema_fingerprint: str
    hyperparams: Hyperparams
    n_train: int
    params: dict = field(repr=False)

    @property
    def n_features(self) -> int:
        return len(self.schema_names)


@dataclass(frozen=True, slots=True)
class Prediction:
    label: int
    score: float


# Populated by the trainer modules at import time.
FITTERS: dict[ClassifierKind, Callable] = {}
SCORERS: dict[ClassifierKind, Callable] = {}


def _adhoc_schema(width: int) -> FeatureSchema:
    return FeatureSchema(names=tuple(f"x{i}" for i in range(width)),
                         version="adhoc", groups=("adhoc",) * width)


def validate_training_data(X, y, schema: FeatureSchema | None,
                           require_both_classes: bool):
    """Common fit-time checks; returns (X, y, schema) in canonical form."""
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=int)
    if X.ndim != 2:
        raise DimensionMismatch(f"X must be 2-D, got shape {X.shape}")
    if y.ndim != 1 or len(y) != X.shape[0]:
        raise DimensionMismatch(
            f"{X.shape[0]} feature rows but {y.size} labels")
    if X.shape[0] == 0:
        raise EmptyDataset("training data is empty")
    if not np.isfinite(X).all():
        raise BadParams("feature values must be finite")
    if not np.isin(y, (0, 1)).all():
        raise BadParams("labels must be 0 or 1")
    if schema is None:
        schema = _adhoc_schema(X.shape[1])
    elif len(schema) != X.shape[1]:
        raise DimensionMismatch(
            f"schema has {len(schema)} names but X has {X.shape[1]} columns")
    if require_both_classes and len(np.unique(y)) < 2:
        raise SingleClass("training data contains a single label")
    return X, y, schema


def build_model(kind: ClassifierKind, schema: FeatureSchema, hp: Hyperparams,
                n_train: int, params: dict) -> TrainedModel:
    return TrainedModel(kind=kind, schema_names=schema.names,
                        schema_version=schema.version,
                        schema_fingerprint=schema.fingerprint,
                        hyperparams=hp, n_train=n_train, params=params)


def fit(kind: ClassifierKind, X, y, hp: Hyperparams | None = None,
        schema: FeatureSchema | None = None) -> TrainedModel:
    """Train a classifier of ``kind``; thin dispatcher over the fit_* functions."""
    if hp is None:
        hp = default_hyperparams(kind)
    return FITTERS[kind](X, y, hp, schema)


def decision_scores(model: TrainedModel, X) -> np.ndarray:
    """Signed scores for a batch; positive means label 1."""
    X = np.asarray(X, dtype=float)
    if X.ndim == 1:
        X = X[None, :]
    if X.shape[1] != model.n_features:
        raise SchemaMismatch(
            f"model expects {model.n_features} features, got {X.shape[1]}")
    return SCORERS[model.kind](model, X)


def _check_schema(model: TrainedModel, schema: FeatureSchema | None) -> None:
    if schema is not None and schema.fingerprint != model.schema_fingerprint:
        raise SchemaMismatch(
            "feature schema fingerprint does not match the model "
            f"({schema.fingerprint} != {model.schema_fingerprint})")


def predict(model: TrainedModel, x, schema: FeatureSchema | None = None) -> Prediction:
    """Classify one vector; score 0 ties resolve to label 0."""
    _check_schema(model, schema)
    score = float(decision_scores(model, np.asarray(x, dtype=float))[0])
    return Prediction(label=1 if score > 0 else 0, score=score)


def predict_many(model: TrainedModel, X,
                 schema: FeatureSchema | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Labels and scores for a batch of vectors."""
    _check_schema(model, schema)
    scores = decision_scores(model, X)
    return (scores > 0).astype(int), scores
