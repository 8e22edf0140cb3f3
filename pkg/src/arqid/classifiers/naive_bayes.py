"""Gaussian and multinomial naive Bayes, fitted in closed form.

Both variants tolerate single-class training data: the missing class gets a
zero prior and can never win, so such a model is a constant predictor.
"""

from __future__ import annotations

import numpy as np

from ..errors import NegativeFeature
from ..features import FeatureSchema
from .base import (
    FITTERS,
    SCORERS,
    ClassifierKind,
    Hyperparams,
    TrainedModel,
    build_model,
    default_hyperparams,
    validate_training_data,
)

__all__ = ["fit_gaussian_nb", "fit_multinomial_nb"]

_LOG_2PI = float(np.log(2.0 * np.pi))


def _class_priors(y: np.ndarray) -> np.ndarray:
    return np.array([np.mean(y == 0), np.mean(y == 1)])


def _log_prior(prior: np.ndarray) -> np.ndarray:
    with np.errstate(divide="ignore"):
        return np.log(prior)


def fit_gaussian_nb(X, y, hp: Hyperparams | None = None,
                    schema: FeatureSchema | None = None) -> TrainedModel:
    """Per-class feature means and smoothed population variances.

    Variances get ``var_smoothing * max feature variance`` added (1 is used
    when every feature is constant), keeping all of them strictly positive.
    """
    if hp is None:
        hp = default_hyperparams(ClassifierKind.GAUSSIAN_NB)
    X, y, schema = validate_training_data(X, y, schema, require_both_classes=False)

    n, d = X.shape
    max_var = float(np.var(X, axis=0).max()) if n else 0.0
    eps = hp.var_smoothing * (max_var if max_var > 0 else 1.0)

    mean = np.zeros((2, d))
    var = np.ones((2, d))
    for c in (0, 1):
        rows = X[y == c]
        if len(rows):
            mean[c] = rows.mean(axis=0)
            var[c] = rows.var(axis=0)
    var = var + eps

    params = {"class_prior": _class_priors(y), "mean": mean, "var": var}
    return build_model(ClassifierKind.GAUSSIAN_NB, schema, hp, n, params)


def _score_gaussian_nb(model: TrainedModel, X: np.ndarray) -> np.ndarray:
    mean = model.params["mean"]
    var = model.params["var"]
    log_prior = _log_prior(model.params["class_prior"])
    joint = np.empty((X.shape[0], 2))
    for c in (0, 1):
        log_lik = -0.5 * (_LOG_2PI + np.log(var[c]) + (X - mean[c]) ** 2 / var[c])
        joint[:, c] = log_prior[c] + log_lik.sum(axis=1)
    return joint[:, 1] - joint[:, 0]


def fit_multinomial_nb(X, y, hp: Hyperparams | None = None,
                       schema: FeatureSchema | None = None) -> TrainedModel:
    """Laplace-smoothed feature-mass likelihoods over nonnegative features."""
    if hp is None:
        hp = default_hyperparams(ClassifierKind.MULTINOMIAL_NB)
    X, y, schema = validate_training_data(X, y, schema, require_both_classes=False)
    if (X < 0).any():
        raise NegativeFeature("multinomial NB requires nonnegative features")

    d = X.shape[1]
    feature_log_prob = np.zeros((2, d))
    for c in (0, 1):
        counts = X[y == c].sum(axis=0) if (y == c).any() else np.zeros(d)
        smoothed = counts + hp.alpha
        feature_log_prob[c] = np.log(smoothed) - np.log(smoothed.sum())

    params = {"class_prior": _class_priors(y), "feature_log_prob": feature_log_prob}
    return build_model(ClassifierKind.MULTINOMIAL_NB, schema, hp, X.shape[0], params)


def _score_multinomial_nb(model: TrainedModel, X: np.ndarray) -> np.ndarray:
    flp = model.params["feature_log_prob"]
    log_prior = _log_prior(model.params["class_prior"])
    joint = X @ flp.T + log_prior
    return joint[:, 1] - joint[:, 0]


FITTERS[ClassifierKind.GAUSSIAN_NB] = fit_gaussian_nb
FITTERS[ClassifierKind.MULTINOMIAL_NB] = fit_multinomial_nb
SCORERS[ClassifierKind.GAUSSIAN_NB] = _score_gaussian_nb
SCORERS[ClassifierKind.MULTINOMIAL_NB] = _score_multinomial_nb
