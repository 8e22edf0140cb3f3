"""Logistic regression and linear SVM on z-scored features.

Both models standardize with training statistics (constant features map to
zero) and share the same decision rule: score = w . x_std + b, label 1 when
the score is strictly positive.
"""

from __future__ import annotations

import numpy as np

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

__all__ = ["fit_logistic_regression", "fit_linear_svm", "logistic_loss_and_grad"]


def standardize_fit(X: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    return X.mean(axis=0), X.std(axis=0)


def standardize_apply(X: np.ndarray, mean: np.ndarray, std: np.ndarray) -> np.ndarray:
    # Constant features (std 0) are passed through as exactly 0.
    scale = np.zeros_like(std)
    np.divide(1.0, std, out=scale, where=std > 0)
    return (X - mean) * scale


def _sigmoid(z: np.ndarray) -> np.ndarray:
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


def logistic_loss_and_grad(w: np.ndarray, b: float, X: np.ndarray,
                           y: np.ndarray, l2: float):
    """Mean L2-regularized negative log-likelihood and its exact gradient.

    The bias is not regularized. Returns (loss, grad_w, grad_b).
    """
    n = X.shape[0]
    z = X @ w + b
    loss = float(np.mean(np.logaddexp(0.0, z) - y * z) + 0.5 * l2 * (w @ w))
    residual = _sigmoid(z) - y
    grad_w = X.T @ residual / n + l2 * w
    grad_b = float(residual.mean())
    return loss, grad_w, grad_b


def _logreg_descend(Xs: np.ndarray, y: np.ndarray, hp: Hyperparams):
    """Full-batch gradient descent from zero weights; returns (w, b, losses)."""
    w = np.zeros(Xs.shape[1])
    b = 0.0
    losses: list[float] = []
    prev = np.inf
    for _ in range(hp.max_iters):
        loss, grad_w, grad_b = logistic_loss_and_grad(w, b, Xs, y, hp.l2)
        losses.append(loss)
        if prev - loss < hp.tol:
            break
        w = w - hp.lr * grad_w
        b = b - hp.lr * grad_b
        prev = loss
    return w, b, losses


def fit_logistic_regression(X, y, hp: Hyperparams | None = None,
                            schema: FeatureSchema | None = None) -> TrainedModel:
    if hp is None:
        hp = default_hyperparams(ClassifierKind.LOGISTIC_REGRESSION)
    X, y, schema = validate_training_data(X, y, schema, require_both_classes=True)
    mean, std = standardize_fit(X)
    w, b, _ = _logreg_descend(standardize_apply(X, mean, std), y.astype(float), hp)
    params = {"w": w, "b": b, "mean": mean, "std": std}
    return build_model(ClassifierKind.LOGISTIC_REGRESSION, schema, hp, X.shape[0], params)


def fit_linear_svm(X, y, hp: Hyperparams | None = None,
                   schema: FeatureSchema | None = None) -> TrainedModel:
    """Stochastic subgradient descent on the regularized hinge loss.

    One pass per epoch over a seeded shuffle of the training set, step size
    1/(lambda * t), bias handled as an appended constant feature. The whole
    trajectory is a deterministic function of (X, y, hyperparams, seed).
    """
    if hp is None:
        hp = default_hyperparams(ClassifierKind.LINEAR_SVM)
    X, y, schema = validate_training_data(X, y, schema, require_both_classes=True)
    mean, std = standardize_fit(X)
    Xa = np.column_stack([standardize_apply(X, mean, std), np.ones(X.shape[0])])
    ypm = 2.0 * y - 1.0

    rng = np.random.default_rng(hp.seed)
    n = Xa.shape[0]
    w = np.zeros(Xa.shape[1])
    t = 0
    for _ in range(hp.epochs):
        for i in rng.permutation(n):
            t += 1
            eta = 1.0 / (hp.lam * t)
            decay = 1.0 - eta * hp.lam
            if ypm[i] * (w @ Xa[i]) < 1.0:
                w = decay * w + (eta * ypm[i]) * Xa[i]
            else:
                w = decay * w

    params = {"w": w[:-1], "b": float(w[-1]), "mean": mean, "std": std}
    return build_model(ClassifierKind.LINEAR_SVM, schema, hp, n, params)


def _score_linear(model: TrainedModel, X: np.ndarray) -> np.ndarray:
    Xs = standardize_apply(X, model.params["mean"], model.params["std"])
    return Xs @ model.params["w"] + model.params["b"]


FITTERS[ClassifierKind.LOGISTIC_REGRESSION] = fit_logistic_regression
FITTERS[ClassifierKind.LINEAR_SVM] = fit_linear_svm
SCORERS[ClassifierKind.LOGISTIC_REGRESSION] = _score_linear
SCORERS[ClassifierKind.LINEAR_SVM] = _score_linear
