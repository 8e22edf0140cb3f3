"""RBF-kernel SVM trained with a simplified SMO loop.

The working-set partner is drawn from a seeded generator, so training is
deterministic for a fixed (X, y, hyperparams, seed). Only support vectors
(|alpha| > 1e-8) are kept in the model.
"""

from __future__ import annotations

import numpy as np

from ..errors import TooLarge
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

__all__ = ["fit_kernel_svm", "rbf_kernel", "scale_gamma"]

MAX_TRAIN_SIZE = 100_000
_SUPPORT_EPS = 1e-8
# Cap on optimization sweeps so pathological data cannot spin forever.
_MAX_SWEEPS = 1000


def scale_gamma(X: np.ndarray) -> float:
    """1 / (n_features * mean feature variance); 1.0 for constant data."""
    mean_var = float(np.var(X, axis=0).mean())
    if mean_var <= 0.0:
        return 1.0
    return 1.0 / (X.shape[1] * mean_var)


def rbf_kernel(A: np.ndarray, B: np.ndarray, gamma: float) -> np.ndarray:
    sq = (np.sum(A * A, axis=1)[:, None] + np.sum(B * B, axis=1)[None, :]
          - 2.0 * (A @ B.T))
    np.maximum(sq, 0.0, out=sq)
    return np.exp(-gamma * sq)


def fit_kernel_svm(X, y, hp: Hyperparams | None = None,
                   schema: FeatureSchema | None = None) -> TrainedModel:
    if hp is None:
        hp = default_hyperparams(ClassifierKind.KERNEL_SVM)
    X, y, schema = validate_training_data(X, y, schema, require_both_classes=True)
    n = X.shape[0]
    if n > MAX_TRAIN_SIZE:
        raise TooLarge(f"kernel SVM guard: {n} examples > {MAX_TRAIN_SIZE}")

    gamma = hp.gamma if hp.gamma is not None else scale_gamma(X)
    K = rbf_kernel(X, X, gamma)
    ypm = 2.0 * y.astype(float) - 1.0
    C, tol = hp.c, hp.smo_tol

    rng = np.random.default_rng(hp.seed)
    alpha = np.zeros(n)
    b = 0.0
    passes = 0
    sweeps = 0
    while passes < hp.max_passes and sweeps < _MAX_SWEEPS:
        sweeps += 1
        changed = 0
        coef = alpha * ypm
        for i in range(n):
            e_i = coef @ K[:, i] + b - ypm[i]
            if not ((ypm[i] * e_i < -tol and alpha[i] < C)
                    or (ypm[i] * e_i > tol and alpha[i] > 0)):
                continue
            j = int(rng.integers(n - 1))
            if j >= i:
                j += 1
            e_j = coef @ K[:, j] + b - ypm[j]

            ai_old, aj_old = alpha[i], alpha[j]
            if ypm[i] != ypm[j]:
                low = max(0.0, aj_old - ai_old)
                high = min(C, C + aj_old - ai_old)
            else:
                low = max(0.0, ai_old + aj_old - C)
                high = min(C, ai_old + aj_old)
            if low == high:
                continue
            eta = 2.0 * K[i, j] - K[i, i] - K[j, j]
            if eta >= 0:
                continue

            aj = aj_old - ypm[j] * (e_i - e_j) / eta
            aj = min(high, max(low, aj))
            if abs(aj - aj_old) < 1e-5:
                continue
            ai = ai_old + ypm[i] * ypm[j] * (aj_old - aj)

            b1 = (b - e_i - ypm[i] * (ai - ai_old) * K[i, i]
                  - ypm[j] * (aj - aj_old) * K[i, j])
            b2 = (b - e_j - ypm[i] * (ai - ai_old) * K[i, j]
                  - ypm[j] * (aj - aj_old) * K[j, j])
            if 0.0 < ai < C:
                b = b1
            elif 0.0 < aj < C:
                b = b2
            else:
                b = 0.5 * (b1 + b2)

            alpha[i], alpha[j] = ai, aj
            coef[i], coef[j] = ai * ypm[i], aj * ypm[j]
            changed += 1
        passes = passes + 1 if changed == 0 else 0

    support = np.abs(alpha) > _SUPPORT_EPS
    params = {
        "support_vectors": X[support],
        "dual_coef": (alpha * ypm)[support],
        "b": float(b),
        "gamma": float(gamma),
    }
    return build_model(ClassifierKind.KERNEL_SVM, schema, hp, n, params)


def _score_kernel_svm(model: TrainedModel, X: np.ndarray) -> np.ndarray:
    sv = model.params["support_vectors"]
    if len(sv) == 0:
        return np.full(X.shape[0], model.params["b"])
    K = rbf_kernel(X, sv, model.params["gamma"])
    return K @ model.params["dual_coef"] + model.params["b"]


FITTERS[ClassifierKind.KERNEL_SVM] = fit_kernel_svm
SCORERS[ClassifierKind.KERNEL_SVM] = _score_kernel_svm
