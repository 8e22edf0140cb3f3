"""Five from-scratch binary classifiers plus model persistence.

Label 1 means question-seeking, label 0 means not. Importing this package
registers every trainer and scorer with the dispatch tables in ``base``.
"""

from .base import (
    CLASSIFIER_ORDER,
    ClassifierKind,
    Hyperparams,
    Prediction,
    TrainedModel,
    decision_scores,
    default_hyperparams,
    fit,
    predict,
    predict_many,
)
from .kernel import fit_kernel_svm
from .linear import fit_linear_svm, fit_logistic_regression, logistic_loss_and_grad
from .naive_bayes import fit_gaussian_nb, fit_multinomial_nb
from .persistence import FORMAT_VERSION, load_model, model_to_json, save_model

__all__ = [
    "CLASSIFIER_ORDER",
    "ClassifierKind",
    "Hyperparams",
    "Prediction",
    "TrainedModel",
    "decision_scores",
    "default_hyperparams",
    "fit",
    "predict",
    "predict_many",
    "fit_kernel_svm",
    "fit_linear_svm",
    "fit_logistic_regression",
    "logistic_loss_and_grad",
    "fit_gaussian_nb",
    "fit_multinomial_nb",
    "FORMAT_VERSION",
    "load_model",
    "model_to_json",
    "save_model",
]
