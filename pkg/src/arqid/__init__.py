"""arqid: classify Arabic social-media text as question-seeking or not.

The pipeline normalizes and tokenizes text, matches it against a sentiment
lexicon, extracts a fixed feature vector (12 baseline features plus 10
sentiment-derived ones), and feeds five from-scratch classifiers. An
ablation harness trains each classifier with and without the sentiment
features on one shared stratified split to measure their contribution.
"""

from .classifiers import (
    CLASSIFIER_ORDER,
    ClassifierKind,
    Hyperparams,
    Prediction,
    TrainedModel,
    default_hyperparams,
    fit,
    fit_gaussian_nb,
    fit_kernel_svm,
    fit_linear_svm,
    fit_logistic_regression,
    fit_multinomial_nb,
    load_model,
    predict,
    predict_many,
    save_model,
)
from .dataset import LabeledExample, load_dataset, save_dataset_jsonl
from .evaluation import (
    AblationTable,
    EvalReport,
    Split,
    compute_metrics,
    generate_synthetic,
    run_ablation,
    split_dataset,
)
from .features import (
    BASELINE_FEATURES,
    EMOTIONAL_FEATURES,
    SCHEMA_ALL,
    SCHEMA_BASELINE,
    FeatureMode,
    FeatureSchema,
    extract_baseline,
    extract_emotional,
    extract_features,
)
from .lexicon import (
    Polarity,
    SentimentLexicon,
    TermMatch,
    builtin_lexicon_path,
    load_lexicon,
    match_terms,
)
from .text import Token, TokenKind, TokenStream, normalize_text, tokenize

__version__ = "0.1.0"
