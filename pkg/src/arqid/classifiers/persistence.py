"""Versioned JSON model files with a content checksum.

Floats are written with 17 significant digits, which round-trips IEEE-754
doubles exactly, so a loaded model predicts bit-identically to the one that
was saved. The checksum is the SHA-256 of the document serialized without
its ``checksum`` field; verification re-serializes the parsed document with
the same writer, which is stable because parse-then-format is idempotent
for this number format.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import asdict
from pathlib import Path

import numpy as np

from ..errors import CorruptModel, VersionMismatch
from .base import ClassifierKind, Hyperparams, TrainedModel

__all__ = ["FORMAT_VERSION", "save_model", "load_model", "model_to_json"]

FORMAT_VERSION = 1

_PARAM_KEYS = {
    ClassifierKind.GAUSSIAN_NB: ("class_prior", "mean", "var"),
    ClassifierKind.MULTINOMIAL_NB: ("class_prior", "feature_log_prob"),
    ClassifierKind.LOGISTIC_REGRESSION: ("w", "b", "mean", "std"),
    ClassifierKind.LINEAR_SVM: ("w", "b", "mean", "std"),
    ClassifierKind.KERNEL_SVM: ("support_vectors", "dual_coef", "b", "gamma"),
}


def _write(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return repr(int(value))
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if not math.isfinite(value):
            raise ValueError(f"cannot serialize non-finite number {value}")
        return format(value, ".17g")
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, np.ndarray):
        return _write(value.tolist())
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(_write(v) for v in value) + "]"
    if isinstance(value, dict):
        items = (f"{json.dumps(str(k))}:{_write(v)}" for k, v in value.items())
        return "{" + ",".join(items) + "}"
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _document(model: TrainedModel) -> dict:
    hp = asdict(model.hyperparams)
    hp["kind"] = model.hyperparams.kind.value
    return {
        "formatVersion": FORMAT_VERSION,
        "kind": model.kind.value,
        "schemaVersion": model.schema_version,
        "schemaFingerprint": model.schema_fingerprint,
        "schemaNames": list(model.schema_names),
        "hyperparams": hp,
        "nTrain": model.n_train,
        "params": {k: model.params[k] for k in _PARAM_KEYS[model.kind]},
    }


def _checksum(doc: dict) -> str:
    return hashlib.sha256(_write(doc).encode("utf-8")).hexdigest()


def model_to_json(model: TrainedModel) -> str:
    doc = _document(model)
    doc["checksum"] = _checksum({k: v for k, v in doc.items() if k != "checksum"})
    return _write(doc)


def save_model(model: TrainedModel, path: str | Path) -> None:
    Path(path).write_text(model_to_json(model) + "\n", encoding="utf-8")


def _require(doc: dict, key: str):
    if key not in doc:
        raise CorruptModel(f"model file is missing field {key!r}")
    return doc[key]


def load_model(path: str | Path) -> TrainedModel:
    """Read, verify and rebuild a model; predictions match the saved model bit for bit."""
    try:
        text = Path(path).read_text(encoding="utf-8")
        doc = json.loads(text)
    except OSError:
        raise
    except (ValueError, UnicodeDecodeError) as exc:
        raise CorruptModel(f"unparseable model file: {exc}") from exc
    if not isinstance(doc, dict):
        raise CorruptModel("model file does not contain a JSON object")

    version = _require(doc, "formatVersion")
    if not isinstance(version, int) or version < 1:
        raise CorruptModel(f"bad formatVersion: {version!r}")
    if version > FORMAT_VERSION:
        raise VersionMismatch(
            f"model format {version} is newer than supported {FORMAT_VERSION}")

    stored = _require(doc, "checksum")
    body = {k: v for k, v in doc.items() if k != "checksum"}
    if _checksum(body) != stored:
        raise CorruptModel("model file failed its checksum")

    try:
        kind = ClassifierKind(_require(doc, "kind"))
        hp_doc = dict(_require(doc, "hyperparams"))
        hp_doc["kind"] = ClassifierKind(hp_doc["kind"])
        hyperparams = Hyperparams(**hp_doc)
        schema_names = tuple(_require(doc, "schemaNames"))
        raw_params = _require(doc, "params")
        params = {}
        for key in _PARAM_KEYS[kind]:
            value = raw_params[key]
            if isinstance(value, list):
                params[key] = np.asarray(value, dtype=float)
            elif value is None:
                params[key] = None
            else:
                params[key] = float(value)
        if kind is ClassifierKind.KERNEL_SVM:
            params["support_vectors"] = np.asarray(
                raw_params["support_vectors"], dtype=float).reshape(-1, len(schema_names))
        model = TrainedModel(
            kind=kind,
            schema_names=schema_names,
            schema_version=str(_require(doc, "schemaVersion")),
            schema_fingerprint=str(_require(doc, "schemaFingerprint")),
            hyperparams=hyperparams,
            n_train=int(_require(doc, "nTrain")),
            params=params,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise CorruptModel(f"malformed model document: {exc}") from exc

    _validate_shapes(model)
    return model


def _validate_shapes(model: TrainedModel) -> None:
    d = model.n_features
    p = model.params
    ok = True
    if model.kind in (ClassifierKind.GAUSSIAN_NB,):
        ok = p["mean"].shape == (2, d) and p["var"].shape == (2, d) \
            and p["class_prior"].shape == (2,)
    elif model.kind is ClassifierKind.MULTINOMIAL_NB:
        ok = p["feature_log_prob"].shape == (2, d) and p["class_prior"].shape == (2,)
    elif model.kind in (ClassifierKind.LOGISTIC_REGRESSION, ClassifierKind.LINEAR_SVM):
        ok = p["w"].shape == (d,) and p["mean"].shape == (d,) and p["std"].shape == (d,)
    elif model.kind is ClassifierKind.KERNEL_SVM:
        sv = p["support_vectors"]
        ok = sv.ndim == 2 and sv.shape[1] == d and p["dual_coef"].shape == (sv.shape[0],)
    if not ok:
        raise CorruptModel("parameter shapes do not match the feature schema")
