"""Labeled datasets: JSON-lines and CSV reading, JSON-lines writing.

JSONL files carry one object per line with fields ``id``, ``text``,
``label`` (0 or 1) and optional ``sector`` and ``source``. CSV files need a
header with at least ``id,text,label``; quoting follows the csv module's
RFC-4180 behaviour.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .errors import EmptyDataset

__all__ = ["LabeledExample", "load_dataset", "save_dataset_jsonl"]


@dataclass(frozen=True, slots=True)
class LabeledExample:
    id: str
    text: str
    label: int
    sector: str | None = None
    source: str | None = None


def _coerce_label(value, where: str) -> int:
    if isinstance(value, bool) or value not in (0, 1, "0", "1"):
        raise ValueError(f"{where}: label must be 0 or 1, got {value!r}")
    return int(value)


def _check_unique_ids(examples: Sequence[LabeledExample], path) -> None:
    seen: set[str] = set()
    for ex in examples:
        if ex.id in seen:
            raise ValueError(f"{path}: duplicate example id {ex.id!r}")
        seen.add(ex.id)


def _load_jsonl(path: Path) -> list[LabeledExample]:
    examples = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            where = f"{path}:{lineno}"
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ValueError(f"{where}: bad JSON: {exc}") from exc
            if not isinstance(obj, dict) or "id" not in obj or "text" not in obj \
                    or "label" not in obj:
                raise ValueError(f"{where}: need id, text and label fields")
            examples.append(LabeledExample(
                id=str(obj["id"]),
                text=str(obj["text"]),
                label=_coerce_label(obj["label"], where),
                sector=obj.get("sector"),
                source=obj.get("source"),
            ))
    return examples


def _load_csv(path: Path) -> list[LabeledExample]:
    examples = []
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        for required in ("id", "text", "label"):
            if required not in header:
                raise ValueError(f"{path}: CSV header must include {required!r}")
        for lineno, row in enumerate(reader, 2):
            where = f"{path}:{lineno}"
            examples.append(LabeledExample(
                id=row["id"],
                text=row["text"] or "",
                label=_coerce_label(row["label"], where),
                sector=row.get("sector") or None,
                source=row.get("source") or None,
            ))
    return examples


def load_dataset(path: str | Path) -> list[LabeledExample]:
    """Load a dataset file, dispatching on extension (.csv vs JSON-lines)."""
    path = Path(path)
    if path.suffix.lower() == ".csv":
        examples = _load_csv(path)
    else:
        examples = _load_jsonl(path)
    if not examples:
        raise EmptyDataset(f"{path}: no examples")
    _check_unique_ids(examples, path)
    return examples


def save_dataset_jsonl(examples: Iterable[LabeledExample], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for ex in examples:
            obj = {"id": ex.id, "text": ex.text, "label": ex.label}
            if ex.sector is not None:
                obj["sector"] = ex.sector
            if ex.source is not None:
                obj["source"] = ex.source
            fh.write(json.dumps(obj, ensure_ascii=False) + "\n")
