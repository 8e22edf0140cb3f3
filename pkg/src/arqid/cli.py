"""Command-line interface.

Subcommands: ``train``, ``eval``, ``ablate``, ``classify``, ``synth``.
Payload goes to stdout (or ``--out``); logs and errors go to stderr. Exit
codes: 0 success, 1 I/O or configuration problem, 2 training failure,
3 feature-schema mismatch.

The lexicon is resolved from ``--lexicon``, then the ``QID_LEXICON``
environment variable, then the small lexicon bundled with the package.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .classifiers import (
    ClassifierKind,
    TrainedModel,
    default_hyperparams,
    fit,
    load_model,
    predict,
    predict_many,
    save_model,
)
from .dataset import load_dataset, save_dataset_jsonl
from .errors import (
    ArqidError,
    BadParams,
    ModelFileError,
    PolarityConflict,
    SchemaMismatch,
)
from .evaluation import compute_metrics, generate_synthetic, run_ablation, split_dataset
from .features import SCHEMA_ALL, SCHEMA_BASELINE, FeatureMode, extract_features
from .lexicon import builtin_lexicon_path, load_lexicon
from .report import format_ablation, format_eval_report, render_ablation_figure

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_TRAINING = 2
EXIT_SCHEMA = 3

_CONFIG_ERRORS = (OSError, UnicodeDecodeError, ValueError, BadParams,
                  PolarityConflict, ModelFileError)

_INT_HP_KEYS = {"seed", "max_iters", "epochs", "max_passes"}


def _log(message: str) -> None:
    print(message, file=sys.stderr)


def _lexicon_dir(args) -> str:
    return args.lexicon or os.environ.get("QID_LEXICON") or str(builtin_lexicon_path())


def _parse_hp_overrides(pairs) -> dict:
    overrides = {}
    for pair in pairs or ():
        if "=" not in pair:
            raise BadParams(f"--hp expects key=value, got {pair!r}")
        key, _, value = pair.partition("=")
        key = key.strip()
        try:
            overrides[key] = int(value) if key in _INT_HP_KEYS else float(value)
        except ValueError as exc:
            raise BadParams(f"--hp {key}: cannot parse {value!r}") from exc
    return overrides


def _mode_for_model(model: TrainedModel) -> FeatureMode:
    if model.schema_fingerprint == SCHEMA_ALL.fingerprint:
        return FeatureMode.ALL
    if model.schema_fingerprint == SCHEMA_BASELINE.fingerprint:
        return FeatureMode.BASELINE
    raise SchemaMismatch("model was trained on a feature schema this build "
                         "does not produce")


def _emit(payload: str, out: str | None) -> None:
    if out:
        Path(out).write_text(payload, encoding="utf-8")
    else:
        sys.stdout.write(payload if payload.endswith("\n") else payload + "\n")


def cmd_train(args) -> int:
    try:
        lex = load_lexicon(_lexicon_dir(args))
        examples = load_dataset(args.data)
        kind = ClassifierKind(args.classifier)
        mode = FeatureMode(args.features)
        hp = default_hyperparams(kind, seed=args.seed).with_overrides(
            **_parse_hp_overrides(args.hp))
    except _CONFIG_ERRORS as exc:
        _log(f"error: {exc}")
        return EXIT_CONFIG

    holdout = None
    if args.holdout:
        split = split_dataset(examples, args.seed)
        by_id = {ex.id: ex for ex in examples}
        train_set = [by_id[i] for i in split.train_ids]
        holdout = [by_id[i] for i in split.test_ids]
    else:
        train_set = list(examples)

    try:
        X = [extract_features(ex.text, lex, mode) for ex in train_set]
        y = [ex.label for ex in train_set]
        model = fit(kind, X, y, hp, schema=mode.schema)
    except ArqidError as exc:
        _log(f"training failed: {exc}")
        return EXIT_TRAINING

    try:
        save_model(model, args.model)
    except OSError as exc:
        _log(f"error: cannot write model: {exc}")
        return EXIT_CONFIG

    print(f"kind               {kind.value}")
    print(f"features           {mode.value} ({len(mode.schema)} dims)")
    print(f"schema fingerprint {model.schema_fingerprint}")
    print(f"training examples  {model.n_train}")
    print(f"model file         {args.model}")
    if holdout:
        labels, _ = predict_many(model, [extract_features(ex.text, lex, mode)
                                         for ex in holdout], schema=mode.schema)
        report = compute_metrics(labels.tolist(), [ex.label for ex in holdout])
        print(f"holdout            P={report.precision_pos:.4f} "
              f"R={report.recall_pos:.4f} F={report.f1_pos:.4f} "
              f"on {len(holdout)} examples")
    return EXIT_OK


def cmd_eval(args) -> int:
    try:
        model = load_model(args.model)
        lex = load_lexicon(_lexicon_dir(args))
        examples = load_dataset(args.data)
    except _CONFIG_ERRORS as exc:
        _log(f"error: {exc}")
        return EXIT_CONFIG

    try:
        mode = _mode_for_model(model)
        X = [extract_features(ex.text, lex, mode) for ex in examples]
        labels, _ = predict_many(model, X, schema=mode.schema)
    except SchemaMismatch as exc:
        _log(f"schema mismatch: {exc}")
        return EXIT_SCHEMA

    report = compute_metrics(labels.tolist(), [ex.label for ex in examples])
    _emit(format_eval_report(report, args.format), args.out)
    return EXIT_OK


def cmd_ablate(args) -> int:
    try:
        lex = load_lexicon(_lexicon_dir(args))
        examples = load_dataset(args.data)
    except _CONFIG_ERRORS as exc:
        _log(f"error: {exc}")
        return EXIT_CONFIG

    try:
        table = run_ablation(examples, lex, seed=args.seed)
    except ArqidError as exc:
        _log(f"ablation failed: {exc}")
        return EXIT_TRAINING

    succeeded = sum(1 for _, before, after in table.rows()
                    for cell in (before, after) if cell.ok)
    if succeeded == 0:
        _log("ablation failed: no cell trained successfully")
        return EXIT_TRAINING

    _emit(format_ablation(table, args.format), args.out)
    if args.figure:
        render_ablation_figure(table, args.figure)
        _log(f"figure written to {args.figure}")
    return EXIT_OK


def _classify_lines(args):
    if args.text is not None:
        yield args.text
        return
    for line in sys.stdin:
        yield line.rstrip("\n")


def cmd_classify(args) -> int:
    try:
        model = load_model(args.model)
        lex = load_lexicon(_lexicon_dir(args))
    except _CONFIG_ERRORS as exc:
        _log(f"error: {exc}")
        return EXIT_CONFIG

    try:
        mode = _mode_for_model(model)
    except SchemaMismatch as exc:
        _log(f"schema mismatch: {exc}")
        return EXIT_SCHEMA

    sink = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        if args.format == "csv":
            sink.write("label,score\n")
        for line in _classify_lines(args):
            vec = extract_features(line, lex, mode)
            pred = predict(model, vec, schema=mode.schema)
            if args.format == "json":
                sink.write(json.dumps({"label": pred.label, "score": pred.score}) + "\n")
            elif args.format == "csv":
                sink.write(f"{pred.label},{pred.score:.6f}\n")
            else:
                sink.write(f"{pred.label}\t{pred.score:.6f}\n")
    finally:
        if args.out:
            sink.close()
    return EXIT_OK


def cmd_synth(args) -> int:
    try:
        lex = load_lexicon(_lexicon_dir(args))
        examples = generate_synthetic(args.n, args.seed, lex)
    except _CONFIG_ERRORS as exc:
        _log(f"error: {exc}")
        return EXIT_CONFIG

    if args.out:
        save_dataset_jsonl(examples, args.out)
        _log(f"wrote {len(examples)} examples to {args.out}")
    else:
        for ex in examples:
            obj = {"id": ex.id, "text": ex.text, "label": ex.label,
                   "sector": ex.sector, "source": ex.source}
            sys.stdout.write(json.dumps(obj, ensure_ascii=False) + "\n")
    return EXIT_OK


def _add_common(parser, *, data=False, model=False, seed=True, fmt=False, out=True):
    parser.add_argument("--lexicon", help="lexicon directory "
                        "(default: $QID_LEXICON, then the bundled lexicon)")
    if data:
        parser.add_argument("--data", required=True, help="dataset file (JSONL or CSV)")
    if model:
        parser.add_argument("--model", required=True, help="model file path")
    if seed:
        parser.add_argument("--seed", type=int, default=42)
    if fmt:
        parser.add_argument("--format", choices=("text", "json", "csv"),
                            default="text")
    if out:
        parser.add_argument("--out", help="write output to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arqid",
        description="Classify Arabic social-media text as question-seeking or not.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_train = sub.add_parser("train", help="train one classifier and save the model")
    _add_common(p_train, data=True, model=True, out=False)
    p_train.add_argument("--classifier", choices=[k.value for k in ClassifierKind],
                         default="logreg")
    p_train.add_argument("--features", choices=("baseline", "all"), default="all")
    p_train.add_argument("--holdout", action="store_true",
                         help="train on a stratified 80%% split and report "
                              "metrics on the remaining 20%%")
    p_train.add_argument("--hp", action="append", metavar="KEY=VALUE",
                         help="hyperparameter override, repeatable")
    p_train.set_defaults(func=cmd_train)

    p_eval = sub.add_parser("eval", help="score a model on a labeled dataset")
    _add_common(p_eval, data=True, model=True, seed=False, fmt=True)
    p_eval.set_defaults(func=cmd_eval)

    p_ablate = sub.add_parser(
        "ablate", help="train all five classifiers with and without the "
                       "sentiment features and print the paired table")
    _add_common(p_ablate, data=True, fmt=True)
    p_ablate.add_argument("--figure", help="also render a bar chart to this image file")
    p_ablate.set_defaults(func=cmd_ablate)

    p_classify = sub.add_parser("classify",
                                help="label one text or a stream of stdin lines")
    _add_common(p_classify, model=True, seed=False, fmt=True)
    p_classify.add_argument("text", nargs="?", default=None,
                            help="text to classify (reads stdin lines when omitted)")
    p_classify.set_defaults(func=cmd_classify)

    p_synth = sub.add_parser("synth", help="generate a synthetic labeled corpus")
    _add_common(p_synth)
    p_synth.add_argument("n", type=int, help="number of examples (>= 10)")
    p_synth.set_defaults(func=cmd_synth)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
