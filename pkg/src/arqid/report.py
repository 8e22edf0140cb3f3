"""Rendering of evaluation reports and the before/after ablation table.

Every renderer returns a string so the CLI can send it to stdout or a file
unchanged. ``render_ablation_figure`` additionally draws a grouped bar chart
of positive-class F1 per classifier and writes it to an image file next to
the delimited output.
"""

from __future__ import annotations

import csv
import io
import json

from .evaluation import AblationCell, AblationTable, EvalReport

__all__ = [
    "format_eval_report",
    "format_ablation",
    "render_ablation_figure",
]

_METRICS = ("precision", "recall", "f1")


def _cell_values(cell: AblationCell) -> tuple[str, str, str]:
    if not cell.ok:
        return ("ERR", "ERR", "ERR")
    r = cell.report
    return (f"{r.precision_pos:.3f}", f"{r.recall_pos:.3f}", f"{r.f1_pos:.3f}")


def format_eval_report(report: EvalReport, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["tp", "fp", "fn", "tn", "precisionPos", "recallPos",
                         "f1Pos", "macroP", "macroR", "macroF"])
        writer.writerow([report.tp, report.fp, report.fn, report.tn,
                         f"{report.precision_pos:.6f}", f"{report.recall_pos:.6f}",
                         f"{report.f1_pos:.6f}", f"{report.macro_p:.6f}",
                         f"{report.macro_r:.6f}", f"{report.macro_f:.6f}"])
        return buf.getvalue()
    lines = [
        f"confusion      tp={report.tp} fp={report.fp} fn={report.fn} tn={report.tn}",
        f"positive class P={report.precision_pos:.4f} R={report.recall_pos:.4f} "
        f"F={report.f1_pos:.4f}",
        f"macro          P={report.macro_p:.4f} R={report.macro_r:.4f} "
        f"F={report.macro_f:.4f}",
    ]
    return "\n".join(lines) + "\n"


def _ablation_text(table: AblationTable) -> str:
    head = (f"{'classifier':<10}  {'P.before':>8} {'R.before':>8} {'F.before':>8}  "
            f"{'P.after':>8} {'R.after':>8} {'F.after':>8}")
    lines = [head]
    for kind, before, after in table.rows():
        b = _cell_values(before)
        a = _cell_values(after)
        lines.append(f"{kind.value:<10}  {b[0]:>8} {b[1]:>8} {b[2]:>8}  "
                     f"{a[0]:>8} {a[1]:>8} {a[2]:>8}")
    return "\n".join(lines) + "\n"


def _ablation_csv(table: AblationTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["classifier"]
                    + [f"{m}_before" for m in _METRICS]
                    + [f"{m}_after" for m in _METRICS])
    for kind, before, after in table.rows():
        writer.writerow([kind.value, *_cell_values(before), *_cell_values(after)])
    return buf.getvalue()


def _cell_dict(cell: AblationCell) -> dict:
    if not cell.ok:
        return {"error": cell.error}
    return cell.report.to_dict()


def _ablation_json(table: AblationTable) -> str:
    doc = {
        "seed": table.seed,
        "classifiers": {
            kind.value: {"before": _cell_dict(before), "after": _cell_dict(after)}
            for kind, before, after in table.rows()
        },
    }
    return json.dumps(doc, indent=2)


def format_ablation(table: AblationTable, fmt: str = "text") -> str:
    """Five classifier rows with before/after positive-class P, R and F."""
    if fmt == "json":
        return _ablation_json(table)
    if fmt == "csv":
        return _ablation_csv(table)
    return _ablation_text(table)


def render_ablation_figure(table: AblationTable, path: str) -> None:
    """Grouped bar chart of positive-class F1 before vs after, saved to ``path``."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    kinds = [kind.value for kind, _, _ in table.rows()]
    before = [cell.report.f1_pos if cell.ok else 0.0
              for _, cell, _ in table.rows()]
    after = [cell.report.f1_pos if cell.ok else 0.0
             for _, _, cell in table.rows()]

    x = range(len(kinds))
    width = 0.38
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.bar([i - width / 2 for i in x], before, width, label="baseline features",
           color="#9aa5b1")
    ax.bar([i + width / 2 for i in x], after, width, label="with sentiment features",
           color="#3e7cb1")
    ax.set_xticks(list(x))
    ax.set_xticklabels(kinds)
    ax.set_ylabel("positive-class F1")
    ax.set_ylim(0.0, 1.0)
    ax.set_title(f"Effect of sentiment features (seed {table.seed})")
    ax.legend(loc="lower right")
    for i, (b, a) in enumerate(zip(before, after)):
        ax.text(i - width / 2, b + 0.01, f"{b:.2f}", ha="center", fontsize=8)
        ax.text(i + width / 2, a + 0.01, f"{a:.2f}", ha="center", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
