"""Figure rendering for run reports.

Renders static summaries of a report next to the JSON/CSV output: a
per-suite pass/fail bar chart and a per-check headroom chart showing how
far each measured value sits from its threshold.  Uses the Agg backend so
rendering works headless.
"""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .report import Report

__all__ = ["render_report_figures"]

PASS_COLOR = "#2a7e43"
FAIL_COLOR = "#b0413e"


def _suite_summary_figure(report: Report, path: Path) -> None:
    suites: dict[str, list[int]] = {}
    for r in report.records:
        bucket = suites.setdefault(r.suite, [0, 0])
        bucket[0 if r.passed else 1] += 1
    names = list(suites)
    passed = [suites[s][0] for s in names]
    failed = [suites[s][1] for s in names]
    fig, ax = plt.subplots(figsize=(7, 3.2))
    xs = np.arange(len(names))
    ax.bar(xs, passed, width=0.6, color=PASS_COLOR, label="pass")
    ax.bar(xs, failed, width=0.6, bottom=passed, color=FAIL_COLOR, label="fail")
    ax.set_xticks(xs)
    ax.set_xticklabels(names, rotation=20, ha="right")
    ax.set_ylabel("checks")
    ax.set_title("suite results")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=130)
    plt.close(fig)


def _headroom_figure(report: Report, path: Path) -> None:
    """log10 of value/threshold per check; below 0 means headroom."""
    labels, ratios, colors = [], [], []
    for r in report.records:
        if r.threshold <= 0 or r.value <= 0:
            continue
        labels.append(f"{r.suite}:{r.check}")
        ratios.append(math.log10(r.value / r.threshold))
        colors.append(PASS_COLOR if r.passed else FAIL_COLOR)
    if not labels:
        return
    fig, ax = plt.subplots(figsize=(8, 0.24 * len(labels) + 1.6))
    ys = np.arange(len(labels))
    ax.barh(ys, ratios, color=colors, height=0.6)
    ax.axvline(0.0, color="black", lw=0.8)
    ax.set_yticks(ys)
    ax.set_yticklabels(labels, fontsize=6)
    ax.invert_yaxis()
    ax.set_xlabel("log10(measured / threshold)")
    ax.set_title("check headroom (negative = margin in hand)")
    fig.tight_layout()
    fig.savefig(path, dpi=130)
    plt.close(fig)


def render_report_figures(report: Report, outdir: str | Path) -> list[Path]:
    """Write the report figures into `outdir`; returns the created paths."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    created = []
    p1 = outdir / "suite_summary.png"
    _suite_summary_figure(report, p1)
    created.append(p1)
    p2 = outdir / "check_headroom.png"
    _headroom_figure(report, p2)
    if p2.exists():
        created.append(p2)
    return created
