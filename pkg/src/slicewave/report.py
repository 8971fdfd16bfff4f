"""Machine-readable run reports: typed records, JSON and CSV emission.

JSON output uses stable insertion order so identical runs are
byte-identical apart from the runtime fields; CSV uses the fixed header
`suite,check,anchor,value,threshold,pass,runtime_ms` with '.' decimals.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from pathlib import Path

__all__ = ["CheckRecord", "Report", "emit", "report_from_json", "KNOWN_ANCHORS"]

# registry of statement slugs; every theorem-suite record must carry one
# of these (or "plumbing" for harness-internal checks)
KNOWN_ANCHORS = frozenset(
    {
        "plumbing",
        "blade-relations",
        "blade-associativity",
        "frame-relations",
        "paravector-inverse",
        "frame-decomposition",
        "splitting-lemma",
        "splitting-pythagorean",
        "representation-formula",
        "even-odd-pair",
        "slice-extension",
        "intrinsic-decomposition",
        "intrinsic-bound",
        "cauchy-riemann-system",
        "transform-definition",
        "transform-inversion",
        "plancherel",
        "hausdorff-young",
        "left-module-order",
        "spectrum-conjugation",
        "hardy-spectral-support",
        "hardy-synthesis",
        "hardy-poisson-route",
        "hardy-kernel-reproduction",
        "cauchy-kernel",
        "poisson-kernel",
        "spectrum-slice-invariance",
        "bandlimit-synthesis",
        "bandlimit-growth-bound",
        "bandlimit-kernel-reproduction",
        "bergman-synthesis",
        "bergman-forward-norm",
        "bergman-converse-norm",
        "bergman-density-shift",
        "bergman-pointwise-bound",
        "hardy-norm-definition",
        "bergman-norm-definition",
    }
)


@dataclass(frozen=True)
class CheckRecord:
    """One verified statement: measured value against its threshold."""

    suite: str
    check: str
    anchor: str
    value: float
    threshold: float
    passed: bool
    runtime_ms: float = 0.0

    def __post_init__(self) -> None:
        if self.anchor not in KNOWN_ANCHORS:
            raise ValueError(f"unregistered anchor {self.anchor!r} on check {self.check!r}")


@dataclass
class Report:
    """All records from one run plus the configuration echo."""

    meta: dict = field(default_factory=dict)
    records: list[CheckRecord] = field(default_factory=list)

    @property
    def passed_count(self) -> int:
        return sum(1 for r in self.records if r.passed)

    @property
    def failed_count(self) -> int:
        return sum(1 for r in self.records if not r.passed)

    @property
    def all_passed(self) -> bool:
        return self.failed_count == 0

    def summary(self) -> dict:
        return {
            "total": len(self.records),
            "passed": self.passed_count,
            "failed": self.failed_count,
        }

    def to_json(self) -> str:
        doc = {
            "meta": self.meta,
            "summary": self.summary(),
            "records": [
                {
                    "suite": r.suite,
                    "check": r.check,
                    "anchor": r.anchor,
                    "value": r.value,
                    "threshold": r.threshold,
                    "pass": r.passed,
                    "runtime_ms": r.runtime_ms,
                }
                for r in self.records
            ],
        }
        return json.dumps(doc, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["suite", "check", "anchor", "value", "threshold", "pass", "runtime_ms"])
        for r in self.records:
            writer.writerow(
                [
                    r.suite,
                    r.check,
                    r.anchor,
                    repr(float(r.value)),
                    repr(float(r.threshold)),
                    "true" if r.passed else "false",
                    repr(float(r.runtime_ms)),
                ]
            )
        return buf.getvalue()


def emit(report: Report, fmt: str, path: str | Path) -> None:
    """Write the report in `fmt` ('json' or 'csv') to `path`."""
    if fmt == "json":
        text = report.to_json()
    elif fmt == "csv":
        text = report.to_csv()
    else:
        raise ValueError(f"unknown report format {fmt!r}")
    Path(path).write_text(text)


def report_from_json(path: str | Path) -> Report:
    """Round-trip reader for emitted JSON reports."""
    doc = json.loads(Path(path).read_text())
    records = [
        CheckRecord(
            suite=r["suite"],
            check=r["check"],
            anchor=r["anchor"],
            value=float(r["value"]),
            threshold=float(r["threshold"]),
            passed=bool(r["pass"]),
            runtime_ms=float(r["runtime_ms"]),
        )
        for r in doc.get("records", [])
    ]
    return Report(meta=doc.get("meta", {}), records=records)
