"""Evaluation reports: one ranking's metrics, AUC, PPV, and envelope context.

The report builder runs a sandwich self-check before anything is emitted:
the observed AUC must lie inside the envelope at the observed PPV, and the
observed PPV inside the feasible interval at the observed AUC. A violation is
an InternalConsistencyError (a toolkit bug), never a data error.

All numeric output is formatted to 10 significant digits with a stable field
order, so a report is byte-deterministic for fixed input and flags.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import metrics as m
from .envelopes import (
    ClassRatio,
    auc_max_given_ppvk,
    auc_min_given_ppvk,
    ppvk_max_given_auc,
    ppvk_min_given_auc,
)
from .errors import AucppvError, InternalConsistencyError
from .ingest import DecileReport, LoadSummary
from .ppv import PpvResult, ppv_base_rate
from .ranking import Ranking
from .roc import AucResult, auc_pairwise

__all__ = ["EvaluationReport", "build_report", "format_report", "format_number"]

#: Absolute slack for the float-level sandwich self-check.
SANDWICH_TOLERANCE = 1e-12

#: Metric table rows, in emission order.
METRIC_ORDER = (
    "accuracy",
    "error_rate",
    "prevalence",
    "sensitivity",
    "specificity",
    "false_positive_rate",
    "precision",
    "recall",
    "f1",
)


def format_number(value: float) -> str:
    """Fixed formatting for report output: 10 significant digits."""

    return f"{value:.10g}"


@dataclass(frozen=True)
class EvaluationReport:
    """Everything the evaluate/report commands print for one ranking."""

    label: str
    n: int
    k1: int
    k2: int
    base_rate: float
    auc: AucResult
    ppv: PpvResult
    ppv_min: PpvResult
    ppv_max: PpvResult
    auc_min: float
    auc_max: float
    metric_table: dict[str, float | None]
    decile: DecileReport | None = None
    load_summary: LoadSummary | None = None

    @property
    def gap(self) -> float:
        """How far the AUC sits above the base-rate-cut PPV."""
        return self.auc.value - self.ppv.value


def _metric_table(ranking: Ranking) -> dict[str, float | None]:
    """Scalar metrics at the base-rate cut; undefined ones become None."""

    counts = m.confusion_at_cut(ranking, ranking.k1)
    table: dict[str, float | None] = {}
    calculators = {
        "accuracy": lambda: m.accuracy(counts),
        "error_rate": lambda: m.error_rate(counts),
        "prevalence": lambda: m.prevalence(counts),
        "sensitivity": lambda: m.sensitivity(counts),
        "specificity": lambda: m.specificity(counts),
        "false_positive_rate": lambda: m.false_positive_rate(counts),
        "precision": lambda: m.precision(counts),
        "recall": lambda: m.recall(counts),
        "f1": lambda: m.f1_score(counts),
    }
    for name in METRIC_ORDER:
        try:
            table[name] = calculators[name]()
        except AucppvError:
            table[name] = None
    return table


def build_report(
    ranking: Ranking,
    *,
    label: str = "evaluation",
    decile: DecileReport | None = None,
    load_summary: LoadSummary | None = None,
) -> EvaluationReport:
    """Assemble a report and run the sandwich self-check.

    Requires both classes non-empty (AUC and the base-rate cut need them).
    """

    auc = auc_pairwise(ranking)
    ppv = ppv_base_rate(ranking)
    ratio = ClassRatio(ranking.k1, ranking.k2)
    lo = auc_min_given_ppvk(ppv.value, ratio)
    hi = auc_max_given_ppvk(ppv.value, ratio)
    ppv_lo = ppvk_min_given_auc(auc.value, ratio)
    ppv_hi = ppvk_max_given_auc(auc.value, ratio)
    if not lo - SANDWICH_TOLERANCE <= auc.value <= hi + SANDWICH_TOLERANCE:
        raise InternalConsistencyError(
            f"sandwich violated: AUC {auc.value!r} outside [{lo!r}, {hi!r}] "
            f"at PPV {ppv.value!r} for ratio {ranking.k1}:{ranking.k2}"
        )
    if not ppv_lo.value - SANDWICH_TOLERANCE <= ppv.value <= ppv_hi.value + SANDWICH_TOLERANCE:
        raise InternalConsistencyError(
            f"sandwich violated: PPV {ppv.value!r} outside "
            f"[{ppv_lo.value!r}, {ppv_hi.value!r}] at AUC {auc.value!r} "
            f"for ratio {ranking.k1}:{ranking.k2}"
        )
    return EvaluationReport(
        label=label,
        n=ranking.n,
        k1=ranking.k1,
        k2=ranking.k2,
        base_rate=ranking.k1 / ranking.n,
        auc=auc,
        ppv=ppv,
        ppv_min=ppv_lo,
        ppv_max=ppv_hi,
        auc_min=lo,
        auc_max=hi,
        metric_table=_metric_table(ranking),
        decile=decile,
        load_summary=load_summary,
    )


def _report_payload(report: EvaluationReport) -> dict:
    """The report as a JSON-ready dict with rounded floats."""

    def num(value: float) -> float:
        return float(format_number(value))

    payload: dict = {
        "label": report.label,
        "n": report.n,
        "k1": report.k1,
        "k2": report.k2,
        "base_rate": num(report.base_rate),
        "auc": {
            "value": num(report.auc.value),
            "correct_pairs": report.auc.correct_pairs,
            "total_pairs": report.auc.total_pairs,
        },
        "ppv_k": {
            "value": num(report.ppv.value),
            "hits": report.ppv.hits,
            "k": report.ppv.k,
        },
        "gap": num(report.gap),
        "envelope_at_auc": {
            "ppv_min": num(report.ppv_min.value),
            "ppv_min_hits": report.ppv_min.hits,
            "ppv_max": num(report.ppv_max.value),
            "ppv_max_hits": report.ppv_max.hits,
        },
        "envelope_at_ppv": {
            "auc_min": num(report.auc_min),
            "auc_max": num(report.auc_max),
        },
        "metrics": {
            name: (None if value is None else num(value))
            for name, value in report.metric_table.items()
        },
    }
    if report.decile is not None:
        payload["deciles"] = {
            "per_decile": [
                {
                    "decile": row.decile,
                    "total": row.total,
                    "positives": row.positives,
                    "rate": None if row.rate is None else num(row.rate),
                }
                for row in report.decile.per_decile
            ],
            "buckets": {
                name: {
                    "deciles": list(bucket.deciles),
                    "total": bucket.total,
                    "positives": bucket.positives,
                    "rate": None if bucket.rate is None else num(bucket.rate),
                }
                for name, bucket in (
                    ("low", report.decile.low),
                    ("medium", report.decile.medium),
                    ("high", report.decile.high),
                )
            },
        }
    if report.load_summary is not None:
        payload["load_summary"] = {
            "path": report.load_summary.path,
            "scale": report.load_summary.scale.value,
            "rows_read": report.load_summary.rows_read,
            "rows_kept": report.load_summary.rows_kept,
            "dropped": dict(sorted(report.load_summary.dropped.items())),
        }
    return payload


def _format_table(report: EvaluationReport) -> str:
    lines = [
        f"== {report.label} ==",
        f"records              {report.n}",
        f"positives (k1)       {report.k1}",
        f"negatives (k2)       {report.k2}",
        f"base rate            {format_number(report.base_rate)}",
        f"auc                  {format_number(report.auc.value)}",
        f"  correct pairs      {format_number(report.auc.correct_pairs)}",
        f"  total pairs        {report.auc.total_pairs}",
        f"ppv_k (k = {report.ppv.k})".ljust(21)
        + f"{format_number(report.ppv.value)}",
        f"  hits               {report.ppv.hits}",
        f"auc - ppv_k gap      {format_number(report.gap)}",
        "feasible ppv at this auc   "
        f"[{format_number(report.ppv_min.value)}, {format_number(report.ppv_max.value)}]",
        "feasible auc at this ppv   "
        f"[{format_number(report.auc_min)}, {format_number(report.auc_max)}]",
        "",
        "metrics at the base-rate cut",
    ]
    for name in METRIC_ORDER:
        value = report.metric_table[name]
        rendered = "n/a" if value is None else format_number(value)
        lines.append(f"  {name:<21}{rendered}")
    if report.decile is not None:
        lines.append("")
        lines.append("decile  total  positives  rate")
        for row in report.decile.per_decile:
            rate = "n/a" if row.rate is None else format_number(row.rate)
            lines.append(f"{row.decile:>6}  {row.total:>5}  {row.positives:>9}  {rate}")
        lines.append("bucket   deciles  total  positives  rate")
        for name, bucket in (
            ("low", report.decile.low),
            ("medium", report.decile.medium),
            ("high", report.decile.high),
        ):
            rate = "n/a" if bucket.rate is None else format_number(bucket.rate)
            span = f"{bucket.deciles[0]}-{bucket.deciles[-1]}"
            lines.append(
                f"{name:<8} {span:>7}  {bucket.total:>5}  {bucket.positives:>9}  {rate}"
            )
    if report.load_summary is not None:
        lines.append("")
        summary = report.load_summary
        lines.append(
            f"loaded {summary.rows_kept} of {summary.rows_read} rows from {summary.path}"
        )
        for reason, count in sorted(summary.dropped.items()):
            lines.append(f"  dropped ({reason}): {count}")
    return "\n".join(lines) + "\n"


def _flatten(payload: dict, prefix: str = "") -> list[tuple[str, str]]:
    pairs: list[tuple[str, str]] = []
    for key, value in payload.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            pairs.extend(_flatten(value, f"{name}."))
        elif isinstance(value, list):
            for index, element in enumerate(value):
                if isinstance(element, dict):
                    pairs.extend(_flatten(element, f"{name}[{index}]."))
                else:
                    pairs.append((f"{name}[{index}]", _render(element)))
        else:
            pairs.append((name, _render(value)))
    return pairs


def _render(value) -> str:
    if value is None:
        return "n/a"
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return format_number(value)
    return str(value)


def format_report(report: EvaluationReport, fmt: str = "table") -> str:
    """Render a report as ``table``, ``json``, or ``tsv``."""

    if fmt == "table":
        return _format_table(report)
    payload = _report_payload(report)
    if fmt == "json":
        return json.dumps(payload, indent=2, sort_keys=False) + "\n"
    if fmt == "tsv":
        lines = [f"{key}\t{value}" for key, value in _flatten(payload)]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
