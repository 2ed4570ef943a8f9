"""CSV ingestion for COMPAS-style score tables and decile summaries.

A usable row needs an id, a raw score, a decile in 1..10, and a binary
outcome. Rows with missing values are dropped (and counted per reason);
structurally bad values raise MalformedRow with the offending row number.
Duplicate ids keep the first occurrence. The loader reports everything it did
in a LoadSummary so filtering is auditable.
"""

from __future__ import annotations

import csv
import enum
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .errors import EmptyAfterFilter, MalformedRow, MissingColumn
from .ranking import Ranking, ScoredRecord, TiePolicy, build_ranking

__all__ = [
    "Scale",
    "ColumnMap",
    "CompasRow",
    "LoadSummary",
    "LoadResult",
    "DecileCount",
    "BucketStats",
    "DecileReport",
    "load_csv",
    "to_ranking",
    "decile_report",
    "LOW_DECILES",
    "MEDIUM_DECILES",
    "HIGH_DECILES",
]

#: Decile buckets used in risk communication: 1-4 low, 5-7 medium, 8-10 high.
LOW_DECILES = (1, 2, 3, 4)
MEDIUM_DECILES = (5, 6, 7)
HIGH_DECILES = (8, 9, 10)

#: Cell contents treated as missing data rather than malformed data.
MISSING_MARKERS = {"", "na", "n/a", "nan", "none", "null"}


class Scale(enum.Enum):
    """Which recidivism risk scale a score table belongs to."""

    GENERAL = "general"
    VIOLENT = "violent"


@dataclass(frozen=True)
class ColumnMap:
    """Names of the four required columns in the input CSV."""

    id: str = "person_id"
    score: str = "raw_score"
    decile: str = "decile"
    outcome: str = "outcome"

    def required(self) -> tuple[str, ...]:
        return (self.id, self.score, self.decile, self.outcome)


@dataclass(frozen=True)
class CompasRow:
    """One validated score-table row."""

    person_id: str
    raw_score: float
    decile: int
    outcome: bool
    scale: Scale

    def __post_init__(self) -> None:
        if not 1 <= self.decile <= 10:
            raise ValueError(f"decile {self.decile} outside [1, 10]")
        if not math.isfinite(self.raw_score):
            raise ValueError(f"raw score {self.raw_score!r} is not finite")


@dataclass
class LoadSummary:
    """What the loader read, kept, and dropped (by reason)."""

    path: str
    scale: Scale
    rows_read: int = 0
    rows_kept: int = 0
    dropped: dict[str, int] = field(default_factory=dict)

    def drop(self, reason: str) -> None:
        self.dropped[reason] = self.dropped.get(reason, 0) + 1

    @property
    def rows_dropped(self) -> int:
        return sum(self.dropped.values())


@dataclass
class LoadResult:
    rows: list[CompasRow]
    summary: LoadSummary


def _parse_outcome(raw: str) -> bool:
    if raw == "0":
        return False
    if raw == "1":
        return True
    raise ValueError(f"outcome must be 0 or 1, got {raw!r}")


def load_csv(
    path: str | Path,
    column_map: ColumnMap = ColumnMap(),
    scale: Scale = Scale.GENERAL,
    *,
    delimiter: str = ",",
    dedupe: bool = True,
    drop_missing: bool = True,
) -> LoadResult:
    """Read and validate a score table.

    Missing score/decile/outcome cells drop the row when ``drop_missing`` is
    set (the default) and are counted in the summary; with it unset they raise
    MalformedRow. Unparseable non-missing values always raise MalformedRow.
    Duplicate ids keep the first occurrence when ``dedupe`` is set, else raise.
    Raises MissingColumn if the header lacks a mapped column, FileNotFoundError
    for a missing file, and EmptyAfterFilter when nothing survives.
    """

    path = Path(path)
    summary = LoadSummary(path=str(path), scale=scale)
    rows: list[CompasRow] = []
    seen: set[str] = set()
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle, delimiter=delimiter)
        header = reader.fieldnames or []
        for column in column_map.required():
            if column not in header:
                raise MissingColumn(f"column {column!r} not in header {header}")
        for row_number, raw in enumerate(reader, start=2):
            summary.rows_read += 1
            person_id = (raw.get(column_map.id) or "").strip()
            score_text = (raw.get(column_map.score) or "").strip()
            decile_text = (raw.get(column_map.decile) or "").strip()
            outcome_text = (raw.get(column_map.outcome) or "").strip()
            if not person_id:
                if drop_missing:
                    summary.drop("missing id")
                    continue
                raise MalformedRow(row_number, "missing id")
            missing = None
            if score_text.lower() in MISSING_MARKERS:
                missing = "missing score"
            elif decile_text.lower() in MISSING_MARKERS:
                missing = "missing decile"
            elif outcome_text.lower() in MISSING_MARKERS:
                missing = "missing outcome"
            if missing is not None:
                if drop_missing:
                    summary.drop(missing)
                    continue
                raise MalformedRow(row_number, missing)
            try:
                score = float(score_text)
                if not math.isfinite(score):
                    raise ValueError(f"score {score_text!r} is not finite")
                decile = int(decile_text)
                if not 1 <= decile <= 10:
                    raise ValueError(f"decile {decile_text!r} outside [1, 10]")
                outcome = _parse_outcome(outcome_text)
            except ValueError as exc:
                raise MalformedRow(row_number, str(exc)) from exc
            if person_id in seen:
                if dedupe:
                    summary.drop("duplicate id")
                    continue
                raise MalformedRow(row_number, f"duplicate id {person_id!r}")
            seen.add(person_id)
            rows.append(CompasRow(person_id, score, decile, outcome, scale))
    if not rows:
        raise EmptyAfterFilter(f"no usable rows in {path}")
    summary.rows_kept = len(rows)
    return LoadResult(rows=rows, summary=summary)


def to_ranking(rows: Sequence[CompasRow]) -> Ranking:
    """Rank rows by descending raw score, ids breaking ties."""

    return build_ranking(
        (ScoredRecord(row.person_id, row.raw_score, row.outcome) for row in rows),
        TiePolicy.BY_ID_ASCENDING,
    )


@dataclass(frozen=True)
class DecileCount:
    decile: int
    total: int
    positives: int

    @property
    def rate(self) -> float | None:
        """Positive share in this decile; None when the decile is empty."""
        if self.total == 0:
            return None
        return self.positives / self.total


@dataclass(frozen=True)
class BucketStats:
    """A decile bucket's totals; rate is None for an empty bucket."""

    deciles: tuple[int, ...]
    total: int
    positives: int

    @property
    def rate(self) -> float | None:
        if self.total == 0:
            return None
        return self.positives / self.total


@dataclass(frozen=True)
class DecileReport:
    """Per-decile counts plus the low/medium/high bucket summaries."""

    scale: Scale
    per_decile: tuple[DecileCount, ...]
    low: BucketStats
    medium: BucketStats
    high: BucketStats


def _bucket(per_decile: dict[int, list[int]], deciles: tuple[int, ...]) -> BucketStats:
    total = sum(per_decile[d][0] for d in deciles)
    positives = sum(per_decile[d][1] for d in deciles)
    return BucketStats(deciles=deciles, total=total, positives=positives)


def decile_report(rows: Sequence[CompasRow], scale: Scale | None = None) -> DecileReport:
    """Tally outcomes per decile and per bucket.

    ``scale`` defaults to the scale of the supplied rows (which must agree).
    """

    if not rows:
        raise EmptyAfterFilter("decile report needs at least one row")
    scales = {row.scale for row in rows}
    if scale is None:
        if len(scales) != 1:
            raise ValueError("rows mix scales; pass the scale explicitly")
        scale = next(iter(scales))
    tally: dict[int, list[int]] = {d: [0, 0] for d in range(1, 11)}
    for row in rows:
        tally[row.decile][0] += 1
        if row.outcome:
            tally[row.decile][1] += 1
    per_decile = tuple(
        DecileCount(decile=d, total=tally[d][0], positives=tally[d][1]) for d in range(1, 11)
    )
    return DecileReport(
        scale=scale,
        per_decile=per_decile,
        low=_bucket(tally, LOW_DECILES),
        medium=_bucket(tally, MEDIUM_DECILES),
        high=_bucket(tally, HIGH_DECILES),
    )
