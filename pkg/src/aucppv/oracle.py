"""Exhaustive arrangement oracle and envelope certification.

For small class sizes every arrangement of k1 positives among n = k1 + k2
positions can be enumerated and its AUC computed as an exact rational. The
per-hit-level extremes then certify the closed-form envelopes by exact
equality, with no floating point anywhere in the comparison.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .envelopes import ClassRatio, auc_max_exact, auc_min_exact
from .errors import CertificationFailure, InstanceTooLarge

__all__ = [
    "DEFAULT_LIMIT",
    "HitLevelStats",
    "ArrangementStats",
    "CertificationEntry",
    "CertificationReport",
    "enumerate_arrangements",
    "certify_envelopes",
]

#: Largest n = k1 + k2 enumerated by default; C(16, 8) = 12870 arrangements.
DEFAULT_LIMIT = 16


@dataclass(frozen=True)
class HitLevelStats:
    """Extremes over arrangements with a fixed hit count at the cut."""

    hits: int
    count: int
    min_auc: Fraction
    max_auc: Fraction


@dataclass(frozen=True)
class ArrangementStats:
    """Exact per-hit-level AUC extremes over all C(n, k1) arrangements."""

    ratio: ClassRatio
    per_hits: Mapping[int, HitLevelStats]
    min_auc: Fraction
    max_auc: Fraction
    arrangements: int


def enumerate_arrangements(ratio: ClassRatio, limit: int = DEFAULT_LIMIT) -> ArrangementStats:
    """Enumerate every placement of the positives and tally exact AUCs.

    Arrangements are generated in lexicographic order of the positive
    positions. For each, the correctly ordered pair count is summed directly
    and the AUC kept as the exact rational pairs / (k1*k2); extremes are
    tracked per hit level (positives inside the top k1) and globally.
    Raises InstanceTooLarge when n exceeds ``limit``.
    """

    n = ratio.n
    if n > limit:
        raise InstanceTooLarge(f"n = {n} exceeds the enumeration limit {limit}")
    k1, k2 = ratio.k1, ratio.k2
    total = k1 * k2
    per_level: dict[int, list] = {}
    count = 0
    for positions in itertools.combinations(range(n), k1):
        # Position p (0-based) has n-1-p records after it, of which the
        # positives beyond index j account for k1-1-j; the rest are negatives.
        pairs = sum(
            (n - 1 - p) - (k1 - 1 - j) for j, p in enumerate(positions)
        )
        hits = sum(1 for p in positions if p < k1)
        auc = Fraction(pairs, total)
        entry = per_level.get(hits)
        if entry is None:
            per_level[hits] = [1, auc, auc]
        else:
            entry[0] += 1
            if auc < entry[1]:
                entry[1] = auc
            if auc > entry[2]:
                entry[2] = auc
        count += 1
    per_hits = {
        hits: HitLevelStats(hits=hits, count=c, min_auc=lo, max_auc=hi)
        for hits, (c, lo, hi) in sorted(per_level.items())
    }
    return ArrangementStats(
        ratio=ratio,
        per_hits=per_hits,
        min_auc=min(stats.min_auc for stats in per_hits.values()),
        max_auc=max(stats.max_auc for stats in per_hits.values()),
        arrangements=count,
    )


@dataclass(frozen=True)
class CertificationEntry:
    """One hit level's closed-form vs enumerated extremes, compared exactly."""

    hits: int
    expected_min: Fraction
    actual_min: Fraction
    expected_max: Fraction
    actual_max: Fraction

    @property
    def ok(self) -> bool:
        return self.expected_min == self.actual_min and self.expected_max == self.actual_max


@dataclass(frozen=True)
class CertificationReport:
    """Per-hit-level certification outcomes for one ratio."""

    ratio: ClassRatio
    entries: tuple[CertificationEntry, ...]
    arrangements: int

    @property
    def ok(self) -> bool:
        return all(entry.ok for entry in self.entries)


def certify_envelopes(ratio: ClassRatio, limit: int = DEFAULT_LIMIT) -> CertificationReport:
    """Prove the closed-form envelopes tight for one ratio by enumeration.

    For every feasible hit level the enumerated min/max AUC must equal the
    closed forms as exact rationals. Returns the full report on success and
    raises CertificationFailure (carrying the first mismatching level and the
    report) otherwise.
    """

    stats = enumerate_arrangements(ratio, limit)
    entries = tuple(
        CertificationEntry(
            hits=hits,
            expected_min=auc_min_exact(hits, ratio),
            actual_min=level.min_auc,
            expected_max=auc_max_exact(hits, ratio),
            actual_max=level.max_auc,
        )
        for hits, level in stats.per_hits.items()
    )
    report = CertificationReport(ratio=ratio, entries=entries, arrangements=stats.arrangements)
    if not report.ok:
        first = next(entry for entry in report.entries if not entry.ok)
        raise CertificationFailure(
            f"envelope mismatch at ratio {ratio.k1}:{ratio.k2}, hits {first.hits}: "
            f"expected [{first.expected_min}, {first.expected_max}], "
            f"enumerated [{first.actual_min}, {first.actual_max}]",
            hits=first.hits,
            expected=(first.expected_min, first.expected_max),
            actual=(first.actual_min, first.actual_max),
            report=report,
        )
    return report
