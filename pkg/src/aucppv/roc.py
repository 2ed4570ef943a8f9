"""ROC curves and two independent AUC routes.

``auc_trapezoid`` integrates the ROC polygon; ``auc_pairwise`` counts
correctly ordered positive/negative pairs through a rank-sum in O(n) on the
already-sorted ranking, crediting ties with one half. The two agree to
floating-point accuracy on every ranking, which the test suite exploits as a
dual-route check. ``auc_pairwise_quadratic`` is the O(k1*k2) literal pair loop
kept as a reference oracle for tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateClasses
from .ranking import Ranking

__all__ = [
    "RocCurve",
    "AucResult",
    "roc_curve",
    "auc_trapezoid",
    "auc_pairwise",
    "auc_pairwise_quadratic",
]


@dataclass(frozen=True)
class RocCurve:
    """ROC polygon vertices as (fpr, sensitivity), both in [0, 1].

    Starts at (0, 0), ends at (1, 1), and both coordinates are non-decreasing
    along the sweep.
    """

    points: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        if not self.points:
            raise ValueError("a ROC curve needs at least one point")
        if self.points[0] != (0.0, 0.0) or self.points[-1] != (1.0, 1.0):
            raise ValueError("ROC curve must run from (0, 0) to (1, 1)")
        for (x0, y0), (x1, y1) in zip(self.points, self.points[1:]):
            if x1 < x0 or y1 < y0:
                raise ValueError("ROC coordinates must be non-decreasing")


@dataclass(frozen=True)
class AucResult:
    """AUC value with its pair-counting decomposition.

    ``correct_pairs`` counts positive/negative pairs ordered correctly, ties
    counted one half, so it can end in .5; ``total_pairs`` = k1 * k2 and
    ``value`` = correct_pairs / total_pairs.
    """

    value: float
    correct_pairs: float
    total_pairs: int


def _score_groups(ranking: Ranking):
    """Yield (start, end, positives) for runs of equal score, descending."""

    items = ranking.items
    n = len(items)
    start = 0
    while start < n:
        first = items[start]
        score = first.score
        positives = 1 if first.positive else 0
        end = start + 1
        while end < n:
            rec = items[end]
            if rec.score != score:
                break
            if rec.positive:
                positives += 1
            end += 1
        yield start, end, positives
        start = end


def _require_both_classes(ranking: Ranking) -> None:
    if ranking.k1 == 0 or ranking.k2 == 0:
        raise DegenerateClasses("ROC/AUC need at least one record of each class")


def roc_curve(ranking: Ranking) -> RocCurve:
    """Sweep the cut from 0 to n, emitting a point after each tie group.

    Records with equal scores enter together, so the curve has one vertex per
    distinct score plus the (0, 0) anchor.
    """

    _require_both_classes(ranking)
    points = [(0.0, 0.0)]
    tp = 0
    fp = 0
    for start, end, positives in _score_groups(ranking):
        tp += positives
        fp += (end - start) - positives
        points.append((fp / ranking.k2, tp / ranking.k1))
    return RocCurve(tuple(points))


def auc_trapezoid(curve: RocCurve) -> float:
    """Area under the ROC polygon by the trapezoid rule."""

    terms = [
        (x1 - x0) * (y0 + y1) / 2.0
        for (x0, y0), (x1, y1) in zip(curve.points, curve.points[1:])
    ]
    return math.fsum(terms)


def auc_pairwise(ranking: Ranking) -> AucResult:
    """AUC as the fraction of correctly ordered positive/negative pairs.

    Computed as a rank sum over the tie groups of the sorted ranking, entirely
    in integer arithmetic (doubled midranks) with a single final division, so
    the result is the correctly rounded exact rational and is bit-for-bit
    invariant under the class swap.
    """

    _require_both_classes(ranking)
    n = ranking.n
    # Positives' ascending midranks, doubled to stay integral under ties.
    doubled_rank_sum = 0
    for start, end, positives in _score_groups(ranking):
        # Descending positions [start, end) hold ascending ranks
        # n-end+1 .. n-start, whose doubled midrank is 2n - start - end + 1.
        doubled_rank_sum += positives * (2 * n - start - end + 1)
    doubled_u = doubled_rank_sum - ranking.k1 * (ranking.k1 + 1)
    total = ranking.k1 * ranking.k2
    return AucResult(
        value=doubled_u / (2 * total),
        correct_pairs=doubled_u / 2.0,
        total_pairs=total,
    )


def auc_pairwise_quadratic(ranking: Ranking) -> AucResult:
    """Literal O(k1*k2) pair loop; reference oracle for auc_pairwise."""

    _require_both_classes(ranking)
    pos_scores = [rec.score for rec in ranking.items if rec.positive]
    neg_scores = [rec.score for rec in ranking.items if not rec.positive]
    doubled = 0
    for ps in pos_scores:
        for ns in neg_scores:
            if ps > ns:
                doubled += 2
            elif ps == ns:
                doubled += 1
    total = ranking.k1 * ranking.k2
    return AucResult(
        value=doubled / (2 * total),
        correct_pairs=doubled / 2.0,
        total_pairs=total,
    )
