"""Positive predictive value at a positional cut, base-rate cut included.

PPV_k is precision when the top k records are predicted positive. The cut of
primary interest is k = k1 (as many predicted positives as there are actual
positives), where PPV_k, sensitivity, and F1 all coincide. ``ppv_swap``
translates PPV at the base-rate cut between a classifier and its reverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CutOutOfRange, EmptyPositiveClass, InconsistentInput
from .ranking import Ranking

__all__ = [
    "PpvResult",
    "ppv_at_k",
    "ppv_base_rate",
    "hits_from_ppv",
    "ppv_swap",
    "expected_hits_at_k",
]

#: Absolute slack when checking that a PPV times its cut is an integer.
INTEGRALITY_TOLERANCE = 1e-9


@dataclass(frozen=True)
class PpvResult:
    """PPV at cut k: ``hits`` positives among the top k, value = hits / k."""

    k: int
    hits: int
    value: float

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("cut k must be at least 1")
        if not 0 <= self.hits <= self.k:
            raise ValueError("hits must lie in [0, k]")


def ppv_at_k(ranking: Ranking, k: int) -> PpvResult:
    """Count positives among the top k records; k in 1..n."""

    if not 1 <= k <= ranking.n:
        raise CutOutOfRange(f"cut {k} outside [1, {ranking.n}]")
    hits = sum(1 for rec in ranking.items[:k] if rec.positive)
    return PpvResult(k=k, hits=hits, value=hits / k)


def ppv_base_rate(ranking: Ranking) -> PpvResult:
    """PPV at the base-rate cut k = k1."""

    if ranking.k1 == 0:
        raise EmptyPositiveClass("base-rate cut needs a non-empty positive class")
    return ppv_at_k(ranking, ranking.k1)


def hits_from_ppv(ppv: float, k: int) -> int:
    """Recover the integer hit count behind a PPV value at cut k.

    Raises InconsistentInput when ppv*k is not an integer within
    INTEGRALITY_TOLERANCE or falls outside [0, k].
    """

    if k < 1:
        raise ValueError("cut k must be at least 1")
    scaled = ppv * k
    hits = round(scaled)
    if abs(scaled - hits) > INTEGRALITY_TOLERANCE:
        raise InconsistentInput(f"ppv {ppv!r} at cut {k} is not an integral hit count")
    if not 0 <= hits <= k:
        raise InconsistentInput(f"ppv {ppv!r} at cut {k} implies hits outside [0, {k}]")
    return hits


def ppv_swap(ppv_k1: float, k1: int, k2: int) -> float:
    """PPV of the reversed classifier at its base-rate cut k2.

    With h hits among the top k1, the bottom k2 records hold k2 - (k1 - h)
    negatives, so PPV_k2 = 1 - (k1/k2) * (1 - PPV_k1). Computed in integer
    arithmetic with one final division; raises InconsistentInput when the
    inputs cannot describe any ranking (non-integral hits or a result outside
    [0, 1]).
    """

    if k1 < 1 or k2 < 1:
        raise ValueError("class sizes must be at least 1")
    hits = hits_from_ppv(ppv_k1, k1)
    swapped_hits = k2 - k1 + hits
    if not 0 <= swapped_hits <= k2:
        raise InconsistentInput(
            f"ppv {ppv_k1!r} with classes {k1}:{k2} leaves the swapped value outside [0, 1]"
        )
    return swapped_hits / k2


def expected_hits_at_k(ranking: Ranking, k: int) -> float:
    """Expected positives in the top k when the boundary tie group is shuffled.

    Deterministic tie policies fix which members of a tie group straddling the
    cut land inside it. This auxiliary mode averages over all orderings of
    that group instead: the members inside the cut are then a uniform sample
    without replacement, so the expectation is hypergeometric,
    positives_before + group_positives * slots / group_size. Away from a
    straddling tie it equals the deterministic hit count.
    """

    if not 1 <= k <= ranking.n:
        raise CutOutOfRange(f"cut {k} outside [1, {ranking.n}]")
    items = ranking.items
    boundary_score = items[k - 1].score
    start = k - 1
    while start > 0 and items[start - 1].score == boundary_score:
        start -= 1
    end = k
    while end < len(items) and items[end].score == boundary_score:
        end += 1
    hits_before = sum(1 for rec in items[:start] if rec.positive)
    group_positives = sum(1 for rec in items[start:end] if rec.positive)
    slots = k - start
    expected = hits_before + Fraction(group_positives * slots, end - start)
    return float(expected)
