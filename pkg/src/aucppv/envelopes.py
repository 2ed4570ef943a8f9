"""Extremal envelopes relating AUC and PPV at the base-rate cut.

Fix the class sizes k1 (positives) and k2 (negatives) and the hit count
h = PPV_k * k1. Over all arrangements with exactly h positives in the top k1,
the largest AUC is attained by packing the remaining positives directly below
the cut and the misplaced negatives directly above the bottom, and the
smallest by the mirror arrangement. With a = h/k1 and k1 <= k2 the extremes
have closed forms:

    auc_max(a) = 1 - (k1/k2) * (1 - a)^2
    auc_min(a) = a * (1 - (k1/k2) * (1 - a))

Ratios with k1 > k2 are reduced to this case through the class swap, which
leaves AUC unchanged and maps hit counts affinely (``normalize_ratio``).

The inverse direction is a grid scan: given an observed AUC value b, the
feasible hit counts are bracketed by the smallest h whose auc_min reaches b
and the largest h whose auc_max stays below b. Those are the outer grid
neighbours of the continuous roots, so the reported interval always contains
every PPV_k attainable at AUC = b; all comparisons are exact rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InconsistentInput, NonIntegralHits
from .ppv import INTEGRALITY_TOLERANCE, PpvResult

__all__ = [
    "ClassRatio",
    "NormalizedPpv",
    "EnvelopeCurve",
    "normalize_ratio",
    "auc_max_given_ppvk",
    "auc_min_given_ppvk",
    "auc_max_exact",
    "auc_min_exact",
    "ppvk_max_given_auc",
    "ppvk_min_given_auc",
    "envelope_curve",
]

#: Absolute slack used when comparing float AUC values against exact grid values.
AUC_TOLERANCE = Fraction(1, 10**12)


@dataclass(frozen=True)
class ClassRatio:
    """Class sizes k1 (positives) and k2 (negatives), both at least 1."""

    k1: int
    k2: int

    def __post_init__(self) -> None:
        if self.k1 < 1 or self.k2 < 1:
            raise ValueError("class sizes must be at least 1")

    @property
    def n(self) -> int:
        return self.k1 + self.k2

    @property
    def normalized(self) -> "ClassRatio":
        """The ratio with the smaller class first (k1 <= k2)."""
        if self.k1 <= self.k2:
            return self
        return ClassRatio(self.k2, self.k1)


@dataclass(frozen=True)
class NormalizedPpv:
    """A (ratio, ppv) point rewritten so that k1 <= k2.

    ``swapped`` records whether the class swap was applied; when it was, the
    ppv refers to the reversed classifier's base-rate cut.
    """

    ratio: ClassRatio
    ppv: float
    hits: int
    swapped: bool


def _hits_from_ppv_strict(ppv: float, k1: int) -> int:
    """Like ppv.hits_from_ppv but raising NonIntegralHits, the envelope-side error."""

    scaled = ppv * k1
    hits = round(scaled)
    if abs(scaled - hits) > INTEGRALITY_TOLERANCE:
        raise NonIntegralHits(f"ppv {ppv!r} at base-rate cut {k1} is not an integral hit count")
    if not 0 <= hits <= k1:
        raise NonIntegralHits(f"ppv {ppv!r} lies outside [0, 1] at cut {k1}")
    return hits


def normalize_ratio(ratio: ClassRatio, ppv: float) -> NormalizedPpv:
    """Rewrite a (ratio, PPV_k) point with the smaller class first.

    For k1 <= k2 the point is returned unchanged. Otherwise the class swap is
    applied: hits h at cut k1 become h - (k1 - k2) hits at cut k2. Raises
    NonIntegralHits when ppv*k1 is not an integer and InconsistentInput when
    the swapped hit count is infeasible (fewer than k1 - k2 hits cannot occur
    when only k2 negatives exist).
    """

    hits = _hits_from_ppv_strict(ppv, ratio.k1)
    if ratio.k1 <= ratio.k2:
        return NormalizedPpv(ratio, ppv, hits, swapped=False)
    swapped_hits = hits - (ratio.k1 - ratio.k2)
    if swapped_hits < 0:
        raise InconsistentInput(
            f"{hits} hits at cut {ratio.k1} is infeasible with only {ratio.k2} negatives"
        )
    swapped = ClassRatio(ratio.k2, ratio.k1)
    return NormalizedPpv(swapped, swapped_hits / swapped.k1, swapped_hits, swapped=True)


def _auc_max_fraction(hits: int, k1: int, k2: int) -> Fraction:
    """Exact auc_max at a = hits/k1 for a normalized ratio (k1 <= k2)."""

    miss = Fraction(k1 - hits, k1)
    return 1 - Fraction(k1, k2) * miss * miss


def _auc_min_fraction(hits: int, k1: int, k2: int) -> Fraction:
    """Exact auc_min at a = hits/k1 for a normalized ratio (k1 <= k2)."""

    a = Fraction(hits, k1)
    return a * (1 - Fraction(k1, k2) * (1 - a))


def _normalized_hits(hits: int, ratio: ClassRatio) -> tuple[int, ClassRatio]:
    """Map a hit count into the normalized ratio's grid."""

    if not 0 <= hits <= ratio.k1:
        raise NonIntegralHits(f"hits {hits} outside [0, {ratio.k1}]")
    norm = ratio.normalized
    if ratio.k1 <= ratio.k2:
        return hits, norm
    swapped_hits = hits - (ratio.k1 - ratio.k2)
    if swapped_hits < 0:
        raise InconsistentInput(
            f"{hits} hits at cut {ratio.k1} is infeasible with only {ratio.k2} negatives"
        )
    return swapped_hits, norm


def auc_max_exact(hits: int, ratio: ClassRatio) -> Fraction:
    """Exact rational auc_max for an integer hit count; any ratio."""

    h, norm = _normalized_hits(hits, ratio)
    return _auc_max_fraction(h, norm.k1, norm.k2)


def auc_min_exact(hits: int, ratio: ClassRatio) -> Fraction:
    """Exact rational auc_min for an integer hit count; any ratio."""

    h, norm = _normalized_hits(hits, ratio)
    return _auc_min_fraction(h, norm.k1, norm.k2)


def auc_max_given_ppvk(ppv: float, ratio: ClassRatio) -> float:
    """Largest AUC any arrangement with PPV_k = ppv can reach."""

    point = normalize_ratio(ratio, ppv)
    return float(_auc_max_fraction(point.hits, point.ratio.k1, point.ratio.k2))


def auc_min_given_ppvk(ppv: float, ratio: ClassRatio) -> float:
    """Smallest AUC any arrangement with PPV_k = ppv can reach."""

    point = normalize_ratio(ratio, ppv)
    return float(_auc_min_fraction(point.hits, point.ratio.k1, point.ratio.k2))


def _check_auc(auc: float) -> Fraction:
    if not -1e-12 <= auc <= 1 + 1e-12:
        raise InconsistentInput(f"auc {auc!r} outside [0, 1]")
    return Fraction(auc)


def _denormalize_hits(hits: int, ratio: ClassRatio) -> PpvResult:
    """Map a hit count from the normalized grid back to the original ratio."""

    if ratio.k1 > ratio.k2:
        hits = hits + (ratio.k1 - ratio.k2)
    return PpvResult(k=ratio.k1, hits=hits, value=hits / ratio.k1)


def ppvk_max_given_auc(auc: float, ratio: ClassRatio) -> PpvResult:
    """Largest base-rate-cut PPV compatible with the observed AUC.

    Returns the smallest grid value a = h/k1 whose auc_min reaches the
    observed value, i.e. the outer grid neighbour of the continuous root of
    auc_min(a) = auc, so no arrangement with this AUC can exceed it. The scan
    compares exact rationals; AUC_TOLERANCE absorbs float formation error in
    the input.
    """

    b = _check_auc(auc)
    norm = ratio.normalized
    threshold = b - AUC_TOLERANCE
    # auc_min is strictly increasing in hits, so bisect for the first level
    # at or above the threshold; hits = k1 always qualifies (auc_min = 1).
    lo, hi = 0, norm.k1
    while lo < hi:
        mid = (lo + hi) // 2
        if _auc_min_fraction(mid, norm.k1, norm.k2) >= threshold:
            hi = mid
        else:
            lo = mid + 1
    return _denormalize_hits(lo, ratio)


def ppvk_min_given_auc(auc: float, ratio: ClassRatio) -> PpvResult:
    """Smallest base-rate-cut PPV compatible with the observed AUC.

    Returns the largest grid value a = h/k1 whose auc_max stays at or below
    the observed value (0 when there is none): the outer grid neighbour of
    the continuous root of auc_max(a) = auc, so no arrangement with this AUC
    can fall below it.
    """

    b = _check_auc(auc)
    norm = ratio.normalized
    threshold = b + AUC_TOLERANCE
    if _auc_max_fraction(0, norm.k1, norm.k2) > threshold:
        return _denormalize_hits(0, ratio)
    # auc_max is strictly increasing in hits; bisect for the last level at or
    # below the threshold.
    lo, hi = 0, norm.k1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if _auc_max_fraction(mid, norm.k1, norm.k2) <= threshold:
            lo = mid
        else:
            hi = mid - 1
    return _denormalize_hits(lo, ratio)


@dataclass(frozen=True)
class EnvelopeCurve:
    """Envelope samples over the full hit grid of a normalized ratio.

    ``samples`` holds (a, auc_min, auc_max) for a = i/k1, i = 0..k1. The
    ratio stored is the normalized one; ``swapped`` records whether the
    requested ratio had to be swapped to reach it.
    """

    ratio: ClassRatio
    samples: tuple[tuple[float, float, float], ...]
    swapped: bool = False

    def __post_init__(self) -> None:
        if len(self.samples) != self.ratio.k1 + 1:
            raise ValueError("expected one sample per hit level 0..k1")
        for a, lo, hi in self.samples:
            if not (0.0 <= lo <= hi <= 1.0):
                raise ValueError("envelope samples must satisfy 0 <= min <= max <= 1")
            if lo > a:
                raise ValueError("auc_min can never exceed its PPV value")


def envelope_curve(ratio: ClassRatio) -> EnvelopeCurve:
    """Tabulate both envelopes over every hit level of the normalized ratio.

    Ratios with k1 > k2 are swapped first (AUC is swap-invariant and hit
    counts below k1 - k2 would be infeasible un-swapped), so the grid always
    has min(k1, k2) + 1 points.
    """

    norm = ratio.normalized
    samples = tuple(
        (
            i / norm.k1,
            float(_auc_min_fraction(i, norm.k1, norm.k2)),
            float(_auc_max_fraction(i, norm.k1, norm.k2)),
        )
        for i in range(norm.k1 + 1)
    )
    return EnvelopeCurve(ratio=norm, samples=samples, swapped=ratio.k1 > ratio.k2)
