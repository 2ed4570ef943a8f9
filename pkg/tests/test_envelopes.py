"""Closed-form AUC envelopes for fixed PPV and their inverse bounds."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from aucppv import (
    ClassRatio,
    EnvelopeCurve,
    InconsistentInput,
    NonIntegralHits,
    auc_max_exact,
    auc_max_given_ppvk,
    auc_min_exact,
    auc_min_given_ppvk,
    auc_pairwise,
    envelope_curve,
    normalize_ratio,
    ppv_base_rate,
    ppvk_max_given_auc,
    ppvk_min_given_auc,
)
from conftest import all_arrangements, exact_auc, random_ranking, ranking_from_pattern

GRRS_RATIO = ClassRatio(4262, 7515)
GRRS_AUC = 0.6909022561790231


def test_normalize_keeps_small_first_ratio():
    point = normalize_ratio(ClassRatio(3, 4), 2 / 3)
    assert point.ratio == ClassRatio(3, 4)
    assert point.hits == 2
    assert point.ppv == 2 / 3
    assert not point.swapped


def test_normalize_swaps_large_first_ratio():
    # 3 hits of 4 against 3 negatives: the reversed classifier has
    # 3 - (4 - 3) = 2 hits at cut 3.
    point = normalize_ratio(ClassRatio(4, 3), 3 / 4)
    assert point.ratio == ClassRatio(3, 4)
    assert point.hits == 2
    assert point.ppv == 2 / 3
    assert point.swapped


def test_normalize_symmetric_identity():
    point = normalize_ratio(ClassRatio(5, 5), 3 / 5)
    assert point.ratio == ClassRatio(5, 5)
    assert point.ppv == 3 / 5
    assert not point.swapped


def test_normalize_rejects_non_integral_hits():
    with pytest.raises(NonIntegralHits):
        normalize_ratio(ClassRatio(3, 4), 0.5)
    with pytest.raises(NonIntegralHits):
        normalize_ratio(ClassRatio(3, 4), 1.5)


def test_normalize_rejects_infeasible_swap():
    # 0 hits of 4 cannot happen with a single negative.
    with pytest.raises(InconsistentInput):
        normalize_ratio(ClassRatio(4, 1), 0.0)


def test_ratio_validation():
    with pytest.raises(ValueError):
        ClassRatio(0, 3)
    with pytest.raises(ValueError):
        ClassRatio(3, -1)


def test_auc_max_examples():
    # The headline extreme: PPV 0 at ratio 1:4 still allows AUC 0.75.
    assert auc_max_given_ppvk(0.0, ClassRatio(1, 4)) == 0.75
    assert auc_max_given_ppvk(1.0, ClassRatio(3, 4)) == 1.0
    assert auc_max_given_ppvk(1.0, ClassRatio(7, 2)) == 1.0
    assert auc_max_given_ppvk(0.5, ClassRatio(2, 2)) == 0.75


def test_auc_min_examples():
    assert auc_min_given_ppvk(0.0, ClassRatio(1, 4)) == 0.0
    assert auc_min_given_ppvk(0.0, ClassRatio(2, 9)) == 0.0
    assert auc_min_given_ppvk(0.5, ClassRatio(2, 2)) == 0.25
    assert auc_min_given_ppvk(2 / 3, ClassRatio(3, 4)) == 0.5


def test_exact_variants_match_formulas():
    for k1, k2 in [(1, 4), (2, 2), (3, 4), (5, 9)]:
        ratio = ClassRatio(k1, k2)
        for hits in range(k1 + 1):
            a = Fraction(hits, k1)
            expected_max = 1 - Fraction(k1, k2) * (1 - a) ** 2
            expected_min = a * (1 - Fraction(k1, k2) * (1 - a))
            assert auc_max_exact(hits, ratio) == expected_max
            assert auc_min_exact(hits, ratio) == expected_min


def test_exact_variants_swap_ratio():
    # hits on a k1 > k2 ratio translate affinely onto the swapped grid.
    assert auc_max_exact(3, ClassRatio(4, 3)) == auc_max_exact(2, ClassRatio(3, 4))
    assert auc_min_exact(3, ClassRatio(4, 3)) == auc_min_exact(2, ClassRatio(3, 4))
    with pytest.raises(InconsistentInput):
        auc_min_exact(0, ClassRatio(4, 1))
    with pytest.raises(NonIntegralHits):
        auc_max_exact(5, ClassRatio(3, 4))


def test_envelopes_are_tight_small_ratios():
    # Brute force every arrangement for a handful of ratios and check that
    # the closed forms are attained, not just bounding.
    for k1, k2 in [(1, 1), (1, 4), (2, 3), (3, 4), (2, 2), (3, 3)]:
        ratio = ClassRatio(k1, k2)
        best: dict[int, Fraction] = {}
        worst: dict[int, Fraction] = {}
        for pattern in all_arrangements(k1, k2):
            ranking = ranking_from_pattern(pattern)
            hits = sum(1 for ch in pattern[:k1] if ch == "P")
            value = exact_auc(ranking)
            best[hits] = max(best.get(hits, Fraction(0)), value)
            worst[hits] = min(worst.get(hits, Fraction(1)), value)
        for hits in best:
            assert auc_max_exact(hits, ratio) == best[hits]
            assert auc_min_exact(hits, ratio) == worst[hits]


def test_ppvk_max_examples():
    assert ppvk_max_given_auc(1.0, ClassRatio(3, 4)).value == 1.0
    assert ppvk_max_given_auc(0.0, ClassRatio(1, 4)).value == 0.0
    grrs = ppvk_max_given_auc(GRRS_AUC, GRRS_RATIO)
    assert grrs.k == 4262
    assert grrs.hits == 3351
    assert grrs.value == pytest.approx(0.7862506, abs=1e-4)


def test_ppvk_min_examples():
    assert ppvk_min_given_auc(0.0, ClassRatio(3, 4)).value == 0.0
    # AUC 0.75 at ratio 1:4 is consistent with zero hits.
    assert ppvk_min_given_auc(0.75, ClassRatio(1, 4)).value == 0.0
    grrs = ppvk_min_given_auc(GRRS_AUC, GRRS_RATIO)
    assert grrs.k == 4262
    assert grrs.hits == 1115
    assert grrs.value == pytest.approx(0.2616143, abs=1e-4)


def test_ppvk_bounds_reject_bad_auc():
    with pytest.raises(InconsistentInput):
        ppvk_max_given_auc(1.5, ClassRatio(3, 4))
    with pytest.raises(InconsistentInput):
        ppvk_min_given_auc(-0.5, ClassRatio(3, 4))


def test_ppvk_bounds_bracket_every_arrangement():
    # For every arrangement, feeding its exact AUC back through the inverse
    # bounds must bracket its actual PPV level.
    for k1, k2 in [(1, 4), (2, 3), (3, 4), (3, 3)]:
        ratio = ClassRatio(k1, k2)
        for pattern in all_arrangements(k1, k2):
            ranking = ranking_from_pattern(pattern)
            auc = auc_pairwise(ranking).value
            ppv = ppv_base_rate(ranking).value
            low = ppvk_min_given_auc(auc, ratio)
            high = ppvk_max_given_auc(auc, ratio)
            assert low.value - 1e-12 <= ppv <= high.value + 1e-12


def test_ppvk_bounds_on_swapped_ratio():
    # A k1 > k2 ratio reports bounds on its own hit grid, shifted from the
    # normalized one by k1 - k2.
    normalized = ppvk_max_given_auc(0.6, ClassRatio(3, 4))
    swapped = ppvk_max_given_auc(0.6, ClassRatio(4, 3))
    assert swapped.k == 4
    assert swapped.hits == normalized.hits + 1
    low = ppvk_min_given_auc(0.6, ClassRatio(4, 3))
    assert low.hits == ppvk_min_given_auc(0.6, ClassRatio(3, 4)).hits + 1


def test_roundtrip_inequalities():
    for k1, k2 in [(1, 4), (2, 3), (3, 4), (4, 4), (5, 11)]:
        ratio = ClassRatio(k1, k2)
        for hits in range(k1 + 1):
            a = hits / k1
            back_max = ppvk_max_given_auc(auc_min_given_ppvk(a, ratio), ratio)
            assert back_max.value >= a - 1e-12
            back_min = ppvk_min_given_auc(auc_max_given_ppvk(a, ratio), ratio)
            assert back_min.value <= a + 1e-12


def test_envelope_curve_symmetric_two():
    curve = envelope_curve(ClassRatio(2, 2))
    assert curve.ratio == ClassRatio(2, 2)
    assert not curve.swapped
    assert curve.samples == (
        (0.0, 0.0, 0.0),
        (0.5, 0.25, 0.75),
        (1.0, 1.0, 1.0),
    )


def test_envelope_curve_headline_gap():
    curve = envelope_curve(ClassRatio(1, 4))
    a0 = curve.samples[0]
    assert a0 == (0.0, 0.0, 0.75)
    a1 = curve.samples[-1]
    assert a1 == (1.0, 1.0, 1.0)


def test_envelope_curve_normalizes_swapped_ratio():
    curve = envelope_curve(ClassRatio(4, 3))
    assert curve.ratio == ClassRatio(3, 4)
    assert curve.swapped
    assert len(curve.samples) == 4


def test_envelope_curve_monotone_and_bounded():
    for k1, k2 in [(1, 1), (1, 9), (4, 7), (6, 6), (9, 2)]:
        curve = envelope_curve(ClassRatio(k1, k2))
        prev_lo, prev_hi = -1.0, -1.0
        for a, lo, hi in curve.samples:
            assert 0.0 <= lo <= hi <= 1.0
            assert lo <= a + 1e-15
            assert lo >= prev_lo
            assert hi >= prev_hi
            prev_lo, prev_hi = lo, hi


def test_envelope_curve_validation():
    with pytest.raises(ValueError):
        EnvelopeCurve(ratio=ClassRatio(2, 2), samples=((0.0, 0.0, 0.0),))
    with pytest.raises(ValueError):
        EnvelopeCurve(
            ratio=ClassRatio(1, 1),
            samples=((0.0, 0.5, 0.25), (1.0, 1.0, 1.0)),
        )


def test_symmetric_closed_forms():
    # Equal classes: auc_max = 2a - a^2 and auc_min = a^2.
    for k1 in (1, 2, 5, 17, 50):
        ratio = ClassRatio(k1, k1)
        for i in range(k1 + 1):
            a = i / k1
            assert auc_max_given_ppvk(a, ratio) == pytest.approx(2 * a - a * a, abs=1e-12)
            assert auc_min_given_ppvk(a, ratio) == pytest.approx(a * a, abs=1e-12)


def test_symmetric_gap_formula():
    # The symmetric-class envelope gap is 2a - 2a^2, peaking at 1/2 for a = 1/2.
    for k1 in (2, 3, 10, 25):
        curve = envelope_curve(ClassRatio(k1, k1))
        for a, lo, hi in curve.samples:
            assert hi - lo == pytest.approx(2 * a - 2 * a * a, abs=1e-12)


def test_sandwich_exhaustive_small():
    for n in range(2, 13):
        for k1 in range(1, n):
            ratio = ClassRatio(k1, n - k1)
            for pattern in all_arrangements(k1, n - k1):
                ranking = ranking_from_pattern(pattern)
                auc = auc_pairwise(ranking).value
                ppv = ppv_base_rate(ranking).value
                assert auc_min_given_ppvk(ppv, ratio) - 1e-12 <= auc
                assert auc <= auc_max_given_ppvk(ppv, ratio) + 1e-12


def test_sandwich_random_large():
    rng = random.Random(43)
    for _ in range(200):
        ranking = random_ranking(rng, rng.randint(2, 800), with_ties=False)
        ratio = ClassRatio(ranking.k1, ranking.k2)
        auc = auc_pairwise(ranking).value
        ppv = ppv_base_rate(ranking).value
        assert auc_min_given_ppvk(ppv, ratio) - 1e-12 <= auc
        assert auc <= auc_max_given_ppvk(ppv, ratio) + 1e-12


def test_sandwich_with_ties_uses_expected_hits():
    # Deterministic hits under ties can step outside the envelopes, but the
    # hypergeometric expected hit count stays inside them: auc_min is convex
    # and auc_max concave in a, so averaging over boundary-tie orderings can
    # only move the pair inward.
    from aucppv import expected_hits_at_k

    rng = random.Random(47)
    for _ in range(100):
        ranking = random_ranking(rng, rng.randint(2, 200), with_ties=True)
        k1, k2 = ranking.k1, ranking.k2
        if k1 > k2:
            continue
        auc = auc_pairwise(ranking).value
        a = Fraction(expected_hits_at_k(ranking, k1)).limit_denominator(10**9) / k1
        lo = a * (1 - Fraction(k1, k2) * (1 - a))
        hi = 1 - Fraction(k1, k2) * (1 - a) ** 2
        assert float(lo) - 1e-9 <= auc <= float(hi) + 1e-9


def test_monotonicity_in_hits():
    for k1, k2 in [(3, 4), (5, 5), (2, 9)]:
        ratio = ClassRatio(k1, k2)
        for hits in range(k1):
            assert auc_max_exact(hits, ratio) < auc_max_exact(hits + 1, ratio)
            assert auc_min_exact(hits, ratio) < auc_min_exact(hits + 1, ratio)


def test_auc_min_never_exceeds_ppv():
    for k1 in range(1, 8):
        for k2 in range(k1, 9):
            ratio = ClassRatio(k1, k2)
            for hits in range(k1 + 1):
                assert auc_min_exact(hits, ratio) <= Fraction(hits, k1)
