"""Shared fixtures and independent test-side oracles.

The exact-rational AUC counter here is written from the pairwise
definition alone, deliberately independent of the library internals,
so it can certify the production implementations.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from aucppv import Ranking, ScoredRecord, TiePolicy, build_ranking

# The seven-element worked example: positives at ranks 1, 3 and 7.
# Correctly ordered pairs: 4 + 3 + 0 = 7 of 3*4 = 12, so AUC = 7/12,
# and the top-3 cut captures 2 of 3 positives (PPV_3 = 2/3).
WORKED_EXAMPLE = "PNPNNNP"


def ranking_from_pattern(pattern: str, scores=None, tie_policy=TiePolicy.BY_ID_ASCENDING) -> Ranking:
    """Build a ranking whose descending-score order spells out ``pattern``."""
    n = len(pattern)
    if scores is None:
        scores = [float(n - i) for i in range(n)]
    records = [
        ScoredRecord(id=f"r{i:04d}", score=scores[i], positive=ch == "P")
        for i, ch in enumerate(pattern)
    ]
    return build_ranking(records, tie_policy=tie_policy)


def pattern_of(ranking: Ranking) -> str:
    return "".join("P" if rec.positive else "N" for rec in ranking.items)


def exact_auc(ranking: Ranking) -> Fraction:
    """Exact-rational pairwise AUC, straight from the definition."""
    positives = [(rec.score, i) for i, rec in enumerate(ranking.items) if rec.positive]
    negatives = [(rec.score, i) for i, rec in enumerate(ranking.items) if not rec.positive]
    if not positives or not negatives:
        raise ValueError("need both classes")
    doubled = 0
    for p_score, _ in positives:
        for n_score, _ in negatives:
            if p_score > n_score:
                doubled += 2
            elif p_score == n_score:
                doubled += 1
    return Fraction(doubled, 2 * len(positives) * len(negatives))


def exact_hits(ranking: Ranking, k: int) -> int:
    return sum(1 for rec in ranking.items[:k] if rec.positive)


def all_arrangements(k1: int, k2: int):
    """Yield every P/N pattern with k1 positives and k2 negatives."""
    n = k1 + k2
    for pos in itertools.combinations(range(n), k1):
        yield "".join("P" if i in pos else "N" for i in range(n))


# Shared id pool so bulk generation does not re-format millions of ids.
_ID_POOL = [f"x{i:05d}" for i in range(5000)]


def random_ranking(rng: random.Random, n: int, with_ties: bool) -> Ranking:
    """Random labeled ranking with at least one record of each class."""
    if n < 2:
        raise ValueError("need n >= 2")
    k1 = rng.randint(1, n - 1)
    labels = [True] * k1 + [False] * (n - k1)
    rng.shuffle(labels)
    if with_ties:
        # Coarse integer scores force heavy tie groups.
        levels = rng.randint(1, max(2, n // 3))
        scores = [float(v) for v in rng.choices(range(levels + 1), k=n)]
    else:
        scores = [float(v) for v in range(n)]
        rng.shuffle(scores)
    ids = _ID_POOL if n <= len(_ID_POOL) else [f"x{i:05d}" for i in range(n)]
    records = [
        ScoredRecord(id=ids[i], score=scores[i], positive=labels[i])
        for i in range(n)
    ]
    return build_ranking(records)


@pytest.fixture
def worked_example() -> Ranking:
    return ranking_from_pattern(WORKED_EXAMPLE)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260818)
