"""Scored, labeled records and the rankings a classifier induces on them.

A classifier is modeled extensionally: a finite set of records, each with a
real-valued score and a binary ground-truth label, sorted by descending score.
Every downstream quantity (confusion counts, ROC, AUC, PPV at a cut) is a
function of that sorted sequence alone.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable

from .errors import DuplicateId, EmptyInput, NonFiniteScore

__all__ = [
    "TiePolicy",
    "ScoredRecord",
    "Ranking",
    "build_ranking",
    "reverse_classifier",
]


class TiePolicy(enum.Enum):
    """How records with equal scores are totally ordered.

    BY_ID_ASCENDING breaks score ties by ascending id, which makes a ranking a
    deterministic function of its record set. GIVEN preserves the order in
    which the records were supplied (stable sort on score only); it is also
    used for rankings whose order is inherited, e.g. from reversal.
    """

    BY_ID_ASCENDING = "by-id-ascending"
    GIVEN = "given"


@dataclass(frozen=True)
class ScoredRecord:
    """One record: unique id, finite real score, binary label.

    ``positive`` is True for the positive class (the outcome the classifier
    tries to place on top, e.g. reoffended within two years).
    """

    id: str
    score: float
    positive: bool

    def __post_init__(self) -> None:
        if not self.id:
            raise EmptyInput("record id must be a non-empty string")
        if not math.isfinite(self.score):
            raise NonFiniteScore(f"record {self.id!r} has non-finite score {self.score!r}")


@dataclass(frozen=True)
class Ranking:
    """Records sorted by descending score under a fixed tie policy.

    k1 counts positive records, k2 negative ones; k1 + k2 = n. The class
    counts are stored rather than recomputed so that a Ranking is cheap to
    interrogate after construction.
    """

    items: tuple[ScoredRecord, ...]
    k1: int
    k2: int
    tie_policy: TiePolicy

    def __post_init__(self) -> None:
        if not self.items:
            raise EmptyInput("a ranking needs at least one record")
        if self.k1 + self.k2 != len(self.items):
            raise ValueError("class counts do not sum to the number of records")
        if self.k1 != sum(1 for rec in self.items if rec.positive):
            raise ValueError("k1 does not match the number of positive records")
        for earlier, later in zip(self.items, self.items[1:]):
            if earlier.score < later.score:
                raise ValueError("ranking is not sorted by descending score")

    @property
    def n(self) -> int:
        return len(self.items)


def build_ranking(
    records: Iterable[ScoredRecord],
    tie_policy: TiePolicy = TiePolicy.BY_ID_ASCENDING,
) -> Ranking:
    """Sort records by descending score into a Ranking.

    Raises EmptyInput for an empty iterable and DuplicateId when two records
    share an id. Scores were already validated finite by ScoredRecord.
    """

    items = list(records)
    if not items:
        raise EmptyInput("cannot rank an empty record set")
    seen: set[str] = set()
    for rec in items:
        if rec.id in seen:
            raise DuplicateId(f"duplicate record id {rec.id!r}")
        seen.add(rec.id)
    if tie_policy is TiePolicy.BY_ID_ASCENDING:
        items.sort(key=lambda rec: (-rec.score, rec.id))
    else:
        # Stable sort on score alone preserves the supplied order inside ties.
        items.sort(key=lambda rec: -rec.score)
    k1 = sum(1 for rec in items if rec.positive)
    return Ranking(tuple(items), k1, len(items) - k1, tie_policy)


def reverse_classifier(ranking: Ranking) -> Ranking:
    """The classifier with reversed order and swapped class roles.

    Scores are negated (an exact involution for floats), the sequence is
    reversed, and each label is flipped, so the old negatives become the new
    positives. Applying this twice returns the original ranking. The result
    carries TiePolicy.GIVEN because reversal inverts the id order inside tie
    groups.
    """

    flipped = tuple(
        ScoredRecord(rec.id, -rec.score, not rec.positive)
        for rec in reversed(ranking.items)
    )
    return Ranking(flipped, ranking.k2, ranking.k1, TiePolicy.GIVEN)
