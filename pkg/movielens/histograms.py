"""Per-film rating histograms and their fuzzification."""

from dataclasses import dataclass, field
from typing import Mapping

import pandas as pd

from fuzzysets.exceptions import DegenerateSet
from fuzzysets.sets import FuzzySet, Normalization, peak_normalize, proportion_scale

from .exceptions import UnknownItem
from .parsers import RATING_VALUES


@dataclass(frozen=True)
class RatingHistogram:
    item_id: int
    title: str
    counts: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        unknown = set(self.counts) - set(RATING_VALUES)
        if unknown:
            raise ValueError(f"ratings {sorted(unknown)} are outside 1..5 in histogram for item {self.item_id}")
        # every rating value is listed, unrated ones with a zero count
        counts = {rating: int(self.counts.get(rating, 0)) for rating in RATING_VALUES}
        if any(count < 0 for count in counts.values()):
            raise ValueError(f"negative count in histogram for item {self.item_id}")
        object.__setattr__(self, "counts", counts)

    @property
    def total(self):
        return sum(self.counts.values())


def _rating_table(ratings: pd.DataFrame) -> pd.DataFrame:
    """One row per rated item, one column per rating value."""
    table = pd.crosstab(ratings["item_id"], ratings["rating"])
    return table.reindex(columns=list(RATING_VALUES), fill_value=0).sort_index()


def _row_counts(row: pd.Series) -> dict[int, int]:
    return {int(rating): int(count) for rating, count in row.items()}


def build_histogram(ratings: pd.DataFrame, item_id: int, title: str) -> RatingHistogram:
    counts = ratings.loc[ratings["item_id"] == item_id, "rating"].value_counts()
    if counts.empty:
        raise UnknownItem(f"no ratings for item {item_id} ({title!r})")
    return RatingHistogram(item_id, title, _row_counts(counts))


def build_histograms(ratings: pd.DataFrame, titles: Mapping[int, str]) -> dict[int, RatingHistogram]:
    """Histograms for every rated item, ordered by item id."""
    if ratings.empty:
        return {}
    return {
        int(item_id): RatingHistogram(int(item_id), titles.get(int(item_id), f"item {item_id}"), _row_counts(row))
        for item_id, row in _rating_table(ratings).iterrows()
    }


def fuzzify(histogram: RatingHistogram, mode) -> FuzzySet:
    """Fuzzy set over ratings 1..5, scaled by the peak count or by the total."""
    mode = Normalization(mode)
    if histogram.total <= 0:
        raise DegenerateSet(f"{histogram.title or 'histogram'} has no ratings")
    if mode == Normalization.PROPORTION:
        return proportion_scale(histogram)
    if mode == Normalization.PEAK:
        raw = FuzzySet.from_pairs(
            ((rating, count / histogram.total) for rating, count in histogram.counts.items()),
            histogram.title,
        )
        return peak_normalize(raw)
    raise ValueError(f"films are fuzzified by peak or proportion, not {mode!r}")
