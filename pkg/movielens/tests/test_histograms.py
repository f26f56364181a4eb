import math

import pandas as pd
import pytest

from fuzzysets.exceptions import DegenerateSet
from fuzzysets.sets import alpha_cut, height, membership_at
from movielens.exceptions import UnknownItem
from movielens.histograms import RatingHistogram, build_histogram, build_histograms, fuzzify
from movielens.parsers import RATING_COLUMNS

RECORDS = pd.DataFrame(
    [[1, 10, 5, 0], [2, 10, 5, 0], [3, 10, 2, 0], [1, 11, 1, 0]],
    columns=RATING_COLUMNS,
)


def test_histogram_lists_every_rating_value():
    histogram = build_histogram(RECORDS, 10, "Ten")
    assert histogram.counts == {1: 0, 2: 1, 3: 0, 4: 0, 5: 2}
    assert histogram.total == 3


def test_histogram_of_unrated_item():
    with pytest.raises(UnknownItem):
        build_histogram(RECORDS, 12, "Twelve")


def test_build_histograms_in_one_pass():
    histograms = build_histograms(RECORDS, {10: "Ten"})
    assert list(histograms) == [10, 11]
    assert histograms[10].title == "Ten"
    assert histograms[11].title == "item 11"
    assert histograms[11].total == 1


def test_proportion_fuzzification():
    fuzzy_set = fuzzify(build_histogram(RECORDS, 10, "Ten"), "proportion")
    assert list(fuzzy_set.xs) == [1.0, 2.0, 3.0, 4.0, 5.0]
    assert membership_at(fuzzy_set, 5) == pytest.approx(2 / 3)
    assert membership_at(fuzzy_set, 2) == pytest.approx(1 / 3)
    assert fuzzy_set.label == "Ten"


def test_peak_fuzzification():
    fuzzy_set = fuzzify(build_histogram(RECORDS, 10, "Ten"), "peak")
    assert height(fuzzy_set) == 1.0
    assert membership_at(fuzzy_set, 2) == pytest.approx(0.5)


def test_fuzzify_rejects_empty_histogram_and_raw_mode():
    with pytest.raises(DegenerateSet):
        fuzzify(RatingHistogram(9, "Nine", {}), "peak")
    with pytest.raises(ValueError):
        fuzzify(build_histogram(RECORDS, 10, "Ten"), "none")


def test_negative_counts_rejected():
    with pytest.raises(ValueError):
        RatingHistogram(9, "Nine", {3: -1})


def test_unknown_rating_keys_rejected():
    with pytest.raises(ValueError):
        RatingHistogram(9, "Nine", {3: 2, 6: 1})
    with pytest.raises(ValueError):
        RatingHistogram(9, "Nine", {0: 1})


def test_histograms_agree_with_single_item_builds():
    histograms = build_histograms(RECORDS, {})
    for item_id, histogram in histograms.items():
        assert histogram == build_histogram(RECORDS, item_id, histogram.title)


def test_empty_ratings_have_no_histograms():
    assert build_histograms(RECORDS.iloc[0:0], {}) == {}


@pytest.mark.parametrize("counts", [{2: 1, 5: 2}, {1: 10, 2: 7, 3: 6, 4: 3}, {1: 9, 2: 16, 3: 57, 4: 176, 5: 325}])
def test_proportion_memberships_sum_to_one(counts):
    fuzzy_set = fuzzify(RatingHistogram(1, "Film", counts), "proportion")
    assert math.fsum(fuzzy_set.mus) == pytest.approx(1.0, abs=1e-9)


@pytest.mark.parametrize("counts", [(9, 16, 57, 176, 325), (5, 2, 4, 8, 1), (30, 50, 70, 50, 17)])
def test_peak_cuts_are_scaled_proportion_cuts(counts):
    histogram = RatingHistogram(1, "Film", dict(zip(range(1, 6), counts)))
    peak, proportion = fuzzify(histogram, "peak"), fuzzify(histogram, "proportion")
    for level in [0.07 + 0.1 * i for i in range(10)]:
        peak_cut = alpha_cut(peak, level)
        proportion_cut = alpha_cut(proportion, level * height(proportion))
        assert len(peak_cut) == len(proportion_cut)
        for ours, theirs in zip(peak_cut, proportion_cut):
            assert (ours.l, ours.r) == pytest.approx((theirs.l, theirs.r), abs=1e-9)
