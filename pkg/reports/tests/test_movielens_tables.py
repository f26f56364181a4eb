"""Film tables against the full MovieLens 100k ratings (``python manage.py fetch_movielens``)."""

import pytest

from fuzzysets.sets import Normalization
from metrics.measures import measure_distance
from metrics.params import Measure, MeasureParams
from movielens.dataset import film_fuzzy_set
from reports.reproduction import FILM_PAIRS, FILMS

pytestmark = pytest.mark.movielens

PEAK_VALUES = {
    Measure.RR: (1.194, 2.775, 1.974),
    Measure.CR: (1.399, 3.270, 2.097),
}
PROPORTION_VALUES = {
    Measure.CR_NONNORMAL: (1.431, 3.261, 2.057),
    Measure.CRF: (0.904, 2.374, 2.348),
}


def films(dataset, mode):
    return {name: film_fuzzy_set(name, mode, dataset=dataset) for name in FILMS}


def test_dataset_has_every_rating(real_dataset, settings):
    assert len(real_dataset.records) == settings.MOVIELENS_EXPECTED_RECORDS


@pytest.mark.parametrize("measure", list(PEAK_VALUES))
def test_peak_normalised_films(real_dataset, measure):
    sets = films(real_dataset, Normalization.PEAK)
    check_pairs(sets, measure, PEAK_VALUES[measure])


@pytest.mark.parametrize("measure", list(PROPORTION_VALUES))
def test_proportion_scaled_films(real_dataset, measure):
    sets = films(real_dataset, Normalization.PROPORTION)
    check_pairs(sets, measure, PROPORTION_VALUES[measure])


def check_pairs(sets, measure, expected):
    params = MeasureParams()
    forward = [measure_distance(measure, sets[a], sets[b], params).value for a, b in FILM_PAIRS[:3]]
    backward = [measure_distance(measure, sets[a], sets[b], params).value for a, b in FILM_PAIRS[3:]]
    assert forward == pytest.approx(expected, abs=0.05)
    assert backward == [-value for value in forward]
    if measure in (Measure.RR, Measure.CR):
        unsigned = MeasureParams(signed=False)
        values = [measure_distance(measure, sets[a], sets[b], unsigned).value for a, b in FILM_PAIRS[:3]]
        assert values == pytest.approx(expected, abs=0.05)
