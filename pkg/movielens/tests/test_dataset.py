import pytest

from conftest import MINI_RATING_COUNT
from fuzzysets.sets import alpha_cut, height, is_convex, membership_at
from movielens.dataset import MovieLensDataset, Source, film_fuzzy_set, match_title, stored_histogram
from movielens.exceptions import DatasetMissing, FilmNotFound, IngestError, UnknownItem
from movielens.models import Film

TITLES = ["Star Wars (1977)", "Super Mario Bros. (1993)", "Mars Attacks! (1996)"]


@pytest.mark.parametrize(
    "name, title",
    [
        ("SW", "Star Wars (1977)"),
        ("Mars Attacks! (1996)", "Mars Attacks! (1996)"),
        ("Super Mario Bros.", "Super Mario Bros. (1993)"),
    ],
)
def test_match_title(name, title):
    assert match_title(name, TITLES) == title


def test_unknown_title_suggests_near_matches():
    with pytest.raises(FilmNotFound) as excinfo:
        match_title("Star Wars (1978)", TITLES)
    assert "Star Wars (1977)" in excinfo.value.near_matches
    assert "did you mean" in str(excinfo.value)


def test_dataset_parses_both_files(mini_dataset):
    assert mini_dataset.exists()
    assert len(mini_dataset.records) == MINI_RATING_COUNT
    assert mini_dataset.titles[3] == "Star Wars (1977)"
    assert mini_dataset.histogram("SMB").counts == {1: 10, 2: 7, 3: 6, 4: 3, 5: 0}


def test_histogram_totals_account_for_every_rating(mini_dataset):
    histograms = mini_dataset.histograms
    assert sum(histogram.total for histogram in histograms.values()) == len(mini_dataset.records)
    assert sorted(histograms) == [1, 2, 3, 4]


def test_two_humped_film_is_not_convex(mini_dataset):
    film = film_fuzzy_set("ADGH2", "peak", dataset=mini_dataset)
    assert not is_convex(film)
    cut = alpha_cut(film, 0.4)
    assert [(s.l, s.r) for s in cut] == [pytest.approx((1.0, 1.6)), pytest.approx((2.6, 4 + 0.6 / 0.875))]
    assert len(alpha_cut(film, 0.7)) == 1


def test_unrated_film(mini_dataset):
    with pytest.raises(UnknownItem):
        mini_dataset.histogram("Unrated Film")


def test_missing_dataset_names_the_fetch_command(tmp_path):
    dataset = MovieLensDataset(tmp_path / "nowhere")
    assert not dataset.exists()
    with pytest.raises(DatasetMissing) as excinfo:
        dataset.records
    assert "fetch_movielens" in str(excinfo.value)


def test_dataset_defaults_to_setting(settings, movielens_dir):
    settings.MOVIELENS_DIR = movielens_dir
    assert MovieLensDataset().directory == movielens_dir


def test_film_fuzzy_set_keeps_requested_name(mini_dataset):
    smb = film_fuzzy_set("SMB", "proportion", dataset=mini_dataset)
    assert smb.label == "SMB"
    assert membership_at(smb, 1) == pytest.approx(10 / 26)
    sw = film_fuzzy_set("Star Wars", "peak", dataset=mini_dataset)
    assert height(sw) == 1.0
    assert membership_at(sw, 4) == pytest.approx(176 / 325)


@pytest.mark.django_db
def test_stored_histogram_needs_loaded_films():
    with pytest.raises(IngestError):
        stored_histogram("SMB")


@pytest.mark.django_db
def test_film_from_database(mini_dataset):
    histogram = mini_dataset.histogram("MA")
    Film.from_histogram(histogram).save()
    stored = film_fuzzy_set("MA", "proportion", source=Source.DB)
    from_files = film_fuzzy_set("MA", "proportion", dataset=mini_dataset)
    assert stored == from_files
    assert Film.objects.get().total == 217
