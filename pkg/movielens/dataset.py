"""
Locating MovieLens 100k on disk and resolving films by name.

Films are named by exact title, by title without its trailing ``(year)``,
or by one of the short aliases used in the experiments.
"""

import difflib
import logging
import re
from functools import cached_property
from pathlib import Path
from typing import Iterable

import pandas as pd
from django.conf import settings
from django.db import models

from fuzzysets.sets import FuzzySet

from .exceptions import DatasetMissing, FilmNotFound, IngestError, UnknownItem
from .histograms import RatingHistogram, build_histograms, fuzzify
from .models import Film
from .parsers import parse_ratings, parse_titles

logger = logging.getLogger(__name__)

FILM_ALIASES = {
    "SMB": "Super Mario Bros.",
    "MA": "Mars Attacks!",
    "SW": "Star Wars",
    "ADGH2": "All Dogs Go to Heaven 2",
}

YEAR_SUFFIX = re.compile(r"\s*\(\d{4}\)\s*$")


class Source(models.TextChoices):
    FILES = "files", "Files"
    DB = "db", "Database"


def match_title(name: str, titles: Iterable[str]) -> str:
    wanted = FILM_ALIASES.get(name, name)
    titles = sorted(set(titles))
    if wanted in titles:
        return wanted
    for title in titles:
        if YEAR_SUFFIX.sub("", title) == wanted:
            return title
    raise FilmNotFound(name, difflib.get_close_matches(wanted, titles, n=5, cutoff=0.5))


class MovieLensDataset:
    """Lazily parsed ``u.data`` / ``u.item`` pair from one extracted ml-100k folder."""

    def __init__(self, directory=None):
        self.directory = Path(directory or settings.MOVIELENS_DIR)

    @property
    def ratings_path(self):
        return self.directory / "u.data"

    @property
    def items_path(self):
        return self.directory / "u.item"

    def exists(self):
        return self.ratings_path.is_file() and self.items_path.is_file()

    def _require(self, path):
        if not self.exists():
            raise DatasetMissing(self.directory)
        return path

    @cached_property
    def records(self) -> pd.DataFrame:
        return parse_ratings(self._require(self.ratings_path))

    @cached_property
    def titles(self) -> dict[int, str]:
        return parse_titles(self._require(self.items_path))

    @cached_property
    def histograms(self) -> dict[int, RatingHistogram]:
        return build_histograms(self.records, self.titles)

    def histogram(self, name: str) -> RatingHistogram:
        title = match_title(name, self.titles.values())
        item_ids = sorted(item_id for item_id, candidate in self.titles.items() if candidate == title)
        rated = [item_id for item_id in item_ids if item_id in self.histograms]
        if not rated:
            raise UnknownItem(f"{title!r} has no ratings")
        if len(item_ids) > 1:
            logger.warning("title %r is listed under items %s; using item %d", title, item_ids, rated[0])
        logger.info("resolved %r to item %d %r", name, rated[0], title)
        return self.histograms[rated[0]]


def stored_histogram(name: str) -> RatingHistogram:
    """Resolve a film against the ``Film`` table filled by ``load_movielens``."""
    titles = list(Film.objects.values_list("title", flat=True))
    if not titles:
        raise IngestError("no films stored; run `python manage.py load_movielens` first")
    title = match_title(name, titles)
    film = Film.objects.filter(title=title).order_by("item_id").first()
    return film.to_histogram()


def film_fuzzy_set(name: str, mode, source=Source.FILES, dataset: MovieLensDataset | None = None) -> FuzzySet:
    """The fuzzified histogram of a film, labelled with the name it was asked for."""
    if Source(source) == Source.DB:
        histogram = stored_histogram(name)
    else:
        histogram = (dataset or MovieLensDataset()).histogram(name)
    return fuzzify(histogram, mode).with_label(name)
