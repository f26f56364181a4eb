"""Readers for MovieLens 100k ``u.data`` and ``u.item``."""

import csv
import logging
import re

import pandas as pd

from .exceptions import DuplicateItem, MalformedLine, RatingOutOfRange

logger = logging.getLogger(__name__)

RATING_VALUES = (1, 2, 3, 4, 5)
RATING_COLUMNS = ["user_id", "item_id", "rating", "timestamp"]
ITEM_COLUMNS = [
    "item_id", "title", "release_date", "video_release_date", "imdb_url",
    "unknown", "action", "adventure", "animation", "children", "comedy", "crime",
    "documentary", "drama", "fantasy", "film_noir", "horror", "musical", "mystery",
    "romance", "sci_fi", "thriller", "war", "western",
]

PARSER_LINE = re.compile(r"line (\d+)")


def _read_table(source, sep, names, usecols=None) -> pd.DataFrame:
    """
    Every field as text, one row per line of ``source`` (a path or open text file).

    Blank lines stay in as empty rows so that ``index + 1`` is the line number;
    callers drop them with ``_drop_blank``.
    """
    try:
        return pd.read_csv(
            source,
            sep=sep,
            header=None,
            names=names,
            usecols=usecols,
            index_col=False,
            dtype=str,
            keep_default_na=False,
            skip_blank_lines=False,
            quoting=csv.QUOTE_NONE,
            # u.item predates UTF-8; Latin-1 keeps every byte of the titles
            encoding="latin-1",
        )
    except pd.errors.EmptyDataError:
        return pd.DataFrame(columns=usecols or names, dtype=str)
    except ValueError as exc:
        match = PARSER_LINE.search(str(exc))
        raise MalformedLine(int(match.group(1)) if match else None, str(exc).strip()) from exc


def _missing(frame: pd.DataFrame) -> pd.DataFrame:
    return frame.isna() | frame.eq("")


def _drop_blank(frame: pd.DataFrame) -> pd.DataFrame:
    return frame[~_missing(frame).all(axis=1)]


def _first_line(mask: pd.Series) -> int:
    return int(mask[mask].index[0]) + 1


def parse_ratings(source) -> pd.DataFrame:
    """
    Ratings as an integer frame with columns ``user_id, item_id, rating, timestamp``.

    Rows keep input order. Line numbers in errors count from 1 and include
    blank lines.
    """
    frame = _drop_blank(_read_table(source, "\t", RATING_COLUMNS))
    short = _missing(frame).any(axis=1)
    if short.any():
        raise MalformedLine(_first_line(short), f"expected {len(RATING_COLUMNS)} tab-separated fields")

    numbers = pd.DataFrame({column: pd.to_numeric(frame[column].str.strip(), errors="coerce") for column in RATING_COLUMNS})
    not_integer = numbers.isna().any(axis=1) | (numbers % 1 != 0).any(axis=1)
    if not_integer.any():
        line_no = _first_line(not_integer)
        line = "\t".join(frame.loc[line_no - 1])
        raise MalformedLine(line_no, f"non-integer field in {line!r}")

    ratings = numbers.astype("int64").reset_index(drop=True)
    outside = ~numbers["rating"].isin(RATING_VALUES)
    if outside.any():
        line_no = _first_line(outside)
        raise RatingOutOfRange(line_no, f"rating {int(numbers.loc[line_no - 1, 'rating'])} is outside 1..5")
    logger.info("parsed %d rating records", len(ratings))
    return ratings


def parse_titles(source) -> dict[int, str]:
    """Map item id to title from pipe-separated ``id|title|...`` lines."""
    frame = _drop_blank(_read_table(source, "|", ITEM_COLUMNS, usecols=["item_id", "title"]))
    if frame.empty:
        return {}
    missing = _missing(frame).any(axis=1)
    if missing.any():
        raise MalformedLine(_first_line(missing), "expected 'id|title|...'")

    item_ids = pd.to_numeric(frame["item_id"].str.strip(), errors="coerce")
    bad_id = item_ids.isna() | (item_ids % 1 != 0)
    if bad_id.any():
        line_no = _first_line(bad_id)
        raise MalformedLine(line_no, f"non-integer item id {frame.loc[line_no - 1, 'item_id']!r}")

    item_ids = item_ids.astype("int64")
    repeated = item_ids.duplicated()
    if repeated.any():
        line_no = _first_line(repeated)
        raise DuplicateItem(line_no, f"item {int(item_ids.loc[line_no - 1])} listed twice")
    return dict(zip(item_ids.tolist(), frame["title"].tolist()))
