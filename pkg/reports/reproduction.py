"""
Tables reproduced by ``manage.py reproduce``.

Each builder returns a ``Table`` whose first column labels the row; the
film tables lay ordered film pairs out as columns.
"""

import logging
from dataclasses import dataclass, replace

from django.db import models

from fuzzysets.sets import AlphaGrid, FuzzySet, Normalization, alpha_cut
from fuzzysets.shapes import concavity_family, demonstration_sets
from metrics.measures import crf_trace, measure_distance, substitute_empty_levels, weighted_level_mean
from metrics.params import Measure, MeasureParams

logger = logging.getLogger(__name__)

FILMS = ("SMB", "MA", "SW")
FILM_PAIRS = (("SMB", "MA"), ("SMB", "SW"), ("MA", "SW"), ("MA", "SMB"), ("SW", "SMB"), ("SW", "MA"))
# the two-humped film against each of the convex ones
NONCONVEX_FILM = "ADGH2"
NONCONVEX_PAIRS = tuple((NONCONVEX_FILM, film) for film in FILMS)

# proportion-scaled ratings as printed with the worked non-normal example
APPENDIX_SETS = {
    "SMB": FuzzySet.from_pairs([(1, 0.385), (2, 0.269), (3, 0.231), (4, 0.115), (5, 0.0)], "SMB"),
    "SW": FuzzySet.from_pairs([(1, 0.015), (2, 0.027), (3, 0.098), (4, 0.302), (5, 0.557)], "SW"),
}
APPENDIX_LEVELS = "0.1:0.5:0.1"
# kernels printed with the worked example; None where the SMB cut is empty
APPENDIX_LISTED_KERNELS = ((0.1, 1.44), (0.2, 2.08), (0.3, 2.36), (0.4, None), (0.5, None))


class TableName(models.TextChoices):
    FILMS = "films", "Film results"
    NONNORMAL = "nonnormal", "Non-normal film results"
    NONCONVEX = "nonconvex", "Non-convex film results"
    APPENDIX = "appendix", "Worked non-normal trace"
    CONCAVITY = "concavity", "Concavity family"
    SYNTHETIC = "synthetic", "Synthetic sets"


TABLE_FILES = {
    TableName.FILMS: "film_results",
    TableName.NONNORMAL: "nonnormal_results",
    TableName.NONCONVEX: "nonconvex_film_results",
    TableName.APPENDIX: "appendix_trace",
    TableName.CONCAVITY: "concavity_results",
    TableName.SYNTHETIC: "synthetic_results",
}

# tables that read MovieLens ratings
FILM_TABLES = frozenset({TableName.FILMS, TableName.NONNORMAL, TableName.NONCONVEX})


@dataclass(frozen=True)
class Table:
    name: str
    header: tuple[str, ...]
    rows: tuple[tuple, ...]

    @property
    def filename(self):
        return TABLE_FILES[self.name]


def _pair_header(pairs=FILM_PAIRS):
    return ("", *(f"({a}, {b})" for a, b in pairs))


def _pair_row(label, measure, films: dict[str, FuzzySet], params: MeasureParams, pairs=FILM_PAIRS):
    values = [measure_distance(measure, films[a], films[b], params).value for a, b in pairs]
    logger.info("%s: %s", label, ", ".join(f"{v:.3f}" for v in values))
    return (label, *values)


def film_table(films: dict[str, FuzzySet], params: MeasureParams) -> Table:
    """RR and CR on peak-normalised films, with the unsigned and signed kernel."""
    rows = []
    for measure in (Measure.RR, Measure.CR):
        for signed in (False, True):
            label = f"{measure.value} {'signed' if signed else 'unsigned'}"
            rows.append(_pair_row(label, measure, films, replace(params, signed=signed)))
    return Table(TableName.FILMS, _pair_header(), tuple(rows))


def nonnormal_table(films: dict[str, FuzzySet], params: MeasureParams) -> Table:
    """The ε-corrected and empty-cut measures on proportion-scaled films, signed."""
    params = replace(params, signed=True)
    rows = [_pair_row(measure.value, measure, films, params) for measure in (Measure.CR_NONNORMAL, Measure.CRF)]
    return Table(TableName.NONNORMAL, _pair_header(), tuple(rows))


def nonconvex_table(films: dict[str, FuzzySet], params: MeasureParams) -> Table:
    """
    RR and CR from the two-humped film to each convex film, peak-normalised.

    Its split cuts go through the averaged cut kernel. The last row counts the
    grid levels where the film's cut has more than one segment.
    """
    rows = []
    for measure in (Measure.RR, Measure.CR):
        for signed in (False, True):
            label = f"{measure.value} {'signed' if signed else 'unsigned'}"
            rows.append(_pair_row(label, measure, films, replace(params, signed=signed), NONCONVEX_PAIRS))
    split = sum(len(alpha_cut(films[NONCONVEX_FILM], level)) > 1 for level in params.grid)
    rows.append(("split levels", *(split for _ in NONCONVEX_PAIRS)))
    return Table(TableName.NONCONVEX, _pair_header(NONCONVEX_PAIRS), tuple(rows))


def appendix_table() -> Table:
    """
    Per-level kernels of the empty-cut measure for the printed SMB/SW example.

    ``computed`` runs the measure on the printed distributions; ``listed``
    aggregates the reference kernels. Expect 3.081 and 2.261 respectively.
    """
    params = MeasureParams(grid=AlphaGrid.from_range(APPENDIX_LEVELS), signed=True)
    computed = crf_trace(APPENDIX_SETS["SMB"], APPENDIX_SETS["SW"], params)
    listed = substitute_empty_levels(APPENDIX_LISTED_KERNELS)
    rows = [
        (f"{c.level:g}", c.value, c.substituted, l.value, l.substituted)
        for c, l in zip(computed, listed)
    ]
    rows.append(("d", weighted_level_mean(computed), "", weighted_level_mean(listed), ""))
    header = ("level", "computed", "computed_substituted", "listed", "listed_substituted")
    return Table(TableName.APPENDIX, header, tuple(rows))


def concavity_table(params: MeasureParams) -> Table:
    """RR and CR with the averaged cut kernel as the first operand loses convexity."""
    family, reference = concavity_family()
    params = replace(params, signed=True)
    rows = []
    for member in family:
        rows.append((
            member.label,
            measure_distance(Measure.RR, member, reference, params).value,
            measure_distance(Measure.CR, member, reference, params).value,
        ))
    return Table(TableName.CONCAVITY, ("set", Measure.RR.value, Measure.CR.value), tuple(rows))


def synthetic_table(params: MeasureParams) -> Table:
    """Every ordered pair of the demonstration sets; the vertical and plain α-cut measures are unsigned."""
    sets = demonstration_sets()
    columns = [
        (Measure.VERTICAL.value, Measure.VERTICAL, False),
        (Measure.ALPHACUT.value, Measure.ALPHACUT, False),
    ]
    for measure in (Measure.RR, Measure.CR):
        columns.append((f"{measure.value} unsigned", measure, False))
        columns.append((f"{measure.value} signed", measure, True))
    rows = []
    for a in sets.values():
        for b in sets.values():
            row = [f"({a.label}, {b.label})"]
            for _, measure, signed in columns:
                row.append(measure_distance(measure, a, b, replace(params, signed=signed)).value)
            rows.append(tuple(row))
    header = ("pair", *(name for name, _, _ in columns))
    return Table(TableName.SYNTHETIC, header, tuple(rows))


def build_tables(names, params: MeasureParams, film_loader) -> list[Table]:
    """
    Build the requested tables in ``TableName`` order.

    ``film_loader(names, normalization)`` returns the named films keyed by
    name and is only called when a film table is requested.
    """
    tables = []
    for name in TableName:
        if name not in names:
            continue
        if name == TableName.FILMS:
            tables.append(film_table(film_loader(FILMS, Normalization.PEAK), params))
        elif name == TableName.NONNORMAL:
            tables.append(nonnormal_table(film_loader(FILMS, Normalization.PROPORTION), params))
        elif name == TableName.NONCONVEX:
            films = film_loader((NONCONVEX_FILM, *FILMS), Normalization.PEAK)
            tables.append(nonconvex_table(films, params))
        elif name == TableName.APPENDIX:
            tables.append(appendix_table())
        elif name == TableName.CONCAVITY:
            tables.append(concavity_table(params))
        else:
            tables.append(synthetic_table(params))
    return tables
