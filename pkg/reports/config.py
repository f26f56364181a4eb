from dataclasses import dataclass
from pathlib import Path

from django.db import models

from fuzzysets.sets import Normalization
from metrics.params import Measure, MeasureParams
from movielens.dataset import Source


class CommandName(models.TextChoices):
    DISTANCE = "distance", "Distance"
    MATRIX = "matrix", "Matrix"
    REPRODUCE = "reproduce", "Reproduce"
    RANK = "rank", "Rank"


class OutputFormat(models.TextChoices):
    CSV = "csv", "CSV"
    JSON = "json", "JSON"


class UsageError(ValueError):
    """An operand or option combination the command cannot act on."""


@dataclass(frozen=True)
class RunConfig:
    command: CommandName
    measure: Measure
    params: MeasureParams
    normalization: Normalization
    inputs: tuple[str, ...] = ()
    output_format: OutputFormat = OutputFormat.CSV
    data_dir: Path | None = None
    source: Source = Source.FILES
