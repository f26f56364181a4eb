import math
from dataclasses import dataclass, field

from django.conf import settings
from django.db import models

from fuzzysets.sets import AlphaGrid

from .exceptions import InvalidMeasureParams


class Measure(models.TextChoices):
    VERTICAL = "vertical", "Vertical slices"
    ALPHACUT = "alphacut", "α-cut mean"
    RR = "rr", "Integrated Hausdorff"
    CR = "cr", "Level-weighted Hausdorff"
    CR_NONNORMAL = "cr-nonnormal", "Level-weighted Hausdorff, non-normal"
    CRF = "crf", "Level-weighted Hausdorff, empty-cut substitution"


@dataclass(frozen=True)
class MeasureParams:
    grid: AlphaGrid = field(default_factory=lambda: AlphaGrid.uniform(51))
    epsilon: float = 1.0
    x_grid_count: int = 51
    signed: bool = True

    def __post_init__(self):
        if self.epsilon < 0 or not math.isfinite(self.epsilon):
            raise InvalidMeasureParams(f"epsilon must be a finite value >= 0, got {self.epsilon}")
        if self.x_grid_count < 2:
            raise InvalidMeasureParams(f"x grid needs at least 2 points, got {self.x_grid_count}")

    @classmethod
    def from_settings(cls, **overrides):
        defaults = settings.FUZZY_DISTANCE
        values = {
            "grid": AlphaGrid.uniform(defaults["ALPHA_CUTS"]),
            "epsilon": defaults["EPSILON"],
            "x_grid_count": defaults["X_POINTS"],
        }
        values.update(overrides)
        return cls(**values)


@dataclass(frozen=True)
class LevelKernel:
    level: float
    value: float
    substituted: bool = False


@dataclass(frozen=True)
class DistanceReport:
    measure: Measure
    value: float
    params: MeasureParams
    operands: tuple[str, str]

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise InvalidMeasureParams(f"{self.measure} produced a non-finite value {self.value}")
