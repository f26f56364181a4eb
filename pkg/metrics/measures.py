"""
Distance measures between fuzzy sets.

Every α-cut measure reduces to per-level kernels (``cut_kernel``) and
differs only in how levels are weighted and what happens when a cut is
empty. Signed kernels make the measures directional: a positive value
means the second operand lies to the right of the first.
"""

import logging
import math
from typing import Callable, Sequence

import numpy as np

from fuzzysets.exceptions import DegenerateSet
from fuzzysets.sets import (
    AlphaCutSet,
    FuzzySet,
    alpha_cut,
    common_range,
    height,
    is_normal,
    memberships,
    peak_normalize,
)

from .exceptions import (
    DegenerateUniverse,
    InvalidMeasureParams,
    NoOverlapLevels,
    NotConvex,
    NotNormal,
)
from .kernels import cut_kernel, interval_hausdorff
from .params import DistanceReport, LevelKernel, Measure, MeasureParams

logger = logging.getLogger(__name__)


def _normal_operands(a: FuzzySet, b: FuzzySet, measure):
    for operand in (a, b):
        if not is_normal(operand):
            raise NotNormal(
                f"{measure} needs normal sets; {operand.label or 'operand'} has height {height(operand):.3f}"
            )
    # snaps heights within tolerance of 1 onto exactly 1 so the top cut exists
    return peak_normalize(a), peak_normalize(b)


def _x_grid(a: FuzzySet, b: FuzzySet, params: MeasureParams):
    low, high = common_range(a, b)
    return np.linspace(low, high, params.x_grid_count)


def weighted_level_mean(kernels: Sequence[LevelKernel]) -> float:
    """Kernels weighted by their own α-level; level 0 carries no weight."""
    total = math.fsum(kernel.level for kernel in kernels)
    if total <= 0.0:
        raise InvalidMeasureParams("the α-grid has no positive level to weight by")
    return math.fsum(kernel.level * kernel.value for kernel in kernels) / total


def level_kernels(a: FuzzySet, b: FuzzySet, params: MeasureParams) -> list[LevelKernel]:
    """Per-level cut kernels over the whole grid; every cut must be present."""
    kernels = []
    for level in params.grid:
        kernels.append(LevelKernel(level, cut_kernel(alpha_cut(a, level), alpha_cut(b, level), params.signed)))
    logger.debug("kernels %s -> %s: %s", a.label, b.label, [(k.level, k.value) for k in kernels])
    return kernels


# --- Vertical slices and plain α-cuts ---
def vertical_slice_distance(a: FuzzySet, b: FuzzySet, params: MeasureParams) -> float:
    xs = _x_grid(a, b, params)
    return float(np.mean(np.abs(memberships(a, xs) - memberships(b, xs))))


def alpha_cut_mean_distance(a: FuzzySet, b: FuzzySet, params: MeasureParams) -> float:
    """Mean over the grid of the unsigned interval kernel; convex normal sets only."""
    a, b = _normal_operands(a, b, Measure.ALPHACUT.label)
    values = []
    for level in params.grid:
        cut_a, cut_b = alpha_cut(a, level), alpha_cut(b, level)
        if len(cut_a) != 1 or len(cut_b) != 1:
            raise NotConvex(f"α-cut at level {level:g} is not a single interval")
        values.append(interval_hausdorff(cut_a.segments[0], cut_b.segments[0]))
    return math.fsum(values) / len(values)


# --- Hausdorff generalisations for normal sets ---
def d_rr(a: FuzzySet, b: FuzzySet, params: MeasureParams) -> float:
    """The integral of the cut kernel over α, as a mean over the grid."""
    a, b = _normal_operands(a, b, Measure.RR.label)
    kernels = level_kernels(a, b, params)
    return math.fsum(kernel.value for kernel in kernels) / len(kernels)


def d_cr(a: FuzzySet, b: FuzzySet, params: MeasureParams) -> float:
    a, b = _normal_operands(a, b, Measure.CR.label)
    return weighted_level_mean(level_kernels(a, b, params))


# --- Non-normal sets ---
def d_cr_nonnormal(a: FuzzySet, b: FuzzySet, params: MeasureParams) -> float:
    """
    ``d_cr`` on peak-normalised copies plus an ε-weighted membership term.

    The membership term sums ``mu_b - mu_a`` when signed and ``|mu_a - mu_b|``
    otherwise, divided by the sum of the x grid.
    """
    base = d_cr(peak_normalize(a), peak_normalize(b), params)
    xs = _x_grid(a, b, params)
    difference = memberships(b, xs) - memberships(a, xs)
    if not params.signed:
        difference = np.abs(difference)
    denominator = float(np.sum(xs))
    if denominator == 0.0:
        raise DegenerateUniverse("the x grid sums to zero; shift the universe of discourse")
    return base + params.epsilon * float(np.sum(difference)) / denominator


def substitute_empty_levels(observed: Sequence[tuple[float, float | None]]) -> list[LevelKernel]:
    """
    Fill levels where one cut is missing (``None``) with the widest kernel seen.

    The stand-in is the kernel of largest magnitude among levels where both
    cuts exist, sign included; the lowest such level wins a tie.
    """
    present = [(level, value) for level, value in observed if value is not None]
    if not present:
        raise NoOverlapLevels("no α-level has both cuts present")
    widest_level, widest = max(present, key=lambda item: abs(item[1]))
    filled = []
    for level, value in observed:
        if value is None:
            logger.debug("level %g: one cut empty, using kernel %g from level %g", level, widest, widest_level)
            filled.append(LevelKernel(level, widest, substituted=True))
        else:
            filled.append(LevelKernel(level, value))
    return filled


def empty_cut_policy(all_levels: Sequence[tuple[float, AlphaCutSet, AlphaCutSet]], signed: bool) -> list[LevelKernel]:
    """Per-level kernels; levels where both cuts are empty are dropped."""
    observed = []
    for level, cut_a, cut_b in all_levels:
        if cut_a.is_empty and cut_b.is_empty:
            continue
        if cut_a.is_empty or cut_b.is_empty:
            observed.append((level, None))
        else:
            observed.append((level, cut_kernel(cut_a, cut_b, signed)))
    return substitute_empty_levels(observed)


def crf_trace(a: FuzzySet, b: FuzzySet, params: MeasureParams) -> list[LevelKernel]:
    """Kernels for every positive level up to the highest level either set reaches."""
    if max(height(a), height(b)) <= 0.0:
        raise DegenerateSet("both operands have zero membership everywhere")
    levels = [(level, alpha_cut(a, level), alpha_cut(b, level)) for level in params.grid.positive]
    reached = [level for level, cut_a, cut_b in levels if not (cut_a.is_empty and cut_b.is_empty)]
    if not reached:
        raise NoOverlapLevels("no positive α-level of the grid reaches either set")
    top = max(reached)
    logger.debug("crf %s -> %s: top level %g", a.label, b.label, top)
    return empty_cut_policy([entry for entry in levels if entry[0] <= top], params.signed)


def d_crf(a: FuzzySet, b: FuzzySet, params: MeasureParams) -> float:
    return weighted_level_mean(crf_trace(a, b, params))


# --- Dispatch ---
MEASURES: dict[str, Callable[[FuzzySet, FuzzySet, MeasureParams], float]] = {
    Measure.VERTICAL: vertical_slice_distance,
    Measure.ALPHACUT: alpha_cut_mean_distance,
    Measure.RR: d_rr,
    Measure.CR: d_cr,
    Measure.CR_NONNORMAL: d_cr_nonnormal,
    Measure.CRF: d_crf,
}

# measures that reject non-normal operands
NORMAL_ONLY = frozenset({Measure.ALPHACUT, Measure.RR, Measure.CR})


def measure_distance(measure, a: FuzzySet, b: FuzzySet, params: MeasureParams) -> DistanceReport:
    measure = Measure(measure)
    value = MEASURES[measure](a, b, params)
    return DistanceReport(measure, value, params, (a.label, b.label))


def distance_matrix(measure, sets: Sequence[FuzzySet], params: MeasureParams) -> list[list[DistanceReport]]:
    """Reports for every ordered pair; row ``i`` holds d(sets[i], sets[j])."""
    return [[measure_distance(measure, a, b, params) for b in sets] for a in sets]
