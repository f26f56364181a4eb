"""
Discretized fuzzy sets over a real universe of discourse.

A ``FuzzySet`` is a list of (x, mu) points sorted by x. Membership between
listed points is linearly interpolated and is 0 outside the listed range.
All types here are frozen; build new ones instead of mutating.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, replace
from functools import cached_property
from typing import Iterable, Mapping, Protocol

import numpy as np
from django.db import models

from .exceptions import (
    DegenerateSet,
    InvalidAlphaGrid,
    InvalidInterval,
    InvalidMembership,
    MembershipOutOfRange,
)

logger = logging.getLogger(__name__)

MEMBERSHIP_TOLERANCE = 1e-9
NORMAL_TOLERANCE = 1e-9


class Normalization(models.TextChoices):
    PEAK = "peak", "Peak"
    PROPORTION = "proportion", "Proportion"
    NONE = "none", "None"


# --- Value types ---
@dataclass(frozen=True)
class MembershipPoint:
    x: float
    mu: float

    def __post_init__(self):
        if not math.isfinite(self.x):
            raise InvalidMembership(f"x must be finite, got {self.x!r}")
        if not 0.0 <= self.mu <= 1.0:
            raise MembershipOutOfRange(f"membership {self.mu!r} at x={self.x} is outside [0, 1]")

    @classmethod
    def clamped(cls, x, mu):
        """Build a point, clamping memberships that miss [0, 1] by rounding noise only."""
        mu = float(mu)
        if not math.isfinite(mu):
            raise InvalidMembership(f"membership at x={x} must be finite, got {mu!r}")
        if mu < -MEMBERSHIP_TOLERANCE or mu > 1.0 + MEMBERSHIP_TOLERANCE:
            raise MembershipOutOfRange(f"membership {mu!r} at x={x} is outside [0, 1]")
        return cls(float(x), min(max(mu, 0.0), 1.0))


@dataclass(frozen=True)
class Interval:
    l: float
    r: float

    def __post_init__(self):
        if not self.l <= self.r:
            raise InvalidInterval(f"left end {self.l} exceeds right end {self.r}")

    @property
    def width(self):
        return self.r - self.l

    def contains(self, x, tol=0.0):
        return self.l - tol <= x <= self.r + tol

    def covers(self, other: Interval, tol=0.0):
        return self.l - tol <= other.l and other.r <= self.r + tol

    def shifted(self, offset):
        return Interval(self.l + offset, self.r + offset)


@dataclass(frozen=True)
class AlphaCutSet:
    """The α-cut of a set at one level: disjoint closed segments, ascending."""

    level: float
    segments: tuple[Interval, ...] = ()

    def __post_init__(self):
        if not 0.0 <= self.level <= 1.0:
            raise InvalidAlphaGrid(f"α-level {self.level} is outside [0, 1]")
        object.__setattr__(self, "segments", tuple(self.segments))
        for left, right in zip(self.segments, self.segments[1:]):
            if not left.r < right.l:
                raise InvalidInterval(f"segments {left} and {right} overlap or are unsorted")

    def __len__(self):
        return len(self.segments)

    def __iter__(self):
        return iter(self.segments)

    @property
    def is_empty(self):
        return not self.segments

    @property
    def hull(self) -> Interval | None:
        if self.is_empty:
            return None
        return Interval(self.segments[0].l, self.segments[-1].r)

    def contains(self, x, tol=0.0):
        return any(segment.contains(x, tol) for segment in self.segments)


@dataclass(frozen=True)
class AlphaGrid:
    levels: tuple[float, ...]

    def __post_init__(self):
        levels = tuple(float(level) for level in self.levels)
        if not levels:
            raise InvalidAlphaGrid("an α-grid needs at least one level")
        if any(not 0.0 <= level <= 1.0 for level in levels):
            raise InvalidAlphaGrid(f"α-levels must lie in [0, 1], got {levels}")
        if any(b <= a for a, b in zip(levels, levels[1:])):
            raise InvalidAlphaGrid("α-levels must be strictly ascending")
        object.__setattr__(self, "levels", levels)

    @classmethod
    def uniform(cls, count):
        """``count`` equally spaced levels from 0 to 1 inclusive (51 gives i/50)."""
        if count < 2:
            raise InvalidAlphaGrid(f"a uniform α-grid needs at least 2 levels, got {count}")
        return cls(tuple(i / (count - 1) for i in range(count)))

    @classmethod
    def from_range(cls, text: str):
        """Parse ``start:stop:step`` with an inclusive stop, e.g. ``0.1:0.5:0.1``."""
        try:
            start, stop, step = (float(part) for part in text.split(":"))
        except ValueError as exc:
            raise InvalidAlphaGrid(f"expected start:stop:step, got {text!r}") from exc
        if step <= 0 or stop < start:
            raise InvalidAlphaGrid(f"range {text!r} must ascend with a positive step")
        count = int(round((stop - start) / step)) + 1
        return cls(tuple(round(start + i * step, 12) for i in range(count)))

    def __iter__(self):
        return iter(self.levels)

    def __len__(self):
        return len(self.levels)

    @property
    def positive(self):
        return tuple(level for level in self.levels if level > 0.0)


class CountHistogram(Protocol):
    title: str
    counts: Mapping[int, int]
    total: int


@dataclass(frozen=True)
class FuzzySet:
    points: tuple[MembershipPoint, ...]
    label: str = ""

    def __post_init__(self):
        points = tuple(self.points)
        if len(points) < 2:
            raise InvalidMembership("a fuzzy set needs at least 2 points")
        for left, right in zip(points, points[1:]):
            if not left.x < right.x:
                raise InvalidMembership(f"x values must be strictly ascending ({left.x} then {right.x})")
        object.__setattr__(self, "points", points)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[float, float]], label=""):
        return cls(tuple(MembershipPoint.clamped(x, mu) for x, mu in pairs), label)

    def __str__(self):
        body = ", ".join(f"{p.mu:g}/{p.x:g}" for p in self.points)
        return f"{self.label or 'set'} = {body}"

    @cached_property
    def xs(self):
        xs = np.array([p.x for p in self.points], dtype=float)
        xs.flags.writeable = False
        return xs

    @cached_property
    def mus(self):
        mus = np.array([p.mu for p in self.points], dtype=float)
        mus.flags.writeable = False
        return mus

    def with_label(self, label):
        return replace(self, label=label)

    def shifted(self, offset):
        """The same membership function translated by ``offset`` along x."""
        return FuzzySet(tuple(MembershipPoint(p.x + offset, p.mu) for p in self.points), self.label)

    def scaled(self, factor):
        return FuzzySet.from_pairs(((p.x, p.mu * factor) for p in self.points), self.label)


# --- Membership ---
def membership_at(fuzzy_set: FuzzySet, x: float) -> float:
    return float(np.interp(x, fuzzy_set.xs, fuzzy_set.mus, left=0.0, right=0.0))


def memberships(fuzzy_set: FuzzySet, xs) -> np.ndarray:
    """Vectorised ``membership_at`` over an array of x values."""
    return np.interp(np.asarray(xs, dtype=float), fuzzy_set.xs, fuzzy_set.mus, left=0.0, right=0.0)


def height(fuzzy_set: FuzzySet) -> float:
    # linear pieces peak at listed points
    return float(fuzzy_set.mus.max())


def is_normal(fuzzy_set: FuzzySet) -> bool:
    return abs(height(fuzzy_set) - 1.0) <= NORMAL_TOLERANCE


def common_range(a: FuzzySet, b: FuzzySet) -> tuple[float, float]:
    """Smallest x-range covering every listed point of both sets."""
    return min(a.xs[0], b.xs[0]), max(a.xs[-1], b.xs[-1])


# --- α-cuts ---
def _crossing(x0, m0, x1, m1, level):
    """Where the piece from (x0, m0) to (x1, m1) meets ``level``, kept inside [x0, x1]."""
    if level == m0:
        return float(x0)
    if level == m1:
        return float(x1)
    x = x0 + (level - m0) / (m1 - m0) * (x1 - x0)
    return float(min(max(x, x0), x1))


def support_hull(fuzzy_set: FuzzySet) -> AlphaCutSet:
    """Closed convex hull of {x : mu(x) > 0}, reported as the level-0 cut."""
    xs, mus = fuzzy_set.xs, fuzzy_set.mus
    positive = np.flatnonzero(mus > 0.0)
    if positive.size == 0:
        return AlphaCutSet(0.0)
    first, last = positive[0], positive[-1]
    # the closure reaches back to the zero point the rising edge starts from
    left = xs[first - 1] if first > 0 else xs[first]
    right = xs[last + 1] if last < len(xs) - 1 else xs[last]
    return AlphaCutSet(0.0, (Interval(float(left), float(right)),))


def alpha_cut(fuzzy_set: FuzzySet, level: float) -> AlphaCutSet:
    """
    Union of the maximal closed intervals where interpolated membership >= level.

    Crossing points come from inverse linear interpolation on each piece, so
    the cut ends are exact rather than snapped to a grid. Level 0 returns the
    support hull. A level above the height gives the empty cut.
    """
    if not 0.0 <= level <= 1.0:
        raise InvalidAlphaGrid(f"α-level {level} is outside [0, 1]")
    if level == 0.0:
        return support_hull(fuzzy_set)

    xs, mus = fuzzy_set.xs, fuzzy_set.mus
    segments = []
    # start is None exactly when the current listed point lies below the level
    start = float(xs[0]) if mus[0] >= level else None
    for x0, x1, m0, m1 in zip(xs, xs[1:], mus, mus[1:]):
        if start is None:
            if m1 >= level:
                start = _crossing(x0, m0, x1, m1, level)
                # touching segments merge
                if segments and start <= segments[-1].r:
                    start = segments.pop().l
        elif m1 < level:
            end = _crossing(x0, m0, x1, m1, level)
            segments.append(Interval(start, end))
            start = None
    if start is not None:
        segments.append(Interval(start, float(xs[-1])))
    return AlphaCutSet(float(level), tuple(segments))


def is_convex(fuzzy_set: FuzzySet) -> bool:
    """True when no α-cut on a probe grid splits into more than one segment."""
    grades = np.unique(fuzzy_set.mus[fuzzy_set.mus > 0.0])
    probes = np.concatenate([grades, (grades[:-1] + grades[1:]) / 2.0])
    return all(len(alpha_cut(fuzzy_set, float(level))) <= 1 for level in probes)


# --- Normalization ---
def peak_normalize(fuzzy_set: FuzzySet) -> FuzzySet:
    peak = height(fuzzy_set)
    if peak <= 0.0:
        raise DegenerateSet(f"{fuzzy_set.label or 'set'} has zero membership everywhere")
    return FuzzySet(
        tuple(MembershipPoint(p.x, p.mu / peak) for p in fuzzy_set.points),
        fuzzy_set.label,
    )


def proportion_scale(histogram: CountHistogram) -> FuzzySet:
    """Memberships are the share of all ratings given at each rating value."""
    if histogram.total <= 0:
        raise DegenerateSet(f"{histogram.title or 'histogram'} has no ratings")
    return FuzzySet.from_pairs(
        ((rating, histogram.counts[rating] / histogram.total) for rating in sorted(histogram.counts)),
        histogram.title,
    )
