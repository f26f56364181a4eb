"""Hausdorff kernels between intervals and between α-cuts."""

import math

from fuzzysets.sets import AlphaCutSet, Interval

from .exceptions import EmptyCut


def interval_hausdorff(a: Interval, b: Interval) -> float:
    return max(abs(a.l - b.l), abs(a.r - b.r))


def signed_interval_hausdorff(a: Interval, b: Interval) -> float:
    """
    Hausdorff distance carrying direction: positive when ``b`` lies right of ``a``.

    The larger end difference wins; on a tie the right-end difference is used.
    """
    left, right = b.l - a.l, b.r - a.r
    if abs(left) > abs(right):
        return left
    return right


def cut_kernel(a: AlphaCutSet, b: AlphaCutSet, signed: bool) -> float:
    """
    Mean interval kernel over every (segment of a, segment of b) pair.

    For two single-segment cuts this is the plain interval kernel.
    """
    if a.is_empty or b.is_empty:
        raise EmptyCut(f"α-cut at level {a.level:g} is empty on at least one side")
    kernel = signed_interval_hausdorff if signed else interval_hausdorff
    values = [kernel(left, right) for left in a.segments for right in b.segments]
    return math.fsum(values) / len(values)
