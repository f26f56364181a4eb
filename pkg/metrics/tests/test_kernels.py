import numpy as np
import pytest

from fuzzysets.sets import AlphaCutSet, Interval
from metrics.exceptions import EmptyCut
from metrics.kernels import cut_kernel, interval_hausdorff, signed_interval_hausdorff


def test_signed_kernel_keeps_direction():
    assert signed_interval_hausdorff(Interval(1, 3), Interval(5, 11)) == 8
    assert signed_interval_hausdorff(Interval(5, 11), Interval(1, 3)) == -8
    assert interval_hausdorff(Interval(1, 3), Interval(5, 11)) == 8


def test_signed_kernel_left_end_can_dominate():
    assert signed_interval_hausdorff(Interval(0, 10), Interval(-5, 9)) == -5


def test_tie_takes_right_end_difference():
    assert signed_interval_hausdorff(Interval(0, 2), Interval(1, 3)) == 1
    assert signed_interval_hausdorff(Interval(0, 4), Interval(1, 3)) == -1


def test_signed_magnitude_equals_unsigned():
    rng = np.random.default_rng(1)
    ends = np.sort(rng.uniform(-100, 100, size=(10_000, 2, 2)), axis=2)
    for (al, ar), (bl, br) in ends:
        a, b = Interval(al, ar), Interval(bl, br)
        assert abs(signed_interval_hausdorff(a, b)) == interval_hausdorff(a, b)


def test_cut_kernel_averages_over_split_segments():
    split = AlphaCutSet(0.5, (Interval(1.8, 2.6), Interval(3.5, 4.3)))
    single = AlphaCutSet(0.5, (Interval(6.8, 9.2),))
    assert cut_kernel(split, single, signed=True) == pytest.approx(5.75, abs=1e-12)
    assert cut_kernel(single, split, signed=True) == pytest.approx(-5.75, abs=1e-12)


def test_cut_kernel_of_single_segments_is_interval_kernel():
    a = AlphaCutSet(0.2, (Interval(1, 3),))
    b = AlphaCutSet(0.2, (Interval(5, 11),))
    assert cut_kernel(a, b, signed=True) == 8
    assert cut_kernel(b, a, signed=False) == 8


def test_cut_kernel_rejects_empty_cut():
    with pytest.raises(EmptyCut):
        cut_kernel(AlphaCutSet(0.9), AlphaCutSet(0.9, (Interval(1, 2),)), signed=True)
