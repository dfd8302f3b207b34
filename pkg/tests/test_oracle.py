"""The brute-force counter, and its agreement with the merging pipeline."""

import pytest

from boxmerge.core import PointSet, box_merge_series
from boxmerge.errors import EmptyPointSet, ScaleExceedsAxis
from boxmerge.oracle import naive_box_count, naive_series


def test_empty_set_counts_zero_boxes():
    assert naive_box_count(PointSet([8, 8], []), 4) == 0


def test_hand_checked_counts():
    ps = PointSet([8, 8], [(0, 0), (0, 7), (7, 0), (7, 7)])
    assert naive_box_count(ps, 2) == 4
    assert naive_box_count(ps, 8) == 4
    assert naive_box_count(ps, 1) == 1


def test_scale_guard():
    with pytest.raises(ScaleExceedsAxis):
        naive_box_count(PointSet([4], [(0,)]), 8)


def test_series_rejects_empty_set():
    with pytest.raises(EmptyPointSet):
        naive_series(PointSet([8, 8], []))


def test_agreement_on_awkward_axis_lengths():
    # Non-power-of-two, non-square: box edges are fractional in grid
    # units, which is exactly where a halving shortcut could go wrong.
    pts = [(x, y, z) for x in range(0, 21, 4) for y in range(0, 13, 3) for z in (0, 6)]
    ps = PointSet([21, 13, 7], pts)
    assert list(box_merge_series(ps).entries) == naive_series(ps)


def test_agreement_on_prime_length_line():
    ps = PointSet([127], [(i,) for i in range(0, 127, 5)])
    assert list(box_merge_series(ps).entries) == naive_series(ps)
