"""Brute-force box counting used to cross-check the merging pipeline.

Everything here recomputes box coordinates from the raw points at every
scale with plain Python sets — no halving, no shared state with
:mod:`boxmerge.core` beyond the input types.  It is deliberately slow and
obvious so the fast path can be validated against it.
"""

from __future__ import annotations

from .core import PointSet, make_scale_plan
from .errors import EmptyPointSet, ScaleExceedsAxis

__all__ = ["naive_box_count", "naive_series"]


def naive_box_count(ps: PointSet, s: int) -> int:
    """Count occupied boxes at partition count ``s`` by direct enumeration."""
    s = int(s)
    if s < 1:
        raise ValueError(f"partition count must be >= 1, got {s}")
    lengths = [a.length for a in ps.axes]
    if any(length < s for length in lengths):
        raise ScaleExceedsAxis(f"s={s} exceeds an axis of length {min(lengths)}")
    boxes = set()
    for row in ps.coords.tolist():
        boxes.add(tuple((c * s) // length for c, length in zip(row, lengths)))
    return len(boxes)


def naive_series(ps: PointSet) -> list[tuple[int, int]]:
    """Recompute the full (s, n) ladder from scratch at every scale."""
    if len(ps) == 0:
        raise EmptyPointSet("cannot measure an empty point set")
    plan = make_scale_plan(ps.axes)
    return [(s, naive_box_count(ps, s)) for s in plan.scales]
