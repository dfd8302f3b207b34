"""Integer point sets and the dyadic box-merging pipeline.

The measurement grid splits axis ``i`` (of length ``L_i``) into ``s`` equal
partitions, so a point ``p`` occupies the box with coordinates
``floor(p[i] * s / L_i)``.  Counts for the whole ladder
``s_max, s_max/2, ..., 2`` are produced by computing box coordinates once at
the finest scale and then repeatedly integer-halving and deduplicating the
table of occupied boxes.  Because ``s_max`` is a power of two, halving a
floored coordinate is exact: each coarsened table equals the table a fresh
scan at that scale would produce, and the points are scanned only once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import EmptyPointSet, MinAxisTooSmall, OddScale, ScaleExceedsAxis

__all__ = [
    "AxisSpec",
    "PointSet",
    "ScalePlan",
    "PartitionTable",
    "ScaleSeries",
    "make_scale_plan",
    "initial_partition",
    "merge_halve",
    "box_merge_series",
]


@dataclass(frozen=True)
class AxisSpec:
    """One axis of the embedding space with ``length`` addressable values."""

    length: int

    def __post_init__(self) -> None:
        if self.length < 1:
            raise ValueError(f"axis length must be >= 1, got {self.length!r}")


def _normalize_axes(axes: Iterable[AxisSpec | int]) -> tuple[AxisSpec, ...]:
    specs = tuple(a if isinstance(a, AxisSpec) else AxisSpec(int(a)) for a in axes)
    if not specs:
        raise ValueError("at least one axis is required")
    return specs


def _dedup_rows(rows: np.ndarray, bound: int) -> np.ndarray:
    """Return ``rows`` deduplicated and in lexicographic order.

    All values must lie in ``[0, bound)``.  When a whole row fits into a
    63-bit integer the work runs on packed scalar keys, which is much
    faster than row-wise comparison; wider rows fall back to a lexsort.
    """
    count, width = rows.shape
    if count == 0:
        return np.empty((0, width), dtype=np.int64)
    rows = rows.astype(np.int64, copy=False)
    bits = max(1, int(bound - 1).bit_length())
    if bits * width <= 63:
        keys = rows[:, 0].copy()
        for i in range(1, width):
            keys <<= bits
            keys |= rows[:, i]
        keys = np.unique(keys)
        out = np.empty((keys.size, width), dtype=np.int64)
        mask = (1 << bits) - 1
        for i in range(width - 1, -1, -1):
            out[:, i] = keys & mask
            keys >>= bits
        return out
    order = np.lexsort(rows.T[::-1])
    ordered = rows[order]
    keep = np.empty(count, dtype=bool)
    keep[0] = True
    np.any(ordered[1:] != ordered[:-1], axis=1, out=keep[1:])
    return ordered[keep]


@dataclass(frozen=True, eq=False, init=False)
class PointSet:
    """A deduplicated set of non-negative integer coordinate tuples.

    ``coords`` is an ``(n_points, E)`` int64 array held in lexicographic
    order, so the representation is independent of insertion order and
    duplicate inserts are collapsed.
    """

    axes: tuple[AxisSpec, ...]
    coords: np.ndarray

    def __init__(self, axes: Iterable[AxisSpec | int], points: Sequence | np.ndarray) -> None:
        specs = _normalize_axes(axes)
        width = len(specs)
        arr = np.asarray(points, dtype=np.int64)
        if arr.size == 0:
            arr = np.empty((0, width), dtype=np.int64)
        if arr.ndim != 2 or arr.shape[1] != width:
            raise ValueError(f"points must form an (n, {width}) array, got shape {arr.shape}")
        lengths = np.fromiter((a.length for a in specs), dtype=np.int64, count=width)
        if arr.shape[0]:
            if int(arr.min()) < 0 or bool((arr >= lengths).any()):
                raise ValueError("point coordinate outside its axis range")
            arr = _dedup_rows(arr, int(lengths.max()))
        arr.setflags(write=False)
        object.__setattr__(self, "axes", specs)
        object.__setattr__(self, "coords", arr)

    @property
    def ndim(self) -> int:
        """Number of axes (E)."""
        return len(self.axes)

    @property
    def lengths(self) -> np.ndarray:
        return np.fromiter((a.length for a in self.axes), dtype=np.int64, count=len(self.axes))

    def as_tuples(self) -> list[tuple[int, ...]]:
        return [tuple(row) for row in self.coords.tolist()]

    def __len__(self) -> int:
        return int(self.coords.shape[0])

    def __repr__(self) -> str:
        extent = "x".join(str(a.length) for a in self.axes)
        return f"PointSet({len(self)} points in {extent})"


@dataclass(frozen=True)
class ScalePlan:
    """The dyadic ladder of partition counts, finest first."""

    s_max: int
    nu_max: int
    scales: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.nu_max < 0 or self.s_max != 1 << self.nu_max:
            raise ValueError("s_max must equal 2**nu_max")
        if self.scales != tuple(self.s_max >> k for k in range(self.nu_max)):
            raise ValueError("scales must halve from s_max down to 2")


@dataclass(frozen=True, eq=False, init=False)
class PartitionTable:
    """Occupied-box coordinates at one partition count ``s``, duplicate-free."""

    s: int
    rows: np.ndarray

    def __init__(self, s: int, rows: Sequence | np.ndarray) -> None:
        s = int(s)
        if s < 1:
            raise ValueError(f"partition count must be >= 1, got {s}")
        arr = np.asarray(rows, dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError("rows must form a 2-D array of box coordinates")
        if arr.shape[0]:
            if int(arr.min()) < 0 or int(arr.max()) >= s:
                raise ValueError(f"box coordinate outside [0, {s})")
            arr = _dedup_rows(arr, s)
        else:
            arr = np.empty((0, arr.shape[1]), dtype=np.int64)
        arr.setflags(write=False)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "rows", arr)

    @property
    def n(self) -> int:
        """Number of occupied boxes."""
        return int(self.rows.shape[0])

    def __repr__(self) -> str:
        return f"PartitionTable(s={self.s}, n={self.n})"


@dataclass(frozen=True)
class ScaleSeries:
    """Occupied-box counts per scale, finest first, with the source size.

    ``source_point_count`` is the number of points in the measured set;
    the saturation cut-off is expressed relative to it.
    """

    entries: tuple[tuple[int, int], ...]
    source_point_count: int

    def __post_init__(self) -> None:
        if not self.entries:
            raise ValueError("a series needs at least one (s, n) entry")
        if self.source_point_count < 1:
            raise ValueError("source_point_count must be positive")
        previous = None
        for s, n in self.entries:
            if s < 1 or n < 1:
                raise ValueError("scales and counts must be positive")
            if n > self.source_point_count:
                raise ValueError("a count cannot exceed the source point count")
            if previous is not None and s * 2 != previous:
                raise ValueError("scales must form a halving chain")
            previous = s

    @property
    def scales(self) -> tuple[int, ...]:
        return tuple(s for s, _ in self.entries)

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(n for _, n in self.entries)


def make_scale_plan(axes: Iterable[AxisSpec | int]) -> ScalePlan:
    """Build the ladder of partition counts for the given axes.

    The finest count is the largest power of two not exceeding the
    shortest axis length, so every later halving stays grid-exact.
    """
    specs = _normalize_axes(axes)
    shortest = min(a.length for a in specs)
    if shortest < 2:
        raise MinAxisTooSmall(f"shortest axis has length {shortest}; need >= 2")
    nu_max = shortest.bit_length() - 1
    s_max = 1 << nu_max
    return ScalePlan(s_max, nu_max, tuple(s_max >> k for k in range(nu_max)))


def initial_partition(ps: PointSet, s: int) -> PartitionTable:
    """Map every point to its box at partition count ``s`` and deduplicate."""
    s = int(s)
    if s < 1:
        raise ValueError(f"partition count must be >= 1, got {s}")
    lengths = ps.lengths
    if bool((lengths < s).any()):
        raise ScaleExceedsAxis(f"s={s} exceeds an axis of length {int(lengths.min())}")
    return PartitionTable(s, (ps.coords * s) // lengths)


def merge_halve(table: PartitionTable) -> PartitionTable:
    """Coarsen one dyadic step: halve every box coordinate and deduplicate."""
    if table.s < 2 or table.s % 2:
        raise OddScale(f"cannot halve partition count {table.s}")
    return PartitionTable(table.s // 2, table.rows >> 1)


def box_merge_series(ps: PointSet) -> ScaleSeries:
    """Count occupied boxes at every scale of the ladder for ``ps``.

    The point set is scanned exactly once, at the finest scale; all coarser
    counts come from halving the previous table, so the total work is
    linear in the point count plus the table sizes.
    """
    if len(ps) == 0:
        raise EmptyPointSet("cannot measure an empty point set")
    plan = make_scale_plan(ps.axes)
    table = initial_partition(ps, plan.s_max)
    entries = [(plan.s_max, table.n)]
    for s in plan.scales[1:]:
        table = merge_halve(table)
        entries.append((s, table.n))
    return ScaleSeries(tuple(entries), len(ps))
