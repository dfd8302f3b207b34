"""Saturation cut-off and log-log regression on a scale series.

The box counts of a finite point set flatten once every point sits in its
own box, so entries with ``log2(n)`` above a fraction of ``log2(P)`` (P =
source point count) are dropped before fitting.  The dimension estimate is
the slope of an ordinary least-squares line through the surviving
``(log2 s, log2 n)`` pairs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .core import PointSet, ScaleSeries, box_merge_series
from .errors import InsufficientPoints

__all__ = [
    "FitConfig",
    "DimensionEstimate",
    "apply_cutoff",
    "fit_loglog",
    "estimate_dimension",
]

LogPair = tuple[float, float]


@dataclass(frozen=True)
class FitConfig:
    """Tunable knobs for the cut-off stage.

    ``cutoff_fraction`` scales the saturation threshold: an entry is
    rejected when ``log2(n) > cutoff_fraction * log2(P)``.
    """

    cutoff_fraction: float = 0.9

    def __post_init__(self) -> None:
        if not 0.0 < self.cutoff_fraction <= 1.0:
            raise ValueError(
                f"cutoff_fraction must lie in (0, 1], got {self.cutoff_fraction!r}"
            )


@dataclass(frozen=True)
class DimensionEstimate:
    """Result bundle: the fitted slope plus everything needed to audit it."""

    dimension: float
    intercept: float
    r_squared: float
    kept: tuple[LogPair, ...]
    rejected: tuple[LogPair, ...]
    series: ScaleSeries
    threshold: float
    config: FitConfig = field(default_factory=FitConfig)


def apply_cutoff(series: ScaleSeries, config: FitConfig | None = None) -> tuple[list[LogPair], list[LogPair]]:
    """Split a series into (kept, rejected) log-log pairs.

    Rejection is strict: an entry exactly at the threshold survives.
    Order within each list follows the series (finest scale first).
    """
    cfg = config or FitConfig()
    threshold = cfg.cutoff_fraction * math.log2(series.source_point_count)
    kept: list[LogPair] = []
    rejected: list[LogPair] = []
    for s, n in series.entries:
        pair = (math.log2(s), math.log2(n))
        if pair[1] > threshold:
            rejected.append(pair)
        else:
            kept.append(pair)
    return kept, rejected


def fit_loglog(points: list[LogPair]) -> tuple[float, float, float]:
    """Least-squares line through ``points``: returns (slope, intercept, R^2).

    Degenerate inputs — fewer than two points, or all abscissae equal —
    have no defined slope and raise ``InsufficientPoints``.  Exactly flat
    ordinates fit perfectly (R^2 = 1.0 by convention when the residuals
    vanish).
    """
    if len(points) < 2:
        raise InsufficientPoints(f"need >= 2 points to fit a line, got {len(points)}")
    xs = [x for x, _ in points]
    ys = [y for _, y in points]
    count = len(points)
    mean_x = sum(xs) / count
    mean_y = sum(ys) / count
    sxx = sum((x - mean_x) ** 2 for x in xs)
    if sxx == 0.0:
        raise InsufficientPoints("all abscissae are equal; slope is undefined")
    sxy = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys))
    slope = sxy / sxx
    intercept = mean_y - slope * mean_x
    ss_tot = sum((y - mean_y) ** 2 for y in ys)
    ss_res = sum((y - (slope * x + intercept)) ** 2 for x, y in zip(xs, ys))
    if ss_tot > 0.0:
        r_squared = 1.0 - ss_res / ss_tot
    else:
        r_squared = 1.0 if ss_res <= 1e-12 else 0.0
    return slope, intercept, min(1.0, max(0.0, r_squared))


def estimate_dimension(ps: PointSet, config: FitConfig | None = None) -> DimensionEstimate:
    """Measure ``ps``: count boxes across the ladder, cut saturation, fit."""
    cfg = config or FitConfig()
    series = box_merge_series(ps)
    threshold = cfg.cutoff_fraction * math.log2(series.source_point_count)
    kept, rejected = apply_cutoff(series, cfg)
    slope, intercept, r_squared = fit_loglog(kept)
    return DimensionEstimate(
        dimension=slope,
        intercept=intercept,
        r_squared=r_squared,
        kept=tuple(kept),
        rejected=tuple(rejected),
        series=series,
        threshold=threshold,
        config=cfg,
    )
