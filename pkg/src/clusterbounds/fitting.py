"""Least-squares exponential-growth fits of census data.

Cluster counts grow roughly geometrically in the weight; fitting
ln(count) = intercept + slope * m recovers the growth rate.  Both the
slope (log units per unit weight) and its exponential, the growth base,
are reported, since the counting ceilings constrain the base.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .clusters import ClusterCensus
from .errors import ValidationError


@dataclass(frozen=True)
class FitResult:
    intercept: float
    slope: float
    growth_base: float
    rss: float
    weights: tuple[int, ...]


def fit_log_growth(
    counts: "ClusterCensus | Mapping[int, int]",
    count_field: str = "irreducible",
    m_range: tuple[int, int] | None = None,
) -> FitResult:
    """Ordinary least squares of ln(count) against weight.

    Weights with zero counts are excluded; at least three nonzero
    points are required.
    """
    if isinstance(counts, ClusterCensus):
        table = counts.counts(count_field)
    else:
        table = dict(counts)
    lo, hi = m_range if m_range is not None else (min(table, default=1), max(table, default=1))
    points = [(m, c) for m, c in sorted(table.items()) if lo <= m <= hi and c > 0]
    if len(points) < 3:
        raise ValidationError(
            f"need at least 3 nonzero counts in [{lo}, {hi}], got {len(points)}"
        )
    x = np.array([m for m, _ in points], dtype=float)
    ylog = np.log(np.array([c for _, c in points], dtype=float))
    slope, intercept = np.polyfit(x, ylog, 1)
    rss = float(np.sum((ylog - (intercept + slope * x)) ** 2))
    return FitResult(
        intercept=float(intercept),
        slope=float(slope),
        growth_base=float(np.exp(slope)),
        rss=rss,
        weights=tuple(m for m, _ in points),
    )
