"""Cross-trial statistics and average fitness curves."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from sta_optimizer import StaError

if TYPE_CHECKING:
    from .experiment import TrialRecord


@dataclass(frozen=True)
class SummaryStats:
    best: float
    median: float
    mean: float
    worst: float
    st_dev: float


def summarize(finals: Sequence[float]) -> SummaryStats:
    """Best, median, mean, worst and sample standard deviation of final fitnesses.

    The median of an even count is the mean of the two middle values; the
    standard deviation uses the N - 1 divisor and is 0 for a single value.

    Raises:
        StaError: finals is empty or holds a non-finite value.
    """
    values = np.asarray(finals, dtype=np.float64)
    if values.size == 0:
        raise StaError("cannot summarize an empty list of final fitnesses")
    if not np.all(np.isfinite(values)):
        raise StaError("final fitnesses must be finite to be summarized")
    best = float(values.min())
    worst = float(values.max())
    # rounding in the sum can push the mean of equal values one ulp outside [best, worst]
    mean = min(max(float(values.mean()), best), worst)
    st_dev = float(values.std(ddof=1)) if values.size > 1 else 0.0
    return SummaryStats(best=best, median=float(np.median(values)), mean=mean, worst=worst, st_dev=st_dev)


def _stacked(series: list[Sequence[float]], what: str) -> np.ndarray:
    if not series:
        raise ValueError(f"no {what} to average")
    lengths = {len(entry) for entry in series}
    if len(lengths) != 1:
        raise ValueError(f"{what} have different lengths: {sorted(lengths)}")
    return np.asarray(series, dtype=np.float64)


def average_fitness_curve(records: Sequence[TrialRecord]) -> list[float]:
    """Per-iteration mean of the best-so-far histories.

    Raises:
        ValueError: no records, or histories of different lengths.
    """
    return _stacked([record.history for record in records], "fitness histories").mean(axis=0).tolist()


def average_evaluation_curve(records: Sequence[TrialRecord]) -> list[float]:
    """Per-iteration mean of the cumulative evaluation counts."""
    return _stacked([record.eval_history for record in records], "evaluation histories").mean(axis=0).tolist()
