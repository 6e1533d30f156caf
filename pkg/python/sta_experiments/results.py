"""Result files: the summary table, per-trial traces and the average fitness curve.

All files are comma-separated with a header row. Reals are written in
scientific notation with 17 significant digits so every value parses back
to the same double. Nothing time-dependent is written, so a repeated
experiment reproduces its files byte for byte.
"""

from __future__ import annotations

import csv
import logging
import os
from collections.abc import Iterable
from typing import TextIO

from sta_optimizer import StaError

from .experiment import ExperimentResult, TrialRecord
from .stats import average_evaluation_curve, average_fitness_curve

logger = logging.getLogger(__name__)

SUMMARY_COLUMNS = (
    "function", "dim", "algorithm", "best", "median", "mean", "worst", "st_dev", "trials", "iters", "evals_mean",
)
REAL_COLUMNS = ("best", "median", "mean", "worst", "st_dev", "evals_mean")
INTEGER_COLUMNS = ("dim", "trials", "iters")
TRACE_COLUMNS = ("iter", "best_fitness")
CURVE_COLUMNS = ("iter", "mean_best_fitness", "mean_evals")


class ResultsWriteError(StaError, OSError):
    pass


def format_real(value: float) -> str:
    return f"{value:.16e}"


def summary_row(result: ExperimentResult) -> list[str]:
    cfg, stats = result.config, result.stats
    return [
        cfg.function, str(cfg.dim), str(cfg.algorithm),
        *map(format_real, (stats.best, stats.median, stats.mean, stats.worst, stats.st_dev)),
        str(cfg.trials), str(cfg.max_iters), format_real(result.evals_mean),
    ]


def _writer(handle: TextIO):
    return csv.writer(handle, lineterminator="\n")


def _open(path: str, mode: str = "w") -> TextIO:
    try:
        return open(path, mode, newline="")
    except OSError as e:
        raise ResultsWriteError(f"cannot write {path}: {e.strerror}") from e


def write_summary(results: Iterable[ExperimentResult], destination: str | TextIO, header: bool = True,
                  append: bool = False) -> None:
    """Write one summary row per experiment to a path or an open stream.

    append=True adds rows to an existing file; the header is then skipped.

    Raises:
        ResultsWriteError: the path cannot be written.
    """
    rows = [summary_row(result) for result in results]
    if isinstance(destination, str):
        with _open(destination, "a" if append else "w") as handle:
            _write_rows(handle, destination, header and not append, rows)
        logger.debug("Wrote %d summary rows to %s", len(rows), destination)
    else:
        _write_rows(destination, getattr(destination, "name", "<stream>"), header, rows)


def _write_rows(handle: TextIO, path: str, header: bool, rows: list[list[str]]) -> None:
    writer = _writer(handle)
    try:
        if header:
            writer.writerow(SUMMARY_COLUMNS)
        writer.writerows(rows)
    except OSError as e:
        raise ResultsWriteError(f"cannot write {path}: {e.strerror}") from e


def trace_path(directory: str, label: str, record: TrialRecord) -> str:
    return os.path.join(directory, f"{label}_trial{record.index:03d}.csv")


def write_traces(result: ExperimentResult, directory: str) -> list[str]:
    """One file per trial with the best-so-far fitness after each iteration.

    Raises:
        ResultsWriteError: the directory cannot be created or a file written.
    """
    try:
        os.makedirs(directory, exist_ok=True)
    except OSError as e:
        raise ResultsWriteError(f"cannot create trace directory {directory}: {e.strerror}") from e
    paths = []
    for record in result.records:
        path = trace_path(directory, result.config.label, record)
        with _open(path) as handle:
            writer = _writer(handle)
            writer.writerow(TRACE_COLUMNS)
            writer.writerows([iteration, format_real(value)] for iteration, value in enumerate(record.history, start=1))
        paths.append(path)
    logger.debug("Wrote %d trace files to %s", len(paths), directory)
    return paths


def write_curve(result: ExperimentResult, path: str) -> None:
    """The average fitness curve with the mean cumulative evaluation count per iteration."""
    fitness = average_fitness_curve(result.records)
    evaluations = average_evaluation_curve(result.records)
    with _open(path) as handle:
        writer = _writer(handle)
        writer.writerow(CURVE_COLUMNS)
        writer.writerows(
            [iteration, format_real(mean_best), format_real(mean_evals)]
            for iteration, (mean_best, mean_evals) in enumerate(zip(fitness, evaluations), start=1)
        )
    logger.debug("Wrote average fitness curve to %s", path)


def write_results(result: ExperimentResult, summary: str | TextIO | None = None, append: bool = False) -> None:
    """Write every output the experiment configures.

    The summary goes to ``summary`` when given, otherwise to the configured
    ``out`` path; traces and the curve go to their configured paths.

    Raises:
        ResultsWriteError: any output cannot be written.
    """
    cfg = result.config
    destination = summary if summary is not None else cfg.out
    if destination is not None:
        write_summary([result], destination, header=not append, append=append and isinstance(destination, str))
    if cfg.trace_dir is not None:
        write_traces(result, cfg.trace_dir)
    if cfg.curve is not None:
        write_curve(result, cfg.curve)


def read_summary(path: str) -> list[dict[str, str | int | float]]:
    """Parse a summary file back into typed rows."""
    with open(path, newline="") as handle:
        rows = list(csv.DictReader(handle))
    for row in rows:
        for column in REAL_COLUMNS:
            row[column] = float(row[column])
        for column in INTEGER_COLUMNS:
            row[column] = int(row[column])
    return rows
