"""Multi-trial experiment runner.

Trial i of an experiment runs with its own random stream seeded base_seed + i
and its own evaluation counter, so trials are independent and may run in a
process pool; records always come back in trial order.
"""

from __future__ import annotations

import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field

import numpy as np
from tqdm import tqdm

from sta_optimizer import (
    ConfigurationError,
    Objective,
    StaError,
    make_benchmark,
    random_optimization_run,
    sta1_run,
    sta2_run,
)

from .config import Algorithm, ExperimentConfig
from .stats import SummaryStats, summarize

logger = logging.getLogger(__name__)


@dataclass
class TrialRecord:
    index: int
    seed: int
    best_state: np.ndarray
    final_fitness: float
    history: list[float]
    eval_history: list[int]
    evals: int
    wall_time: float
    flagged: bool = False


@dataclass
class ExperimentResult:
    config: ExperimentConfig
    records: list[TrialRecord]
    stats: SummaryStats
    flagged: int = 0
    wall_time: float = field(default=0.0, compare=False)

    @property
    def evals_mean(self) -> float:
        return sum(record.evals for record in self.records) / len(self.records)


def _run(cfg: ExperimentConfig, objective: Objective, seed: int):
    if cfg.algorithm is Algorithm.STA1:
        return sta1_run(objective, cfg.params, cfg.max_iters, seed, cfg.bounds_policy)
    if cfg.algorithm is Algorithm.STA2:
        return sta2_run(objective, cfg.params, cfg.sn, cfg.cf, cfg.max_iters, seed, cfg.crossover, cfg.bounds_policy)
    return random_optimization_run(objective, cfg.max_iters, cfg.step_sigma, seed, cfg.bounds_policy)


def run_trial(cfg: ExperimentConfig, index: int, objective: Objective | None = None) -> TrialRecord:
    """Run trial ``index`` of an experiment; a non-finite final fitness flags the record."""
    if objective is None:
        objective = make_benchmark(cfg.function, cfg.dim)
    seed = cfg.base_seed + index
    start = time.perf_counter()
    run = _run(cfg, objective, seed)
    elapsed = time.perf_counter() - start
    record = TrialRecord(
        index=index,
        seed=seed,
        best_state=run.best.state.copy(),
        final_fitness=run.best.fitness,
        history=list(run.history),
        eval_history=list(run.eval_history),
        evals=run.counter.count,
        wall_time=elapsed,
        flagged=not math.isfinite(run.best.fitness),
    )
    logger.debug("%s trial %d (seed %d): %.6e in %.3f s", cfg.label, index, seed, record.final_fitness, elapsed)
    return record


def run_experiment(cfg: ExperimentConfig, objective: Objective | None = None,
                   progress: bool = False) -> ExperimentResult:
    """Run every trial of an experiment and summarize the final fitnesses.

    Trials run in a process pool when cfg.jobs > 1; the records are the same
    as with a single job. A user objective passed with jobs > 1 must be
    picklable.

    Raises:
        ConfigurationError: invalid configuration, before any trial runs.
        StaError: no trial finished with a finite fitness.
    """
    cfg.validate(check_benchmark=objective is None)
    if objective is None:
        objective = make_benchmark(cfg.function, cfg.dim)
    elif objective.dim != cfg.dim:
        raise ConfigurationError(f"objective {objective.name} has dimension {objective.dim}, experiment expects {cfg.dim}")
    logger.info("Running %s: %d trials of %d iterations", cfg.label, cfg.trials, cfg.max_iters)
    start = time.perf_counter()
    bar = tqdm(total=cfg.trials, desc=cfg.label, unit="trial", disable=not progress)
    with bar:
        if cfg.jobs == 1:
            records = []
            for index in range(cfg.trials):
                records.append(run_trial(cfg, index, objective))
                bar.update()
        else:
            with ProcessPoolExecutor(max_workers=min(cfg.jobs, cfg.trials)) as pool:
                futures = [pool.submit(run_trial, cfg, index, objective) for index in range(cfg.trials)]
                for _ in as_completed(futures):
                    bar.update()
                records = [future.result() for future in futures]

    for record in records:
        if record.flagged:
            logger.warning("%s trial %d (seed %d) ended with non-finite fitness %r",
                           cfg.label, record.index, record.seed, record.final_fitness)
    finals = [record.final_fitness for record in records if not record.flagged]
    if not finals:
        raise StaError(f"{cfg.label}: no trial finished with a finite fitness")
    result = ExperimentResult(cfg, records, summarize(finals), flagged=len(records) - len(finals),
                              wall_time=time.perf_counter() - start)
    logger.info("%s: best %.6e, mean %.6e, worst %.6e (%.1f s)", cfg.label, result.stats.best,
                result.stats.mean, result.stats.worst, result.wall_time)
    return result
