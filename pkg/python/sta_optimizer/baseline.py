"""Basic random optimization, the comparison baseline for the STA engines.

Each iteration adds a Gaussian step to the incumbent and keeps the trial only
when it is strictly better.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from .core import (
    BoundsPolicy,
    ConfigurationError,
    EvalCounter,
    EvaluatedState,
    RngStream,
    clip_to_bounds,
    evaluate,
    sample_uniform_in_bounds,
)
from .sta_basic import check_max_iters, enforcement_bounds

if TYPE_CHECKING:
    from .benchmarks import Objective

logger = logging.getLogger(__name__)

DEFAULT_STEP_SIGMA = 1.0


@dataclass
class RoRun:
    best: EvaluatedState
    counter: EvalCounter
    max_iters: int
    step_sigma: float
    seed: int | None = None
    history: list[float] = field(default_factory=list)
    eval_history: list[int] = field(default_factory=list)

    @property
    def iterations(self) -> int:
        return len(self.history)


def random_optimization_run(obj: Objective, max_iters: int, step_sigma: float = DEFAULT_STEP_SIGMA,
                            seed: int = 0, bounds_policy: BoundsPolicy | str = BoundsPolicy.CLIP) -> RoRun:
    if not (math.isfinite(step_sigma) and step_sigma > 0):
        raise ConfigurationError(f"step_sigma must be a positive finite number, got {step_sigma!r}")
    check_max_iters(max_iters)
    bounds = enforcement_bounds(obj, bounds_policy)
    rng = RngStream(seed)
    counter = EvalCounter()

    start = sample_uniform_in_bounds(obj.bounds, rng)
    run = RoRun(EvaluatedState(start, evaluate(obj, start, counter)), counter, max_iters, step_sigma, seed)
    for _ in range(max_iters):
        trial = run.best.state + step_sigma * rng.normal(obj.dim)
        if bounds is not None:
            trial = clip_to_bounds(trial, bounds)
        fitness = evaluate(obj, trial, counter)
        if fitness < run.best.fitness:
            run.best = EvaluatedState(trial, fitness)
        run.history.append(run.best.fitness)
        run.eval_history.append(counter.count)
    logger.debug("Random optimization on %s finished: best %.6e", obj.name, run.best.fitness)
    return run
