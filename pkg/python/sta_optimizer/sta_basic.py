"""Individual state transition algorithm (STAI).

One incumbent goes through expansion, rotation and axesion rounds every
iteration, each with a translation along any improvement. The rotation factor
decays geometrically with base fc and is reset to alpha_max at the top of
the iteration once it has fallen below alpha_min.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from .core import (
    BoundsPolicy,
    BoxBounds,
    ConfigurationError,
    EvalCounter,
    EvaluatedState,
    RngStream,
    StaParams,
    evaluate,
    sample_uniform_in_bounds,
)
from .operators import OperatorKind, transform_round

if TYPE_CHECKING:
    from .benchmarks import Objective

logger = logging.getLogger(__name__)

SELF_LEARNING_ORDER = (OperatorKind.EXPANSION, OperatorKind.ROTATION, OperatorKind.AXESION)


@dataclass
class StaIRun:
    params: StaParams
    max_iters: int
    best: EvaluatedState
    counter: EvalCounter
    alpha: float
    bounds: BoxBounds | None = None
    seed: int | None = None
    history: list[float] = field(default_factory=list)
    eval_history: list[int] = field(default_factory=list)

    @property
    def iterations(self) -> int:
        return len(self.history)


def alpha_next(alpha: float, params: StaParams) -> float:
    return alpha / params.fc


def alpha_for_iteration(alpha: float, params: StaParams) -> float:
    """The rotation factor to use this iteration: reset to alpha_max once below alpha_min."""
    if alpha < params.alpha_min:
        return params.alpha_max
    return alpha


def enforcement_bounds(obj: Objective, policy: BoundsPolicy | str) -> BoxBounds | None:
    try:
        policy = BoundsPolicy(policy)
    except ValueError:
        raise ConfigurationError(f"bounds policy must be one of {[p.value for p in BoundsPolicy]}, got {policy!r}") from None
    return obj.bounds if policy is BoundsPolicy.CLIP else None


def self_learning(obj: Objective, state: EvaluatedState, params: StaParams, alpha: float,
                  rng: RngStream, counter: EvalCounter, bounds: BoxBounds | None = None) -> EvaluatedState:
    """Expansion, rotation and axesion rounds applied in turn to one state."""
    for kind in SELF_LEARNING_ORDER:
        state = transform_round(obj, state, kind, params, rng, counter, alpha=alpha, bounds=bounds)
    return state


def sta1_iteration(run: StaIRun, obj: Objective, rng: RngStream) -> StaIRun:
    alpha = alpha_for_iteration(run.alpha, run.params)
    if alpha != run.alpha:
        logger.debug("Rotation factor %.3e below %.3e; reset to %.3e", run.alpha, run.params.alpha_min, alpha)
    run.best = self_learning(obj, run.best, run.params, alpha, rng, run.counter, run.bounds)
    run.history.append(run.best.fitness)
    run.eval_history.append(run.counter.count)
    run.alpha = alpha_next(alpha, run.params)
    return run


def check_max_iters(max_iters: int) -> None:
    if isinstance(max_iters, bool) or not isinstance(max_iters, int) or max_iters < 1:
        raise ConfigurationError(f"max_iters must be a positive integer, got {max_iters!r}")


def sta1_run(obj: Objective, params: StaParams, max_iters: int, seed: int,
             bounds_policy: BoundsPolicy | str = BoundsPolicy.CLIP) -> StaIRun:
    """Run STAI from a uniform random start for max_iters iterations.

    Raises:
        ConfigurationError: invalid params, iteration count, seed or bounds
            policy; raised before the first evaluation.
    """
    params.validate()
    check_max_iters(max_iters)
    bounds = enforcement_bounds(obj, bounds_policy)
    rng = RngStream(seed)
    counter = EvalCounter()

    start = sample_uniform_in_bounds(obj.bounds, rng)
    run = StaIRun(
        params=params,
        max_iters=max_iters,
        best=EvaluatedState(start, evaluate(obj, start, counter)),
        counter=counter,
        alpha=params.alpha,
        bounds=bounds,
        seed=seed,
    )
    logger.debug("STAI on %s (dim %d), seed %d: start fitness %.6e", obj.name, obj.dim, seed, run.best.fitness)
    for _ in range(max_iters):
        sta1_iteration(run, obj, rng)
    logger.debug("STAI on %s finished: best %.6e after %d evaluations", obj.name, run.best.fitness, counter.count)
    return run
