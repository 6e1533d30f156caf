"""Population state transition algorithm (STAII).

SN states learn on their own with the STAI rounds under a shared rotation
factor; every CF iterations each state exchanges information with every
other state through crossover, and the SN best of parents and offspring
survive.

The crossover functions broadcast over leading axes: ``x1`` and ``x2`` may
be single states of shape ``(n,)`` or stacks of parent pairs ``(p, n)``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import StrEnum
from typing import TYPE_CHECKING

import numpy as np

from .core import (
    BoundsPolicy,
    BoxBounds,
    ConfigurationError,
    DimensionError,
    EvalCounter,
    EvaluatedState,
    RngStream,
    StaParams,
    clip_to_bounds,
    evaluate,
    evaluate_many,
    sample_uniform_in_bounds,
)
from .sta_basic import alpha_for_iteration, alpha_next, check_max_iters, enforcement_bounds, self_learning

if TYPE_CHECKING:
    from .benchmarks import Objective

logger = logging.getLogger(__name__)

DEFAULT_SN = 30
DEFAULT_CF = 50
DEFAULT_STA2_PARAMS = StaParams(se=10)


class CrossoverKind(StrEnum):
    PROPOSED = "proposed"
    ARITHMETICAL = "arithmetical"
    LINEAR = "linear"
    SBX = "sbx"


class AlphaCSchedule(StrEnum):
    CONSTANT = "constant"
    AGE = "age"


@dataclass(frozen=True)
class Crossover:
    """The crossover used when states communicate, with its parameters.

    alpha_c is the arithmetical mixing weight; with the ``age`` schedule it is
    replaced by iteration / max_iters, so offspring resemble their first
    parent more as the population ages. eta_c is the SBX distribution index.
    """

    kind: CrossoverKind = CrossoverKind.PROPOSED
    alpha_c: float = 0.5
    alpha_c_schedule: AlphaCSchedule = AlphaCSchedule.CONSTANT
    eta_c: float = 2.0

    def __post_init__(self):
        try:
            object.__setattr__(self, "kind", CrossoverKind(self.kind))
            object.__setattr__(self, "alpha_c_schedule", AlphaCSchedule(self.alpha_c_schedule))
        except ValueError as e:
            raise ConfigurationError(str(e)) from None
        if not 0.0 <= self.alpha_c <= 1.0:
            raise ConfigurationError(f"arithmetical crossover weight must be in [0, 1], got {self.alpha_c}")
        if not self.eta_c > 0:
            raise ConfigurationError(f"SBX distribution index must be positive, got {self.eta_c}")

    @property
    def offspring_per_pair(self) -> int:
        return 3 if self.kind is CrossoverKind.LINEAR else 2

    def weight_at(self, iteration: int, max_iters: int) -> float:
        if self.alpha_c_schedule is AlphaCSchedule.AGE:
            return min(iteration / max_iters, 1.0)
        return self.alpha_c


@dataclass
class Population:
    states: list[EvaluatedState]
    sn: int
    cf: int

    @property
    def best(self) -> EvaluatedState:
        # min() keeps the first of equal fitnesses
        return min(self.states, key=lambda member: member.fitness)


@dataclass
class StaIIRun:
    params: StaParams
    max_iters: int
    population: Population
    crossover: Crossover
    counter: EvalCounter
    alpha: float
    bounds: BoxBounds | None = None
    seed: int | None = None
    exchanges: int = 0
    history: list[float] = field(default_factory=list)
    eval_history: list[int] = field(default_factory=list)

    @property
    def best(self) -> EvaluatedState:
        return self.population.best

    @property
    def iterations(self) -> int:
        return len(self.history)


def _parents(x1, x2) -> tuple[np.ndarray, np.ndarray]:
    first = np.asarray(x1, dtype=np.float64)
    second = np.asarray(x2, dtype=np.float64)
    if first.shape != second.shape:
        raise DimensionError(f"crossover parents differ in shape: {first.shape} and {second.shape}")
    return first, second


def crossover_proposed(x1, x2, rng: RngStream) -> tuple[np.ndarray, np.ndarray]:
    """Each offspring component is copied from one parent, chosen by a fair coin.

    The coins for the two offspring are drawn independently per component.
    """
    first, second = _parents(x1, x2)
    keep_first = rng.integers(2, first.shape) == 1
    keep_first_too = rng.integers(2, first.shape) == 1
    return np.where(keep_first, first, second), np.where(keep_first_too, first, second)


def crossover_arithmetical(x1, x2, alpha_c: float) -> tuple[np.ndarray, np.ndarray]:
    if not 0.0 <= alpha_c <= 1.0:
        raise ValueError(f"arithmetical crossover weight must be in [0, 1], got {alpha_c}")
    first, second = _parents(x1, x2)
    return alpha_c * first + (1.0 - alpha_c) * second, alpha_c * second + (1.0 - alpha_c) * first


def crossover_linear(x1, x2) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    first, second = _parents(x1, x2)
    return 1.5 * first - 0.5 * second, -0.5 * first + 1.5 * second, (first + second) / 2.0


def sbx_beta_from_uniform(u, eta_c: float):
    """Inverse CDF of the SBX spread factor density for a uniform draw u in [0, 1)."""
    u = np.asarray(u, dtype=np.float64)
    exponent = 1.0 / (eta_c + 1.0)
    # both branches are evaluated by np.where; keep the unused one finite
    contracting = np.power(2.0 * np.minimum(u, 0.5), exponent)
    expanding = np.power(1.0 / (2.0 * (1.0 - np.maximum(u, 0.5))), exponent)
    return np.where(u <= 0.5, contracting, expanding)


def sbx_sample_beta(eta_c: float, rng: RngStream, size=None):
    if not eta_c > 0:
        raise ValueError(f"SBX distribution index must be positive, got {eta_c}")
    beta = sbx_beta_from_uniform(rng.uniform01(size), eta_c)
    return float(beta) if size is None else beta


def crossover_sbx(x1, x2, eta_c: float, rng: RngStream) -> tuple[np.ndarray, np.ndarray]:
    first, second = _parents(x1, x2)
    beta = sbx_sample_beta(eta_c, rng, first.shape)
    return (
        0.5 * ((1.0 - beta) * first + (1.0 + beta) * second),
        0.5 * ((1.0 + beta) * first + (1.0 - beta) * second),
    )


def crossover_offspring(x1, x2, crossover: Crossover, rng: RngStream, alpha_c: float | None = None) -> np.ndarray:
    """Offspring of each parent pair, pair-major: shape ``(p * offspring_per_pair, n)``."""
    if crossover.kind is CrossoverKind.PROPOSED:
        children = crossover_proposed(x1, x2, rng)
    elif crossover.kind is CrossoverKind.ARITHMETICAL:
        children = crossover_arithmetical(x1, x2, crossover.alpha_c if alpha_c is None else alpha_c)
    elif crossover.kind is CrossoverKind.LINEAR:
        children = crossover_linear(x1, x2)
    else:
        children = crossover_sbx(x1, x2, crossover.eta_c, rng)
    stacked = np.stack(children, axis=-2)
    return stacked.reshape(-1, stacked.shape[-1])


def communicate(pop: Population, obj: Objective, crossover: Crossover, rng: RngStream,
                counter: EvalCounter, bounds: BoxBounds | None = None,
                alpha_c: float | None = None) -> Population:
    """Cross every unordered pair of states and keep the SN best of parents and offspring.

    Ties keep the earlier entry: parents in population order, then offspring
    in generation order.
    """
    if pop.sn < 2 or len(pop.states) < 2:
        raise ValueError(f"communication needs at least two states, got {len(pop.states)}")
    parents = np.stack([member.state for member in pop.states])
    first_index, second_index = np.triu_indices(len(pop.states), k=1)
    offspring = crossover_offspring(parents[first_index], parents[second_index], crossover, rng, alpha_c)
    if bounds is not None:
        offspring = clip_to_bounds(offspring, bounds)
    offspring_fitness = evaluate_many(obj, offspring, counter)

    pool_states = np.concatenate((parents, offspring))
    pool_fitness = np.concatenate(([member.fitness for member in pop.states], offspring_fitness))
    survivors = np.argsort(pool_fitness, kind="stable")[: pop.sn]
    states = [
        pop.states[index] if index < len(pop.states)
        else EvaluatedState(pool_states[index].copy(), float(pool_fitness[index]))
        for index in survivors
    ]
    return Population(states, pop.sn, pop.cf)


def _check_population_settings(sn: int, cf: int) -> None:
    for name, value in (("sn", sn), ("cf", cf)):
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            raise ConfigurationError(f"{name} must be a positive integer, got {value!r}")


def sta2_run(obj: Objective, params: StaParams = DEFAULT_STA2_PARAMS, sn: int = DEFAULT_SN,
             cf: int = DEFAULT_CF, max_iters: int = 1000, seed: int = 0,
             crossover: Crossover | None = None,
             bounds_policy: BoundsPolicy | str = BoundsPolicy.CLIP) -> StaIIRun:
    """Run STAII: SN self-learning states with an exchange every CF iterations.

    With sn = 1 no exchange ever happens and the run draws exactly the random
    numbers STAI would, so both produce the same history for the same seed.

    Raises:
        ConfigurationError: invalid settings; raised before the first evaluation.
    """
    params.validate()
    check_max_iters(max_iters)
    _check_population_settings(sn, cf)
    crossover = crossover or Crossover()
    bounds = enforcement_bounds(obj, bounds_policy)
    rng = RngStream(seed)
    counter = EvalCounter()

    states = []
    for _ in range(sn):
        start = sample_uniform_in_bounds(obj.bounds, rng)
        states.append(EvaluatedState(start, evaluate(obj, start, counter)))
    run = StaIIRun(
        params=params,
        max_iters=max_iters,
        population=Population(states, sn, cf),
        crossover=crossover,
        counter=counter,
        alpha=params.alpha,
        bounds=bounds,
        seed=seed,
    )
    logger.debug("STAII on %s (dim %d), SN %d, CF %d, seed %d", obj.name, obj.dim, sn, cf, seed)

    for iteration in range(1, max_iters + 1):
        alpha = alpha_for_iteration(run.alpha, params)
        run.population.states = [
            self_learning(obj, member, params, alpha, rng, counter, bounds) for member in run.population.states
        ]
        run.alpha = alpha_next(alpha, params)
        if sn > 1 and iteration % cf == 0:
            alpha_c = crossover.weight_at(iteration, max_iters)
            run.population = communicate(run.population, obj, crossover, rng, counter, bounds, alpha_c)
            run.exchanges += 1
            if logger.isEnabledFor(logging.DEBUG):
                logger.debug("Exchange at iteration %d: best %.6e", iteration, run.best.fitness)
        run.history.append(run.best.fitness)
        run.eval_history.append(counter.count)

    logger.debug("STAII on %s finished: best %.6e after %d evaluations", obj.name, run.best.fitness, counter.count)
    return run
