"""State transformation operators and greedy selection.

Each operator turns one incumbent into a candidate set of ``se`` states, one
fresh random draw per candidate. Candidates are returned as an ``(se, n)``
matrix; when bounds are given they are clipped after generation, so the
geometric properties of the operators hold for the unclipped candidates.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import StrEnum
from typing import TYPE_CHECKING

import numpy as np

from .core import (
    BoxBounds,
    DimensionError,
    EvalCounter,
    EvaluatedState,
    RngStream,
    StaParams,
    StateVector,
    clip_to_bounds,
    evaluate_many,
)

if TYPE_CHECKING:
    from .benchmarks import Objective

logger = logging.getLogger(__name__)


class OperatorKind(StrEnum):
    ROTATION = "rotation"
    TRANSLATION = "translation"
    EXPANSION = "expansion"
    AXESION = "axesion"


@dataclass(frozen=True, eq=False)
class CandidateSet:
    kind: OperatorKind
    candidates: np.ndarray

    def __len__(self):
        return self.candidates.shape[0]

    @property
    def empty(self) -> bool:
        return len(self) == 0


def _finish(kind: OperatorKind, candidates: np.ndarray, bounds: BoxBounds | None) -> CandidateSet:
    if bounds is not None:
        candidates = clip_to_bounds(candidates, bounds)
    return CandidateSet(kind, candidates)


def _check_factor(name: str, value: float) -> None:
    if not value > 0:
        raise ValueError(f"{name} must be positive, got {value}")


def _check_se(se: int) -> None:
    if se < 1:
        raise ValueError(f"search enforcement must be at least 1, got {se}")


def rotate_candidates(x: StateVector, alpha: float, se: int, rng: RngStream,
                      bounds: BoxBounds | None = None) -> CandidateSet:
    """Search inside the hypersphere of radius alpha around x.

    Each candidate is ``x + alpha / (n * ||x||) * R @ x`` with a fresh n x n
    matrix R of uniform [-1, 1] entries, so ``||candidate - x|| <= alpha``.
    At ``x = 0`` every candidate equals x.
    """
    _check_factor("alpha", alpha)
    _check_se(se)
    dim = x.size
    norm = np.linalg.norm(x)
    if norm == 0.0:
        return _finish(OperatorKind.ROTATION, np.tile(x, (se, 1)), bounds)
    rotation = rng.uniform_pm1((se, dim, dim))
    steps = rotation @ x
    return _finish(OperatorKind.ROTATION, x + (alpha / (dim * norm)) * steps, bounds)


def translate_candidates(x_new: StateVector, x_old: StateVector, beta: float, se: int, rng: RngStream,
                         bounds: BoxBounds | None = None) -> CandidateSet:
    """Search along the ray from x_new in the direction x_new - x_old, up to length beta.

    Returns an empty candidate set when x_new equals x_old (no direction).
    """
    _check_factor("beta", beta)
    _check_se(se)
    if x_new.shape != x_old.shape:
        raise DimensionError(f"translation endpoints differ in shape: {x_new.shape} and {x_old.shape}")
    direction = x_new - x_old
    norm = np.linalg.norm(direction)
    if norm == 0.0:
        return CandidateSet(OperatorKind.TRANSLATION, np.empty((0, x_new.size)))
    lengths = rng.uniform01(se)
    candidates = x_new + beta * lengths[:, np.newaxis] * (direction / norm)
    return _finish(OperatorKind.TRANSLATION, candidates, bounds)


def expand_candidates(x: StateVector, gamma: float, se: int, rng: RngStream,
                      bounds: BoxBounds | None = None) -> CandidateSet:
    """Scale every coordinate by ``1 + gamma * g`` with independent standard normal g."""
    _check_factor("gamma", gamma)
    _check_se(se)
    scales = 1.0 + gamma * rng.normal((se, x.size))
    return _finish(OperatorKind.EXPANSION, x * scales, bounds)


def axes_candidates(x: StateVector, delta: float, se: int, rng: RngStream,
                    bounds: BoxBounds | None = None) -> CandidateSet:
    """Scale one uniformly chosen coordinate per candidate by ``1 + delta * g``."""
    _check_factor("delta", delta)
    _check_se(se)
    axes = rng.integers(x.size, se)
    scales = 1.0 + delta * rng.normal(se)
    candidates = np.tile(x, (se, 1))
    rows = np.arange(se)
    candidates[rows, axes] = candidates[rows, axes] * scales
    return _finish(OperatorKind.AXESION, candidates, bounds)


def greedy_select(obj: Objective, incumbent: EvaluatedState, candidates: CandidateSet,
                  counter: EvalCounter) -> tuple[EvaluatedState, bool]:
    """Evaluate every candidate and keep the best one only if it is strictly better.

    Ties among candidates go to the lowest index.
    """
    if candidates.empty:
        raise ValueError("greedy selection needs at least one candidate")
    fitnesses = evaluate_many(obj, candidates.candidates, counter)
    best = int(np.argmin(fitnesses))
    if fitnesses[best] < incumbent.fitness:
        return EvaluatedState(candidates.candidates[best].copy(), float(fitnesses[best])), True
    return incumbent, False


def generate_candidates(kind: OperatorKind, x: StateVector, params: StaParams, alpha: float,
                        rng: RngStream, bounds: BoxBounds | None = None) -> CandidateSet:
    if kind is OperatorKind.ROTATION:
        return rotate_candidates(x, alpha, params.se, rng, bounds)
    if kind is OperatorKind.EXPANSION:
        return expand_candidates(x, params.gamma, params.se, rng, bounds)
    if kind is OperatorKind.AXESION:
        return axes_candidates(x, params.delta, params.se, rng, bounds)
    raise ValueError(f"{kind} cannot run as a standalone transformation round")


def transform_round(obj: Objective, best: EvaluatedState, kind: OperatorKind, params: StaParams,
                    rng: RngStream, counter: EvalCounter, alpha: float | None = None,
                    bounds: BoxBounds | None = None) -> EvaluatedState:
    """One transformation followed, on improvement, by a translation along the gain.

    Consumes ``se`` evaluations, or ``2 * se`` when the transformation improved
    the incumbent. alpha defaults to ``params.alpha``.
    """
    alpha = params.alpha if alpha is None else alpha
    candidates = generate_candidates(kind, best.state, params, alpha, rng, bounds)
    improved_state, improved = greedy_select(obj, best, candidates, counter)
    if not improved:
        return best
    along = translate_candidates(improved_state.state, best.state, params.beta, params.se, rng, bounds)
    if along.empty:
        return improved_state
    final_state, _ = greedy_select(obj, improved_state, along, counter)
    return final_state
