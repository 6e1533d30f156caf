# Version: 0.1.0
"""Shared types for the state transition optimizers.

Everything an optimizer needs besides its operators lives here: the error
classes, box bounds, evaluated states, the transformation parameters, the
seedable random stream and the evaluation counter.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import StrEnum
from typing import TYPE_CHECKING

import numpy as np
import numpy.typing as npt

if TYPE_CHECKING:
    from .benchmarks import Objective

logger = logging.getLogger(__name__)

StateVector = npt.NDArray[np.float64]


class StaError(Exception):
    pass


class ConfigurationError(StaError, ValueError):
    pass


class DimensionError(StaError, ValueError):
    pass


class BoundsPolicy(StrEnum):
    CLIP = "clip"
    NONE = "none"


def as_state(x, dim: int | None = None) -> StateVector:
    """Convert x to a float64 state vector, checking its length against dim."""
    state = np.asarray(x, dtype=np.float64)
    if state.ndim != 1 or state.size == 0:
        raise DimensionError(f"state must be a non-empty 1-D vector, got shape {state.shape}")
    if dim is not None and state.size != dim:
        raise DimensionError(f"state has dimension {state.size}, expected {dim}")
    return state


@dataclass(frozen=True, eq=False)
class BoxBounds:
    lower: StateVector
    upper: StateVector

    def __post_init__(self):
        lower = np.asarray(self.lower, dtype=np.float64)
        upper = np.asarray(self.upper, dtype=np.float64)
        if lower.ndim != 1 or lower.shape != upper.shape or lower.size == 0:
            raise DimensionError(
                f"bounds must be two 1-D vectors of equal length, got {lower.shape} and {upper.shape}"
            )
        if not (np.all(np.isfinite(lower)) and np.all(np.isfinite(upper))):
            raise ConfigurationError("bounds must be finite")
        if np.any(lower >= upper):
            bad = int(np.argmax(lower >= upper))
            raise ConfigurationError(
                f"lower bound must be below upper bound in every coordinate "
                f"(coordinate {bad}: {lower[bad]} >= {upper[bad]})"
            )
        # frozen dataclass: normalise the arrays in place of the raw inputs
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @classmethod
    def uniform(cls, low: float, high: float, dim: int) -> BoxBounds:
        """The same [low, high] range replicated over dim coordinates."""
        if dim < 1:
            raise DimensionError(f"dimension must be at least 1, got {dim}")
        return cls(np.full(dim, low, dtype=np.float64), np.full(dim, high, dtype=np.float64))

    @property
    def dim(self) -> int:
        return self.lower.size

    def contains(self, x) -> bool:
        state = np.asarray(x, dtype=np.float64)
        return bool(np.all(state >= self.lower) and np.all(state <= self.upper))


@dataclass(frozen=True, eq=False)
class EvaluatedState:
    state: StateVector
    fitness: float

    def __repr__(self):
        return f"EvaluatedState(fitness={self.fitness!r}, state={np.array2string(self.state, precision=6)})"


@dataclass(frozen=True)
class StaParams:
    """Transformation factors and schedule of the state transition algorithm.

    Defaults are the individual-variant experiment settings: SE 30, the
    rotation factor decaying from 1 to 1e-4 with base 2, and unit
    translation, expansion and axesion factors.
    """

    se: int = 30
    alpha: float = 1.0
    alpha_min: float = 1e-4
    alpha_max: float = 1.0
    beta: float = 1.0
    gamma: float = 1.0
    delta: float = 1.0
    fc: float = 2.0

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        if isinstance(self.se, bool) or not isinstance(self.se, (int, np.integer)) or self.se < 1:
            raise ConfigurationError(f"search enforcement must be a positive integer, got {self.se!r}")
        for name in ("alpha", "alpha_min", "alpha_max", "beta", "gamma", "delta", "fc"):
            value = getattr(self, name)
            if not math.isfinite(value) or value <= 0:
                raise ConfigurationError(f"{name} must be a positive finite number, got {value!r}")
        if not self.alpha_min <= self.alpha <= self.alpha_max:
            raise ConfigurationError(
                f"alpha must satisfy alpha_min <= alpha <= alpha_max, "
                f"got {self.alpha_min} <= {self.alpha} <= {self.alpha_max}"
            )
        if self.fc <= 1:
            raise ConfigurationError(f"lessening coefficient fc must exceed 1, got {self.fc}")


class RngStream:
    """A seeded random stream; identical seeds give identical draw sequences."""

    def __init__(self, seed: int):
        if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)):
            raise ConfigurationError(f"seed must be an integer, got {seed!r}")
        if not 0 <= seed < 2**64:
            raise ConfigurationError(f"seed must be in [0, 2**64), got {seed}")
        self.seed = int(seed)
        self.generator = np.random.default_rng(self.seed)

    def uniform01(self, size=None):
        return self.generator.random(size)

    def uniform_pm1(self, size=None):
        return self.generator.uniform(-1.0, 1.0, size)

    def normal(self, size=None):
        return self.generator.standard_normal(size)

    def integers(self, high: int, size=None):
        """Uniform integers in [0, high)."""
        return self.generator.integers(0, high, size)


class EvalCounter:
    def __init__(self):
        self.count = 0

    def increment(self, by: int = 1) -> None:
        if by < 0:
            raise ValueError("evaluation counter cannot decrease")
        self.count += by

    def __repr__(self):
        return f"EvalCounter(count={self.count})"


def _finite_or_inf(values: np.ndarray) -> np.ndarray:
    finite = np.isfinite(values)
    if not np.all(finite):
        if logger.isEnabledFor(logging.DEBUG):
            logger.debug("Treating %d non-finite fitness value(s) as +inf", int(np.count_nonzero(~finite)))
        values = np.where(finite, values, np.inf)
    return values


def evaluate(obj: Objective, x, counter: EvalCounter) -> float:
    """Evaluate one state, counting the call. Non-finite values come back as +inf."""
    state = as_state(x, obj.dim)
    value = float(obj.function(state[np.newaxis, :])[0]) if obj.vectorized else float(obj.function(state))
    counter.increment()
    if not math.isfinite(value):
        logger.debug("Objective %s returned %r; treating it as +inf", obj.name, value)
        return math.inf
    return value


def evaluate_many(obj: Objective, candidates, counter: EvalCounter) -> np.ndarray:
    """Evaluate each row of a candidate matrix; fitnesses come back in row order."""
    matrix = np.asarray(candidates, dtype=np.float64)
    if matrix.ndim != 2 or matrix.shape[1] != obj.dim:
        raise DimensionError(f"candidates must have shape (k, {obj.dim}), got {matrix.shape}")
    if matrix.shape[0] == 0:
        return np.empty(0, dtype=np.float64)
    if obj.vectorized:
        values = np.asarray(obj.function(matrix), dtype=np.float64).reshape(matrix.shape[0])
    else:
        values = np.fromiter((obj.function(row) for row in matrix), dtype=np.float64, count=matrix.shape[0])
    counter.increment(matrix.shape[0])
    return _finite_or_inf(values)


def clip_to_bounds(x, bounds: BoxBounds) -> StateVector:
    """Project each coordinate (or each row of a candidate matrix) into the box."""
    state = np.asarray(x, dtype=np.float64)
    if state.shape[-1] != bounds.dim:
        raise DimensionError(f"state has dimension {state.shape[-1]}, bounds have {bounds.dim}")
    return np.clip(state, bounds.lower, bounds.upper)


def sample_uniform_in_bounds(bounds: BoxBounds, rng: RngStream) -> StateVector:
    return bounds.lower + (bounds.upper - bounds.lower) * rng.uniform01(bounds.dim)
