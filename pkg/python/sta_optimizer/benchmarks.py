"""Benchmark objectives for unconstrained continuous minimization.

All benchmark functions are vectorized: they take an array whose last axis
holds the coordinates (a single state of shape ``(n,)`` or a candidate matrix
of shape ``(k, n)``) and reduce over that axis.
"""

from __future__ import annotations

import csv
import logging
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .core import BoxBounds, ConfigurationError, DimensionError, StateVector, as_state

logger = logging.getLogger(__name__)


class UnknownBenchmarkError(ConfigurationError, KeyError):
    def __str__(self):
        # KeyError would otherwise quote the message
        return str(self.args[0])


@dataclass(frozen=True, eq=False)
class Objective:
    name: str
    dim: int
    bounds: BoxBounds
    function: Callable
    known_min: float | None = None
    vectorized: bool = False

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionError(f"objective dimension must be at least 1, got {self.dim}")
        if self.bounds.dim != self.dim:
            raise DimensionError(f"bounds have dimension {self.bounds.dim}, objective {self.name} has {self.dim}")

    @classmethod
    def from_function(cls, name: str, function: Callable, lower, upper,
                      known_min: float | None = None, vectorized: bool = False) -> Objective:
        """Wrap a user function of one state vector with box bounds."""
        bounds = BoxBounds(lower, upper)
        return cls(name, bounds.dim, bounds, function, known_min, vectorized)

    def __call__(self, x) -> float:
        return eval_benchmark(self, x)


def sphere(x):
    return np.sum(np.square(x), axis=-1)


def rastrigin(x):
    return np.sum(np.square(x) - 10.0 * np.cos(2.0 * np.pi * x) + 10.0, axis=-1)


def griewank(x):
    index = np.arange(1, x.shape[-1] + 1)
    return np.sum(np.square(x), axis=-1) / 4000.0 - np.prod(np.cos(x / np.sqrt(index)), axis=-1) + 1.0


def rosenbrock(x):
    head, tail = x[..., :-1], x[..., 1:]
    return np.sum(100.0 * np.square(tail - np.square(head)) + np.square(head - 1.0), axis=-1)


def schwefel(x):
    return np.sum(-x * np.sin(np.sqrt(np.abs(x))), axis=-1)


def ackley(x):
    mean_square = np.mean(np.square(x), axis=-1)
    mean_cos = np.mean(np.cos(2.0 * np.pi * x), axis=-1)
    return 20.0 + np.e - 20.0 * np.exp(-0.2 * np.sqrt(mean_square)) - np.exp(mean_cos)


def michalewicz(x):
    # negated so that the minima are the negative values usually reported
    index = np.arange(1, x.shape[-1] + 1)
    return -np.sum(np.sin(x) * np.sin(index * np.square(x) / np.pi) ** 20, axis=-1)


def schaffer(x):
    radius_square = np.square(x[..., 0]) + np.square(x[..., 1])
    return 0.5 + (np.square(np.sin(np.sqrt(radius_square))) - 0.5) / np.square(1.0 + 0.001 * radius_square)


def easom(x):
    x1, x2 = x[..., 0], x[..., 1]
    return -np.cos(x1) * np.cos(x2) * np.exp(-(np.square(x1 - np.pi) + np.square(x2 - np.pi)))


def goldstein_price(x):
    x1, x2 = x[..., 0], x[..., 1]
    first = 1.0 + np.square(x1 + x2 + 1.0) * (
        19.0 - 14.0 * x1 + 3.0 * x1**2 - 14.0 * x2 + 6.0 * x1 * x2 + 3.0 * x2**2
    )
    second = 30.0 + np.square(2.0 * x1 - 3.0 * x2) * (
        18.0 - 32.0 * x1 + 12.0 * x1**2 + 48.0 * x2 - 36.0 * x1 * x2 + 27.0 * x2**2
    )
    return first * second


SCHWEFEL_MIN_PER_DIM = -418.9828872724338
SCHWEFEL_ARGMIN = 420.968746359982

# Michalewicz optima as reported for the 2 and 10 dimensional experiments
MICHALEWICZ_KNOWN_MINIMA = {2: -1.8013, 10: -9.6602}


@dataclass(frozen=True)
class BenchmarkInfo:
    function: Callable
    low: float
    high: float
    minimum: Callable[[int], float | None]
    fixed_dim: int | None = None
    min_dim: int = 1


def _zero(dim: int) -> float:
    return 0.0


BENCHMARKS: dict[str, BenchmarkInfo] = {
    "sphere": BenchmarkInfo(sphere, -100.0, 100.0, _zero),
    "rastrigin": BenchmarkInfo(rastrigin, -5.12, 5.12, _zero),
    "griewank": BenchmarkInfo(griewank, -600.0, 600.0, _zero),
    "rosenbrock": BenchmarkInfo(rosenbrock, -30.0, 30.0, _zero, min_dim=2),
    "schwefel": BenchmarkInfo(schwefel, -500.0, 500.0, lambda dim: SCHWEFEL_MIN_PER_DIM * dim),
    "ackley": BenchmarkInfo(ackley, -32.0, 32.0, _zero),
    "michalewicz": BenchmarkInfo(michalewicz, 0.0, math.pi, MICHALEWICZ_KNOWN_MINIMA.get),
    "schaffer": BenchmarkInfo(schaffer, -100.0, 100.0, _zero, fixed_dim=2),
    "easom": BenchmarkInfo(easom, -100.0, 100.0, lambda dim: -1.0, fixed_dim=2),
    "goldstein_price": BenchmarkInfo(goldstein_price, -2.0, 2.0, lambda dim: 3.0, fixed_dim=2),
}


def benchmark_names() -> list[str]:
    return list(BENCHMARKS)


def benchmark_info(name: str) -> BenchmarkInfo:
    try:
        return BENCHMARKS[name]
    except KeyError:
        raise UnknownBenchmarkError(
            f"unknown benchmark {name!r}; valid names are: {', '.join(benchmark_names())}"
        ) from None


def make_benchmark(name: str, dim: int) -> Objective:
    """Build a benchmark objective with its range replicated over dim coordinates.

    Raises:
        UnknownBenchmarkError: name is not one of ``benchmark_names()``.
        DimensionError: dim is not supported by the benchmark (the
            two-dimensional functions only accept 2, Rosenbrock needs at least 2).
    """
    info = benchmark_info(name)
    if isinstance(dim, bool) or not isinstance(dim, (int, np.integer)) or dim < 1:
        raise DimensionError(f"dimension must be a positive integer, got {dim!r}")
    if info.fixed_dim is not None and dim != info.fixed_dim:
        raise DimensionError(f"{name} is only defined for dimension {info.fixed_dim}, got {dim}")
    if dim < info.min_dim:
        raise DimensionError(f"{name} needs dimension of at least {info.min_dim}, got {dim}")
    return Objective(
        name=name,
        dim=int(dim),
        bounds=BoxBounds.uniform(info.low, info.high, int(dim)),
        function=info.function,
        known_min=info.minimum(int(dim)),
        vectorized=True,
    )


def eval_benchmark(obj: Objective, x) -> float:
    state = as_state(x, obj.dim)
    if obj.vectorized:
        return float(obj.function(state[np.newaxis, :])[0])
    return float(obj.function(state))


def _michalewicz_coordinate_optimum(index: int, resolution: int = 200_001) -> float:
    # separable: maximise sin(x) * sin(index * x^2 / pi)^20 on [0, pi] per coordinate
    grid = np.linspace(0.0, np.pi, resolution)
    values = np.sin(grid) * np.sin(index * np.square(grid) / np.pi) ** 20
    best = int(np.argmax(values))
    step = grid[1] - grid[0]
    fine = np.linspace(max(grid[best] - step, 0.0), min(grid[best] + step, np.pi), 2001)
    fine_values = np.sin(fine) * np.sin(index * np.square(fine) / np.pi) ** 20
    return float(fine[int(np.argmax(fine_values))])


def benchmark_argmin(name: str, dim: int) -> StateVector:
    """A known global minimiser of the named benchmark in dim dimensions."""
    objective = make_benchmark(name, dim)
    if name == "rosenbrock":
        return np.ones(dim)
    if name == "schwefel":
        return np.full(dim, SCHWEFEL_ARGMIN)
    if name == "michalewicz":
        return np.array([_michalewicz_coordinate_optimum(index) for index in range(1, dim + 1)])
    if name == "easom":
        return np.array([np.pi, np.pi])
    if name == "goldstein_price":
        return np.array([0.0, -1.0])
    return np.zeros(objective.dim)


def grid_sample(obj: Objective, resolution: int) -> np.ndarray:
    """Evaluate a 2-D objective on a uniform resolution x resolution grid over its bounds.

    Returns:
        An array of shape ``(resolution**2, 3)`` with rows ``(x1, x2, f)``,
        x1 varying slowest.
    """
    if obj.dim != 2:
        raise DimensionError(f"grid sampling needs a two dimensional objective, {obj.name} has {obj.dim}")
    if resolution < 2:
        raise ConfigurationError(f"grid resolution must be at least 2, got {resolution}")
    axis1 = np.linspace(obj.bounds.lower[0], obj.bounds.upper[0], resolution)
    axis2 = np.linspace(obj.bounds.lower[1], obj.bounds.upper[1], resolution)
    mesh1, mesh2 = np.meshgrid(axis1, axis2, indexing="ij")
    nodes = np.column_stack((mesh1.ravel(), mesh2.ravel()))
    if obj.vectorized:
        values = np.asarray(obj.function(nodes), dtype=np.float64)
    else:
        values = np.fromiter((obj.function(node) for node in nodes), dtype=np.float64, count=nodes.shape[0])
    return np.column_stack((nodes, values))


def write_grid(table: np.ndarray, path) -> None:
    """Write a grid_sample table as ``x1,x2,f`` rows at full precision."""
    logger.debug("Writing %d grid rows to %s", table.shape[0], path)
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["x1", "x2", "f"])
        for x1, x2, value in table:
            writer.writerow([repr(float(x1)), repr(float(x2)), repr(float(value))])
