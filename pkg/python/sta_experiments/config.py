"""Experiment configuration: one ExperimentConfig per experiment, built from CLI
flags or from the entries of a YAML suite file.

Suite file schema::

    defaults:            # optional, applied to every experiment
      trials: 30
      iters: 1000
    experiments:         # required, non-empty list
      - {algo: sta1, fn: sphere, dim: 2}
      - {algo: sta2, fn: rastrigin, dim: 10, se: dim}

Keys mirror the long CLI flags; dashes and underscores are interchangeable.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import StrEnum
from typing import Any

import yaml

from sta_optimizer import (
    DEFAULT_CF,
    DEFAULT_SN,
    DEFAULT_STA2_PARAMS,
    BoundsPolicy,
    ConfigurationError,
    Crossover,
    DimensionError,
    StaParams,
    benchmark_info,
    make_benchmark,
)
from sta_optimizer.baseline import DEFAULT_STEP_SIGMA

logger = logging.getLogger(__name__)

DEFAULT_TRIALS = 30
DEFAULT_ITERS = 1000
DEFAULT_SEED = 0

STA_PARAM_KEYS = ("se", "alpha_max", "alpha_min", "beta", "gamma", "delta", "fc")
POPULATION_KEYS = ("sn", "cf", "crossover", "alpha_c", "alpha_c_schedule", "eta_c")
BASELINE_KEYS = ("sigma",)
OUTPUT_KEYS = ("out", "trace", "curve")
SUITE_KEYS = frozenset(
    ("algo", "fn", "dim", "trials", "iters", "seed", "bounds", "jobs")
    + STA_PARAM_KEYS + POPULATION_KEYS + BASELINE_KEYS + OUTPUT_KEYS
)
SE_FROM_DIMENSION = "dim"


class SuiteError(ConfigurationError):
    pass


class Algorithm(StrEnum):
    STA1 = "sta1"
    STA2 = "sta2"
    RO = "ro"


@dataclass(frozen=True)
class ExperimentConfig:
    """A single experiment: one algorithm on one benchmark, repeated over trials.

    Trial i runs with seed base_seed + i. params is ignored by the random
    optimization baseline, which only uses step_sigma.
    """

    algorithm: Algorithm
    function: str
    dim: int
    trials: int = DEFAULT_TRIALS
    max_iters: int = DEFAULT_ITERS
    base_seed: int = DEFAULT_SEED
    params: StaParams = field(default_factory=StaParams)
    sn: int = DEFAULT_SN
    cf: int = DEFAULT_CF
    crossover: Crossover = field(default_factory=Crossover)
    step_sigma: float = DEFAULT_STEP_SIGMA
    bounds_policy: BoundsPolicy = BoundsPolicy.CLIP
    out: str | None = None
    trace_dir: str | None = None
    curve: str | None = None
    jobs: int = 1

    @property
    def label(self) -> str:
        return f"{self.function}_{self.dim}d_{self.algorithm}"

    def validate(self, check_benchmark: bool = True) -> None:
        """Raises ConfigurationError when the experiment cannot run.

        check_benchmark=False skips the benchmark lookup for experiments run
        on a user objective.
        """
        try:
            Algorithm(self.algorithm)
            BoundsPolicy(self.bounds_policy)
        except ValueError as e:
            raise ConfigurationError(str(e)) from None
        for name in ("trials", "max_iters", "sn", "cf", "jobs"):
            _check_positive_int(name, getattr(self, name))
        if isinstance(self.base_seed, bool) or not isinstance(self.base_seed, int) or self.base_seed < 0:
            raise ConfigurationError(f"seed must be a non-negative integer, got {self.base_seed!r}")
        if self.base_seed + self.trials - 1 >= 2**64:
            raise ConfigurationError(f"seeds {self.base_seed}..{self.base_seed + self.trials - 1} exceed 64 bits")
        if check_benchmark:
            try:
                make_benchmark(self.function, self.dim)
            except DimensionError as e:
                raise ConfigurationError(str(e)) from e
        self.params.validate()
        if not (math.isfinite(self.step_sigma) and self.step_sigma > 0):
            raise ConfigurationError(f"sigma must be a positive finite number, got {self.step_sigma!r}")


def _check_positive_int(name: str, value) -> None:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ConfigurationError(f"{name} must be a positive integer, got {value!r}")


def _integer(settings: Mapping[str, Any], key: str, default: int) -> int:
    value = settings.get(key, default)
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigurationError(f"{key} must be an integer, got {value!r}")
    return value


def _real(settings: Mapping[str, Any], key: str, default: float) -> float:
    value = settings.get(key, default)
    if isinstance(value, bool):
        raise ConfigurationError(f"{key} must be a number, got {value!r}")
    try:
        return float(value)
    except (TypeError, ValueError):
        raise ConfigurationError(f"{key} must be a number, got {value!r}") from None


def _path(settings: Mapping[str, Any], key: str) -> str | None:
    value = settings.get(key)
    return None if value is None else str(value)


def _dimension(settings: Mapping[str, Any], function: str) -> int:
    fixed = benchmark_info(function).fixed_dim
    if "dim" not in settings and fixed is None:
        raise ConfigurationError(f"{function} needs a dimension (dim)")
    return _integer(settings, "dim", fixed)


def _search_enforcement(settings: Mapping[str, Any], dim: int, default: int) -> int:
    se = settings.get("se", default)
    if se == SE_FROM_DIMENSION:
        return dim
    return _integer(settings, "se", default)


def _reject(algorithm: Algorithm, settings: Mapping[str, Any], keys: tuple[str, ...]) -> None:
    given = [key for key in keys if key in settings]
    if given:
        raise ConfigurationError(f"{', '.join(given)} not applicable to --algo {algorithm}")


def build_config(settings: Mapping[str, Any]) -> ExperimentConfig:
    """Build and validate an experiment from suite-style settings.

    Unset settings take the defaults of the chosen algorithm: SE 30 for
    sta1, SE 10 with SN 30 and CF 50 for sta2. Settings that do not apply
    to the algorithm are rejected.

    Raises:
        ConfigurationError: invalid or inapplicable settings.
    """
    try:
        algorithm = Algorithm(settings.get("algo", Algorithm.STA1))
        bounds_policy = BoundsPolicy(settings.get("bounds", BoundsPolicy.CLIP))
    except ValueError as e:
        raise ConfigurationError(str(e)) from None
    if "fn" not in settings:
        raise ConfigurationError("an experiment needs a benchmark function (fn)")
    function = str(settings["fn"])
    dim = _dimension(settings, function)

    if algorithm is not Algorithm.STA2:
        _reject(algorithm, settings, POPULATION_KEYS)
    if algorithm is Algorithm.RO:
        _reject(algorithm, settings, STA_PARAM_KEYS)
    else:
        _reject(algorithm, settings, BASELINE_KEYS)

    defaults = DEFAULT_STA2_PARAMS if algorithm is Algorithm.STA2 else StaParams()
    alpha_max = _real(settings, "alpha_max", defaults.alpha_max)
    params = StaParams(
        se=_search_enforcement(settings, dim, defaults.se),
        alpha=alpha_max,
        alpha_min=_real(settings, "alpha_min", defaults.alpha_min),
        alpha_max=alpha_max,
        beta=_real(settings, "beta", defaults.beta),
        gamma=_real(settings, "gamma", defaults.gamma),
        delta=_real(settings, "delta", defaults.delta),
        fc=_real(settings, "fc", defaults.fc),
    )
    crossover = Crossover(
        kind=settings.get("crossover", Crossover.kind),
        alpha_c=_real(settings, "alpha_c", Crossover.alpha_c),
        alpha_c_schedule=settings.get("alpha_c_schedule", Crossover.alpha_c_schedule),
        eta_c=_real(settings, "eta_c", Crossover.eta_c),
    )
    config = ExperimentConfig(
        algorithm=algorithm,
        function=function,
        dim=dim,
        trials=_integer(settings, "trials", DEFAULT_TRIALS),
        max_iters=_integer(settings, "iters", DEFAULT_ITERS),
        base_seed=_integer(settings, "seed", DEFAULT_SEED),
        params=params,
        sn=_integer(settings, "sn", DEFAULT_SN),
        cf=_integer(settings, "cf", DEFAULT_CF),
        crossover=crossover,
        step_sigma=_real(settings, "sigma", DEFAULT_STEP_SIGMA),
        bounds_policy=bounds_policy,
        out=_path(settings, "out"),
        trace_dir=_path(settings, "trace"),
        curve=_path(settings, "curve"),
        jobs=_integer(settings, "jobs", 1),
    )
    config.validate()
    return config


def normalize_keys(entry: Mapping[str, Any], where: str) -> dict[str, Any]:
    """Map dashed keys to underscores, rejecting keys that are not suite settings."""
    if not isinstance(entry, Mapping):
        raise SuiteError(f"{where}: expected a mapping of settings, got {type(entry).__name__}")
    normalized = {}
    for key, value in entry.items():
        name = str(key).replace("-", "_")
        if name not in SUITE_KEYS:
            raise SuiteError(f"{where}: unknown setting {key!r}")
        normalized[name] = value
    return normalized


def load_suite(path: str) -> list[ExperimentConfig]:
    """Read a YAML suite file into validated experiments, in file order.

    Raises:
        SuiteError: the file cannot be read or parsed, or an entry is invalid;
            the message names the file and the entry.
    """
    try:
        with open(path) as handle:
            document = yaml.safe_load(handle)
    except OSError as e:
        raise SuiteError(f"{path}: cannot read suite file: {e.strerror}") from e
    except yaml.YAMLError as e:
        raise SuiteError(f"{path}: invalid YAML: {e}") from e

    if not isinstance(document, Mapping):
        raise SuiteError(f"{path}: a suite must be a mapping with an 'experiments' list")
    unexpected = set(document) - {"defaults", "experiments"}
    if unexpected:
        raise SuiteError(f"{path}: unknown top-level keys: {', '.join(sorted(map(str, unexpected)))}")
    defaults = normalize_keys(document.get("defaults") or {}, f"{path}: defaults")
    entries = document.get("experiments")
    if not isinstance(entries, list) or not entries:
        raise SuiteError(f"{path}: 'experiments' must be a non-empty list")

    configs = []
    for index, entry in enumerate(entries, start=1):
        where = f"{path}: experiment {index}"
        settings = {**defaults, **normalize_keys(entry, where)}
        try:
            configs.append(build_config(settings))
        except ConfigurationError as e:
            raise SuiteError(f"{where}: {e}") from e
    logger.debug("Loaded %d experiments from %s", len(configs), path)
    return configs
