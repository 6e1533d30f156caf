"""Command line for running state transition experiments.

Examples:
    sta-experiment --algo sta1 --fn sphere --dim 2
    sta-experiment --algo sta2 --fn rastrigin --dim 10 --out summary.csv --trace traces/
    sta-experiment --suite suites/two_dimensional.yaml --jobs 4
    sta-experiment --fn easom --grid easom.csv --grid-resolution 201
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import replace

from sta_optimizer import (
    BoundsPolicy,
    ConfigurationError,
    CrossoverKind,
    DimensionError,
    StaError,
    benchmark_info,
    benchmark_names,
    grid_sample,
    make_benchmark,
    write_grid,
)
from sta_optimizer.sta_population import AlphaCSchedule

from .config import Algorithm, ExperimentConfig, build_config, load_suite
from .experiment import run_experiment
from .results import write_results

logger = logging.getLogger(__name__)

DEFAULT_GRID_RESOLUTION = 101
# flags that are not experiment settings
CONTROL_FLAGS = ("suite", "grid", "grid_resolution", "debug", "quiet")


def _se(value: str) -> int | str:
    return value if value == "dim" else int(value)


def build_parser() -> argparse.ArgumentParser:
    # unset flags stay absent from the namespace so defaults come from the algorithm
    parser = argparse.ArgumentParser(
        prog="sta-experiment",
        description="Run state transition algorithm experiments on the benchmark suite",
        argument_default=argparse.SUPPRESS,
    )
    experiment = parser.add_argument_group("experiment")
    experiment.add_argument("--algo", choices=[algorithm.value for algorithm in Algorithm],
                            help="algorithm (default: sta1)")
    experiment.add_argument("--fn", choices=benchmark_names(), help="benchmark function")
    experiment.add_argument("--dim", type=int, help="dimension (implied for two-dimensional functions)")
    experiment.add_argument("--trials", type=int, help="independent trials (default: 30)")
    experiment.add_argument("--iters", type=int, help="iterations per trial (default: 1000)")
    experiment.add_argument("--seed", type=int, help="base seed; trial i uses seed + i (default: 0)")
    experiment.add_argument("--bounds", choices=[policy.value for policy in BoundsPolicy],
                            help="clip candidates to the benchmark range or search unconstrained (default: clip)")
    experiment.add_argument("--jobs", type=int, help="trials run in parallel (default: 1)")

    sta = parser.add_argument_group("state transition parameters (sta1, sta2)")
    sta.add_argument("--se", type=_se, help="search enforcement, or 'dim' (default: 30 for sta1, 10 for sta2)")
    sta.add_argument("--alpha-max", type=float, help="rotation factor at the start of each cycle (default: 1)")
    sta.add_argument("--alpha-min", type=float, help="rotation factor lower limit (default: 1e-4)")
    sta.add_argument("--beta", type=float, help="translation factor (default: 1)")
    sta.add_argument("--gamma", type=float, help="expansion factor (default: 1)")
    sta.add_argument("--delta", type=float, help="axesion factor (default: 1)")
    sta.add_argument("--fc", type=float, help="lessening coefficient (default: 2)")

    population = parser.add_argument_group("population parameters (sta2)")
    population.add_argument("--sn", type=int, help="population size (default: 30)")
    population.add_argument("--cf", type=int, help="communication frequency in iterations (default: 50)")
    population.add_argument("--crossover", choices=[kind.value for kind in CrossoverKind],
                            help="crossover used for communication (default: proposed)")
    population.add_argument("--alpha-c", type=float, help="arithmetical crossover weight (default: 0.5)")
    population.add_argument("--alpha-c-schedule", choices=[schedule.value for schedule in AlphaCSchedule],
                            help="constant weight, or iteration / iters (default: constant)")
    population.add_argument("--eta-c", type=float, help="SBX distribution index (default: 2)")

    baseline = parser.add_argument_group("random optimization (ro)")
    baseline.add_argument("--sigma", type=float, help="Gaussian step size (default: 1)")

    output = parser.add_argument_group("output")
    output.add_argument("--out", help="summary CSV (default: standard output)")
    output.add_argument("--trace", help="directory for per-trial trace files")
    output.add_argument("--curve", help="average fitness curve CSV")
    output.add_argument("--suite", help="YAML file describing several experiments")
    output.add_argument("--grid", help="write a grid sample of a two-dimensional --fn to this CSV and exit")
    output.add_argument("--grid-resolution", type=int, help=f"grid points per axis (default: {DEFAULT_GRID_RESOLUTION})")
    output.add_argument("--debug", action="store_true", help="debug logging")
    output.add_argument("--quiet", action="store_true", help="warnings and errors only")
    return parser


def _settings(args: argparse.Namespace) -> dict:
    return {key: value for key, value in vars(args).items() if key not in CONTROL_FLAGS}


def _experiment_configs(parser: argparse.ArgumentParser, args: argparse.Namespace) -> list[ExperimentConfig]:
    if "grid" in args:
        parser.error("--grid exports a landscape and runs no experiments")
    settings = _settings(args)
    try:
        if "suite" in args:
            extra = sorted(set(settings) - {"jobs"})
            if extra:
                parser.error(f"--suite cannot be combined with --{', --'.join(name.replace('_', '-') for name in extra)}")
            configs = load_suite(args.suite)
            if "jobs" in settings:
                configs = [_with_jobs(cfg, settings["jobs"]) for cfg in configs]
            return configs
        if "fn" not in settings:
            parser.error("--fn is required unless --suite is given")
        return [build_config(settings)]
    except ConfigurationError as e:
        parser.error(str(e))


def _with_jobs(cfg: ExperimentConfig, jobs: int) -> ExperimentConfig:
    updated = replace(cfg, jobs=jobs)
    updated.validate()
    return updated


def parse_cli(argv: list[str] | None = None) -> list[ExperimentConfig]:
    """Parse command line flags into the experiments to run.

    A flag invocation gives one experiment; ``--suite`` gives one per suite
    entry. Unset flags take the algorithm's defaults. Invalid flags, values
    or combinations exit with a usage error (status 2).
    """
    parser = build_parser()
    return _experiment_configs(parser, parser.parse_args(argv))


def _configure_logging(args: argparse.Namespace) -> None:
    level = logging.INFO
    if getattr(args, "debug", False):
        level = logging.DEBUG
    elif getattr(args, "quiet", False):
        level = logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def _export_grid(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if "fn" not in args:
        parser.error("--grid needs --fn")
    resolution = getattr(args, "grid_resolution", DEFAULT_GRID_RESOLUTION)
    if resolution < 2:
        parser.error(f"--grid-resolution must be at least 2, got {resolution}")
    dim = getattr(args, "dim", benchmark_info(args.fn).fixed_dim or 2)
    try:
        table = grid_sample(make_benchmark(args.fn, dim), resolution)
    except DimensionError as e:
        parser.error(str(e))
    try:
        write_grid(table, args.grid)
    except OSError as e:
        logger.error("cannot write %s: %s", args.grid, e.strerror)
        return 1
    logger.info("Wrote %d grid points of %s to %s", len(table), args.fn, args.grid)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args)
    if "grid" in args:
        return _export_grid(parser, args)
    configs = _experiment_configs(parser, args)

    progress = not getattr(args, "quiet", False) and sys.stderr.isatty()
    written = set()
    stdout_header = True
    for cfg in configs:
        try:
            result = run_experiment(cfg, progress=progress)
            if cfg.out is None:
                write_results(result, sys.stdout, append=not stdout_header)
                stdout_header = False
            else:
                write_results(result, append=cfg.out in written)
                written.add(cfg.out)
        except ConfigurationError as e:
            parser.error(str(e))
        except (StaError, OSError) as e:
            logger.error("%s", e)
            return 1
    return 0


if __name__ == '__main__':
    sys.exit(main())
