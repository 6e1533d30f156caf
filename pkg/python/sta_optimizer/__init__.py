from .baseline import RoRun, random_optimization_run
from .benchmarks import (
    BENCHMARKS,
    Objective,
    UnknownBenchmarkError,
    benchmark_argmin,
    benchmark_info,
    benchmark_names,
    eval_benchmark,
    grid_sample,
    make_benchmark,
    write_grid,
)
from .core import (
    BoundsPolicy,
    BoxBounds,
    ConfigurationError,
    DimensionError,
    EvalCounter,
    EvaluatedState,
    RngStream,
    StaError,
    StaParams,
    clip_to_bounds,
    evaluate,
    evaluate_many,
    sample_uniform_in_bounds,
)
from .operators import (
    CandidateSet,
    OperatorKind,
    axes_candidates,
    expand_candidates,
    greedy_select,
    rotate_candidates,
    transform_round,
    translate_candidates,
)
from .sta_basic import StaIRun, alpha_next, sta1_iteration, sta1_run
from .sta_population import (
    DEFAULT_CF,
    DEFAULT_SN,
    DEFAULT_STA2_PARAMS,
    Crossover,
    CrossoverKind,
    Population,
    StaIIRun,
    communicate,
    crossover_arithmetical,
    crossover_linear,
    crossover_proposed,
    crossover_sbx,
    sbx_sample_beta,
    sta2_run,
)

__all__ = [
    "BENCHMARKS", "Objective", "UnknownBenchmarkError", "benchmark_argmin", "benchmark_info", "benchmark_names",
    "eval_benchmark", "grid_sample", "make_benchmark", "write_grid",
    "BoundsPolicy", "BoxBounds", "ConfigurationError", "DimensionError", "EvalCounter", "EvaluatedState",
    "RngStream", "StaError", "StaParams", "clip_to_bounds", "evaluate", "evaluate_many",
    "sample_uniform_in_bounds",
    "CandidateSet", "OperatorKind", "axes_candidates", "expand_candidates", "greedy_select",
    "rotate_candidates", "transform_round", "translate_candidates",
    "StaIRun", "alpha_next", "sta1_iteration", "sta1_run",
    "DEFAULT_CF", "DEFAULT_SN", "DEFAULT_STA2_PARAMS", "Crossover", "CrossoverKind", "Population",
    "StaIIRun", "communicate", "crossover_arithmetical", "crossover_linear", "crossover_proposed",
    "crossover_sbx", "sbx_sample_beta", "sta2_run",
    "RoRun", "random_optimization_run",
]
