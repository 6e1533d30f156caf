from .config import (
    Algorithm,
    ExperimentConfig,
    SuiteError,
    build_config,
    load_suite,
)
from .experiment import ExperimentResult, TrialRecord, run_experiment, run_trial
from .results import (
    ResultsWriteError,
    read_summary,
    write_curve,
    write_results,
    write_summary,
    write_traces,
)
from .stats import SummaryStats, average_evaluation_curve, average_fitness_curve, summarize

__all__ = [
    "Algorithm", "ExperimentConfig", "SuiteError", "build_config", "load_suite",
    "ExperimentResult", "TrialRecord", "run_experiment", "run_trial",
    "ResultsWriteError", "read_summary", "write_curve", "write_results", "write_summary", "write_traces",
    "SummaryStats", "average_evaluation_curve", "average_fitness_curve", "summarize",
]
