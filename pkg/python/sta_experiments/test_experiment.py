#!/usr/bin/env python3
"""
Test suite for the multi-trial experiment runner.
"""

import math
import unittest
from unittest.mock import patch

import numpy as np

from sta_optimizer import ConfigurationError, Objective, StaError, StaParams
from sta_experiments import Algorithm, ExperimentConfig, build_config, run_experiment, run_trial
from sta_experiments import experiment


def small_config(**overrides):
    settings = {"algo": "sta1", "fn": "sphere", "dim": 2, "trials": 3, "iters": 20, "se": 5, **overrides}
    return build_config(settings)


class TestRunTrial(unittest.TestCase):
    """Test cases for run_trial."""

    def test_record(self):
        """Test the trial record fields."""
        record = run_trial(small_config(seed=10), 2)
        self.assertEqual((record.index, record.seed), (2, 12))
        self.assertEqual(len(record.history), 20)
        self.assertEqual(record.final_fitness, record.history[-1])
        self.assertEqual(record.evals, record.eval_history[-1])
        self.assertFalse(record.flagged)
        self.assertGreaterEqual(record.wall_time, 0.0)

    def test_each_algorithm(self):
        """Test every algorithm runs through the trial dispatcher."""
        ro = build_config({"algo": "ro", "fn": "sphere", "dim": 2, "trials": 2, "iters": 20})
        for cfg in (small_config(), small_config(algo="sta2", sn=3, cf=5), ro):
            with self.subTest(algorithm=cfg.algorithm):
                record = run_trial(cfg, 0)
                self.assertEqual(len(record.history), 20)
                self.assertEqual(record.final_fitness, min(record.history))


class TestRunExperiment(unittest.TestCase):
    """Test cases for run_experiment."""

    def test_single_trial_statistics(self):
        """Test one trial gives equal statistics and no spread."""
        result = run_experiment(small_config(trials=1))
        stats = result.stats
        self.assertEqual(stats.best, stats.median)
        self.assertEqual(stats.median, stats.mean)
        self.assertEqual(stats.mean, stats.worst)
        self.assertEqual(stats.st_dev, 0.0)

    def test_records_and_seeds(self):
        """Test trials run in index order with consecutive seeds."""
        result = run_experiment(small_config(trials=4, seed=100))
        self.assertEqual([record.index for record in result.records], [0, 1, 2, 3])
        self.assertEqual([record.seed for record in result.records], [100, 101, 102, 103])
        self.assertEqual(result.stats.best, min(record.final_fitness for record in result.records))
        self.assertEqual(result.evals_mean, sum(record.evals for record in result.records) / 4)
        self.assertEqual(result.flagged, 0)

    def test_deterministic(self):
        """Test the same configuration reproduces the histories."""
        cfg = small_config(algo="sta2", sn=3, cf=4, se=3)
        first, second = run_experiment(cfg), run_experiment(cfg)
        self.assertEqual([r.history for r in first.records], [r.history for r in second.records])

    def test_parallel_matches_sequential(self):
        """Test a process pool gives the same records as one job."""
        sequential = run_experiment(small_config(trials=4))
        parallel = run_experiment(small_config(trials=4, jobs=2))
        self.assertEqual([r.history for r in parallel.records], [r.history for r in sequential.records])
        self.assertEqual(parallel.stats, sequential.stats)

    def test_invalid_config_runs_nothing(self):
        """Test an invalid configuration fails before any trial."""
        cfg = ExperimentConfig(Algorithm.STA1, "sphere", 2, trials=0)
        with patch.object(experiment, "run_trial") as run_trial_mock:
            with self.assertRaises(ConfigurationError):
                run_experiment(cfg)
        run_trial_mock.assert_not_called()

    def test_user_objective(self):
        """Test an experiment on a user objective."""
        objective = Objective.from_function("shifted", lambda x: float(np.sum((x - 0.5) ** 2)), [-1.0] * 3, [1.0] * 3)
        cfg = ExperimentConfig(Algorithm.STA1, "shifted", 3, trials=2, max_iters=200, params=StaParams(se=10))
        result = run_experiment(cfg, objective)
        self.assertLess(result.stats.worst, 1e-4)
        with self.assertRaises(ConfigurationError):
            run_experiment(ExperimentConfig(Algorithm.STA1, "shifted", 2, trials=1, max_iters=5), objective)

    def test_non_finite_trials_flagged(self):
        """Test trials ending with a non-finite fitness are flagged and left out of the statistics."""
        def unlucky(x):
            return math.inf if x[0] < 0 else float(np.sum(x**2))

        objective = Objective.from_function("unlucky", unlucky, [-1.0, -1.0], [1.0, 1.0])
        cfg = ExperimentConfig(Algorithm.RO, "unlucky", 2, trials=20, max_iters=1, step_sigma=1e-9)
        result = run_experiment(cfg, objective)
        flagged = [record for record in result.records if record.flagged]
        self.assertEqual(result.flagged, len(flagged))
        self.assertGreater(result.flagged, 0)
        self.assertLess(result.flagged, 20)
        self.assertTrue(math.isfinite(result.stats.worst))

    def test_all_trials_non_finite(self):
        """Test an experiment without any finite final fitness is an error."""
        objective = Objective.from_function("nan", lambda x: math.nan, [-1.0], [1.0])
        cfg = ExperimentConfig(Algorithm.RO, "nan", 1, trials=3, max_iters=2)
        with self.assertRaises(StaError):
            run_experiment(cfg, objective)


if __name__ == '__main__':
    unittest.main()
