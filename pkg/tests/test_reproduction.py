#!/usr/bin/env python3
"""
Reproduction of the reference results on the benchmark suite.

By default a few trials per experiment keep the run short; set
STA_FULL_REPRODUCTION=1 for the full protocol of 30 trials of 1000
iterations each. Both use the default algorithm settings.
"""

import os
import unittest

from sta_optimizer import RngStream, make_benchmark, sample_uniform_in_bounds
from sta_optimizer.benchmarks import SCHWEFEL_MIN_PER_DIM
from sta_experiments import build_config, run_experiment

FULL = os.environ.get("STA_FULL_REPRODUCTION") == "1"
ITERS = 1000
TRIALS = {"sta1": 30 if FULL else 5, "sta2": 30 if FULL else 2, "ro": 30}


def experiment(algo, fn, dim):
    return run_experiment(build_config({"algo": algo, "fn": fn, "dim": dim, "trials": TRIALS[algo], "iters": ITERS}))


class TestTwoDimensional(unittest.TestCase):
    """Two-dimensional benchmarks, individual and population variants."""

    def test_reference_means(self):
        """Test means and medians against the known minima."""
        for algo in ("sta1", "sta2"):
            with self.subTest(algo=algo, fn="schwefel"):
                self.assertAlmostEqual(experiment(algo, "schwefel", 2).stats.mean, -837.9658, delta=1e-3)
            with self.subTest(algo=algo, fn="easom"):
                self.assertAlmostEqual(experiment(algo, "easom", 2).stats.mean, -1.0, delta=1e-6)
            with self.subTest(algo=algo, fn="goldstein_price"):
                self.assertAlmostEqual(experiment(algo, "goldstein_price", 2).stats.mean, 3.0, delta=1e-6)
            for fn in ("schaffer", "rastrigin", "griewank"):
                with self.subTest(algo=algo, fn=fn):
                    self.assertLessEqual(experiment(algo, fn, 2).stats.mean, 1e-8)
            with self.subTest(algo=algo, fn="sphere"):
                self.assertLessEqual(experiment(algo, "sphere", 2).stats.median, 1e-50)
            with self.subTest(algo=algo, fn="rosenbrock"):
                self.assertLessEqual(experiment(algo, "rosenbrock", 2).stats.median, 1e-8)


class TestTenDimensional(unittest.TestCase):
    """Ten-dimensional benchmarks with the population variant."""

    def test_population_variant(self):
        """Test the population variant on the ten-dimensional suite."""
        with self.subTest(fn="sphere"):
            self.assertLessEqual(experiment("sta2", "sphere", 10).stats.median, 1e-50)
        for fn in ("rastrigin", "griewank"):
            with self.subTest(fn=fn):
                self.assertLessEqual(experiment("sta2", fn, 10).stats.mean, 1e-8)
        with self.subTest(fn="ackley"):
            self.assertLessEqual(experiment("sta2", "ackley", 10).stats.worst, 1e-12)
        with self.subTest(fn="schwefel"):
            self.assertAlmostEqual(experiment("sta2", "schwefel", 10).stats.mean, 10 * SCHWEFEL_MIN_PER_DIM, delta=0.01)
        with self.subTest(fn="michalewicz"):
            self.assertAlmostEqual(experiment("sta2", "michalewicz", 10).stats.median, -9.6602, delta=1e-3)
        with self.subTest(fn="rosenbrock"):
            self.assertLessEqual(experiment("sta2", "rosenbrock", 10).stats.median, 5.0)

    def test_population_beats_individual_on_griewank(self):
        """Test the population variant's Griewank 10D mean is no worse than the individual variant's."""
        individual = experiment("sta1", "griewank", 10)
        population = experiment("sta2", "griewank", 10)
        self.assertLessEqual(population.stats.mean, individual.stats.mean)


class TestBaseline(unittest.TestCase):
    """Random optimization sanity on sphere 2D."""

    def test_improves_and_never_worsens(self):
        """Test nearly every trial improves on its start and no history increases."""
        result = experiment("ro", "sphere", 2)
        sphere = make_benchmark("sphere", 2)
        improved = 0
        for record in result.records:
            self.assertEqual(record.history, sorted(record.history, reverse=True))
            start = sphere(sample_uniform_in_bounds(sphere.bounds, RngStream(record.seed)))
            improved += record.final_fitness < start
        self.assertGreaterEqual(improved, 29)


if __name__ == '__main__':
    unittest.main()
