#!/usr/bin/env python3
"""
Test suite for the sta-experiment command line.
"""

import contextlib
import io
import os
import tempfile
import textwrap
import unittest

from sta_optimizer import CrossoverKind
from sta_experiments import Algorithm, read_summary
from sta_experiments.cli import main, parse_cli


class TestParseCli(unittest.TestCase):
    """Test cases for parse_cli."""

    def assertUsageError(self, argv):
        stderr = io.StringIO()
        with contextlib.redirect_stderr(stderr), self.assertRaises(SystemExit) as context:
            parse_cli(argv)
        self.assertEqual(context.exception.code, 2)
        return stderr.getvalue()

    def test_sta1_defaults(self):
        """Test the individual variant defaults are filled in."""
        [cfg] = parse_cli(["--algo", "sta1", "--fn", "sphere", "--dim", "2"])
        self.assertIs(cfg.algorithm, Algorithm.STA1)
        self.assertEqual((cfg.params.se, cfg.params.alpha, cfg.params.alpha_min), (30, 1.0, 1e-4))
        self.assertEqual((cfg.params.beta, cfg.params.gamma, cfg.params.delta, cfg.params.fc), (1.0, 1.0, 1.0, 2.0))
        self.assertEqual((cfg.trials, cfg.max_iters), (30, 1000))

    def test_sta2_defaults(self):
        """Test the population variant defaults are filled in."""
        [cfg] = parse_cli(["--algo", "sta2", "--fn", "rastrigin", "--dim", "10"])
        self.assertEqual((cfg.sn, cfg.params.se, cfg.cf), (30, 10, 50))

    def test_flags(self):
        """Test dashed flags map onto the configuration."""
        [cfg] = parse_cli(["--algo", "sta2", "--fn", "ackley", "--dim", "5", "--se", "dim", "--alpha-min", "1e-3",
                           "--crossover", "arithmetical", "--alpha-c", "0.3", "--alpha-c-schedule", "age",
                           "--trials", "4", "--iters", "10", "--seed", "9", "--bounds", "none", "--jobs", "2",
                           "--out", "s.csv", "--trace", "t", "--curve", "c.csv"])
        self.assertEqual((cfg.params.se, cfg.params.alpha_min), (5, 1e-3))
        self.assertEqual((cfg.crossover.kind, cfg.crossover.alpha_c), (CrossoverKind.ARITHMETICAL, 0.3))
        self.assertEqual((cfg.trials, cfg.max_iters, cfg.base_seed, cfg.jobs), (4, 10, 9, 2))
        self.assertEqual((cfg.out, cfg.trace_dir, cfg.curve), ("s.csv", "t", "c.csv"))

    def test_unknown_function(self):
        """Test an unknown function is a usage error listing the valid names."""
        message = self.assertUsageError(["--fn", "nosuch", "--dim", "2"])
        self.assertIn("goldstein_price", message)
        self.assertIn("michalewicz", message)

    def test_usage_errors(self):
        """Test unknown flags, missing values and invalid combinations."""
        for argv in (["--fn", "sphere", "--dim", "2", "--colour", "red"],
                     ["--fn", "sphere", "--dim"],
                     ["--dim", "2"],
                     ["--fn", "sphere"],
                     ["--algo", "sta1", "--fn", "sphere", "--dim", "2", "--sn", "5"],
                     ["--algo", "ro", "--fn", "sphere", "--dim", "2", "--se", "5"],
                     ["--algo", "sta2", "--fn", "sphere", "--dim", "2", "--sigma", "0.5"],
                     ["--fn", "sphere", "--dim", "2", "--trials", "0"],
                     ["--fn", "easom", "--dim", "3"],
                     ["--fn", "sphere", "--dim", "2", "--fc", "0.5"],
                     ["--suite", "x.yaml", "--fn", "sphere"],
                     ["--fn", "easom", "--grid", "g.csv"]):
            with self.subTest(argv=argv):
                self.assertUsageError(argv)

    def test_suite(self):
        """Test a suite gives one configuration per entry, with --jobs applied to each."""
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "suite.yaml")
            with open(path, "w") as handle:
                handle.write(textwrap.dedent("""
                    defaults: {trials: 2, iters: 5}
                    experiments:
                      - {algo: sta1, fn: sphere, dim: 2}
                      - {algo: ro, fn: easom, sigma: 0.5}
                """))
            configs = parse_cli(["--suite", path, "--jobs", "3"])
        self.assertEqual([cfg.algorithm for cfg in configs], [Algorithm.STA1, Algorithm.RO])
        self.assertEqual([cfg.jobs for cfg in configs], [3, 3])
        self.assertEqual(configs[1].step_sigma, 0.5)

    def test_bad_suite(self):
        """Test a missing suite file is a usage error."""
        self.assertUsageError(["--suite", os.path.join(tempfile.gettempdir(), "no-such-suite.yaml")])


class TestMain(unittest.TestCase):
    """Test cases for main."""

    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.addCleanup(self.directory.cleanup)

    def path(self, name):
        return os.path.join(self.directory.name, name)

    def test_run_and_write(self):
        """Test a run writes the summary, traces and curve."""
        status = main(["--fn", "sphere", "--dim", "2", "--trials", "2", "--iters", "15", "--se", "4", "--quiet",
                       "--out", self.path("summary.csv"), "--trace", self.path("traces"),
                       "--curve", self.path("curve.csv")])
        self.assertEqual(status, 0)
        [row] = read_summary(self.path("summary.csv"))
        self.assertEqual((row["function"], row["dim"], row["trials"], row["iters"]), ("sphere", 2, 2, 15))
        self.assertEqual(len(os.listdir(self.path("traces"))), 2)
        self.assertTrue(os.path.exists(self.path("curve.csv")))

    def test_summary_to_stdout(self):
        """Test the summary goes to standard output without --out."""
        stdout = io.StringIO()
        with contextlib.redirect_stdout(stdout):
            status = main(["--algo", "ro", "--fn", "easom", "--trials", "2", "--iters", "10", "--quiet"])
        self.assertEqual(status, 0)
        lines = stdout.getvalue().splitlines()
        self.assertEqual(len(lines), 2)
        self.assertTrue(lines[1].startswith("easom,2,ro,"))

    def test_unwritable_output(self):
        """Test an unwritable output path exits with status 1."""
        status = main(["--fn", "sphere", "--dim", "2", "--trials", "1", "--iters", "5", "--quiet",
                       "--out", self.path(os.path.join("missing", "summary.csv"))])
        self.assertEqual(status, 1)

    def test_grid(self):
        """Test grid export writes resolution squared rows and runs nothing."""
        status = main(["--fn", "goldstein_price", "--grid", self.path("grid.csv"), "--grid-resolution", "11",
                       "--quiet"])
        self.assertEqual(status, 0)
        with open(self.path("grid.csv")) as handle:
            self.assertEqual(len(handle.read().splitlines()), 1 + 11 * 11)

    def test_grid_needs_two_dimensions(self):
        """Test grid export of a 10-dimensional function is a usage error."""
        with contextlib.redirect_stderr(io.StringIO()), self.assertRaises(SystemExit) as context:
            main(["--fn", "sphere", "--dim", "10", "--grid", self.path("grid.csv")])
        self.assertEqual(context.exception.code, 2)


if __name__ == '__main__':
    unittest.main()
