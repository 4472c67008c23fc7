import unittest, io, os, json, subprocess, sys, tempfile
from unittest.mock import patch
from irlfrac.cli import RunConfig, Sweep, parse_complex, render_complex, build_parser, thread_count, main
from irlfrac.manager import VerificationManager
from irlfrac.verify import CheckReport, SUITES, bounds_suite
from irlfrac.exceptions import ConfigError, QuadratureFailure

def run(argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    code = main(argv, stdout, stderr)
    return code, stdout.getvalue(), stderr.getvalue()

def demo_manager(expect_pass):
    def suite(threads = 1):
        return [CheckReport.compare("demo", 1.0, 1.0, 1e-8, expect_pass=expect_pass, x=1.0)]
    return lambda threads = 1: VerificationManager({"demo": suite}, threads)

class TestParsing(unittest.TestCase):

    def test_complex(self):
        self.assertEqual(parse_complex("0.5"), 0.5 + 0j)
        self.assertEqual(parse_complex("-0.5,0.4"), complex(-0.5, 0.4))
        self.assertEqual(render_complex(complex(-0.5, 0.4)), "-0.5,0.4")
        for text in ("a", "1,2,3", ""):
            with self.assertRaises(ConfigError):
                parse_complex(text)

    def test_sweep(self):
        sweep = Sweep.parse("0.5:2:4")
        self.assertTrue(sweep.ranged)
        self.assertEqual([v.real for v in sweep.values()], [0.5, 1.0, 1.5, 2.0])
        self.assertEqual(sweep.render(), "0.5:2.0:4")
        self.assertEqual(Sweep.parse("0.25").values(), [0.25 + 0j])
        for text in ("0:1:0", "0:1", "a:b:2"):
            with self.assertRaises(ConfigError):
                Sweep.parse(text)

    def test_thread_count(self):
        self.assertEqual(thread_count({}), 1)
        self.assertEqual(thread_count({"IRLFRAC_THREADS": "4"}), 4)
        for raw in ("0", "-2", "many"):
            with self.assertRaises(ConfigError):
                thread_count({"IRLFRAC_THREADS": raw})

class TestRunConfig(unittest.TestCase):

    def parse(self, argv):
        return RunConfig.from_args(build_parser().parse_args(argv))

    def test_canonical_round_trip(self):
        cfg = self.parse(["table", "--function", "exp", "--alpha", "2", "--order=-0.5,0.25", "--x", "0.5:2:4",
                          "--y", "0.1:0.9:5", "--side", "both", "--form", "2"])
        self.assertEqual(RunConfig.from_canonical(cfg.canonical()), cfg)
        verify = self.parse(["verify", "--suite", "limits", "--format", "jsonl"])
        self.assertEqual(RunConfig.from_canonical(verify.canonical()), verify)

    def test_irrelevant_parameters_reset(self):
        cfg = self.parse(["eval", "--function", "sin", "--lambda", "3", "--order", "-0.5", "--x", "1"])
        self.assertEqual(cfg.lam, 1 + 0j)
        self.assertNotIn("--lambda", cfg.canonical())

    def test_invalid(self):
        cases = (
            ["eval", "--order", "0:1:3", "--x", "1"],
            ["table", "--order", "0.5", "--x", "1"],
            ["table", "--order", "0:1:3", "--y", "0.1:0.9:3", "--x", "1"],
            ["eval", "--order", "0.5", "--x", "0"],
            ["eval", "--order", "0.5", "--x", "1,1"],
            ["eval", "--order", "0.5", "--x", "1", "--y", "1"],
            ["eval", "--function", "power2", "--lambda", "1.5", "--order", "-0.5", "--x", "1.5"],
            ["eval", "--function", "expr", "--order", "0.5", "--x", "1"],
            ["eval", "--order", "0.5", "--x", "1", "--abs-tol", "0"],
        )
        for argv in cases:
            with self.assertRaises(ConfigError, msg=argv):
                self.parse(argv)

    def test_classical_ignores_y(self):
        cfg = self.parse(["eval", "--side", "classical", "--order", "0.5", "--x", "1", "--y", "1"])
        self.assertEqual(cfg.side, "classical")

    def test_unparseable_canonical(self):
        with self.assertRaises(ConfigError):
            RunConfig.from_canonical("eval --order")

class TestEval(unittest.TestCase):

    def test_integral_of_t(self):
        # integral of t over [0, 1/2]
        code, out, _ = run(["eval", "--function", "power", "--lambda", "1", "--order", "-1", "--side", "lower", "--x", "1", "--y", "0.5"])
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], "x,value_re,value_im,err_estimate,n_evals")
        cells = lines[1].split(",")
        self.assertEqual(cells[0], "1.0000000000000000e+00")
        self.assertAlmostEqual(float(cells[1]), 0.125, places=12)
        self.assertEqual(float(cells[2]), 0.0)

    def test_both_sides(self):
        code, out, _ = run(["eval", "--function", "exp", "--order", "-0.5", "--side", "both", "--x", "0.5:1.5:3", "--format", "jsonl"])
        self.assertEqual(code, 0)
        rows = [json.loads(line) for line in out.splitlines()]
        self.assertEqual(len(rows), 3)
        for row in rows:
            self.assertAlmostEqual(row["value_re"], row["lower_re"] + row["upper_re"], places=12)

    def test_sides_sum_to_classical(self):
        argv = ["eval", "--function", "sin", "--order", "-0.7", "--x", "0.5:2:4", "--y", "0.4", "--format", "jsonl"]
        both = [json.loads(line) for line in run(argv + ["--side", "both"])[1].splitlines()]
        classical = [json.loads(line) for line in run(argv + ["--side", "classical"])[1].splitlines()]
        self.assertEqual(len(both), 4)
        for row, reference in zip(both, classical):
            self.assertAlmostEqual(row["value_re"], reference["value_re"], places=9)

    def test_classical(self):
        code, out, _ = run(["eval", "--function", "const", "--c", "2", "--order", "-1", "--side", "classical", "--x", "3"])
        self.assertEqual(code, 0)
        self.assertAlmostEqual(float(out.splitlines()[1].split(",")[1]), 6.0, places=10)

    def test_reruns_are_identical(self):
        argv = ["eval", "--function", "sin", "--order", "0.4", "--side", "upper", "--x", "0.5:2:4", "--y", "0.3"]
        self.assertEqual(run(argv)[1], run(argv)[1])

    def test_output_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "out.csv")
            code, out, _ = run(["eval", "--order", "-1", "--x", "1", "--output", path])
            self.assertEqual(code, 0)
            self.assertEqual(out, "")
            with open(path, encoding="utf-8") as stream:
                self.assertEqual(len(stream.read().splitlines()), 2)

class TestTable(unittest.TestCase):

    def test_order_sweep(self):
        code, out, _ = run(["table", "--function", "sin", "--order=-1:-0.5:3", "--x", "0.5:1:2", "--y", "0.5"])
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], "sweep_var,x,value_re,value_im,err_estimate")
        self.assertEqual(len(lines), 1 + 3 * 2)

    def test_y_sweep_both(self):
        code, out, _ = run(["table", "--order", "-0.5", "--x", "1", "--y", "0.2:0.8:4", "--side", "both"])
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertTrue(lines[0].endswith("lower_re,lower_im,upper_re,upper_im"))
        self.assertEqual(len(lines), 5)

class TestExitCodes(unittest.TestCase):

    def test_config_errors(self):
        for argv in (["eval", "--order", "0:1:0", "--x", "1"], ["eval", "--function", "expr", "--order", "0.5", "--x", "1"],
                     ["verify", "--suite", "nonsense"], ["eval", "--x", "1"], ["bogus"]):
            code, _, _ = run(argv)
            self.assertEqual(code, 2, argv)

    def test_config_error_message(self):
        code, _, err = run(["eval", "--order", "0:1:0", "--x", "1"])
        self.assertEqual(code, 2)
        self.assertIn("Empty range:", err)

    @patch.dict(os.environ, {"IRLFRAC_THREADS": "zero"})
    def test_bad_thread_variable(self):
        self.assertEqual(run(["eval", "--order", "-1", "--x", "1"])[0], 2)

    @patch("irlfrac.cli.evaluate_grid", side_effect=QuadratureFailure("mocked"))
    def test_numeric_failure(self, mock_grid):
        code, _, err = run(["eval", "--order", "-0.5", "--x", "1"])
        self.assertEqual(code, 3)
        self.assertIn("Quadrature failed:", err)

    @patch("irlfrac.cli.evaluate_grid", side_effect=ValueError("bad"))
    def test_numpy_error(self, mock_grid):
        code, _, err = run(["eval", "--order", "-0.5", "--x", "1"])
        self.assertEqual(code, 3)
        self.assertIn("Numerical error", err)

    def test_unwritable_output(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "missing", "out.csv")
            code, _, err = run(["eval", "--order", "-1", "--x", "1", "--output", path])
        self.assertEqual(code, 2)
        self.assertIn("Cannot write output", err)

    def test_help(self):
        with patch("sys.stdout", new_callable=io.StringIO):
            self.assertEqual(run(["--help"])[0], 0)

class TestVerify(unittest.TestCase):

    def test_list(self):
        code, out, _ = run(["verify", "--list"])
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines(), list(SUITES))

    @patch("irlfrac.cli.VerificationManager", new=demo_manager(True))
    def test_expected_polarity(self):
        code, out, err = run(["verify"])
        self.assertEqual(code, 0)
        self.assertEqual(len(out.splitlines()), 2)
        self.assertIn("suites=1 checks=1 unexpected=0", err)

    @patch("irlfrac.cli.VerificationManager", new=demo_manager(False))
    def test_unexpected_polarity(self):
        code, out, err = run(["verify", "--suite", "demo", "--format", "jsonl"])
        self.assertEqual(code, 1)
        self.assertEqual(json.loads(out)["params"], "expect=fail;x=1")
        self.assertIn("suites=1 checks=1 unexpected=1", err)

    def test_limits_suite(self):
        code, out, err = run(["verify", "--suite", "limits"])
        self.assertEqual(code, 0)
        self.assertTrue(out.splitlines())
        self.assertIn("unexpected=0", err)

    @patch.dict("irlfrac.manager.SUITES", {"bounds": lambda threads = 1: bounds_suite(threads, draws=1)})
    def test_all_suites(self):
        code, _, err = run(["verify", "--suite", "all"])
        self.assertEqual(code, 0)
        self.assertIn(f"suites={len(SUITES)} ", err)
        self.assertIn("unexpected=0", err)

class TestModuleEntryPoint(unittest.TestCase):

    def test_python_m(self):
        ok = subprocess.run([sys.executable, "-m", "irlfrac", "eval", "--order", "-1", "--x", "1"], capture_output=True, text=True)
        self.assertEqual(ok.returncode, 0)
        self.assertTrue(ok.stdout.startswith("x,value_re"))
        bad = subprocess.run([sys.executable, "-m", "irlfrac", "eval", "--order", "0:1:0", "--x", "1"], capture_output=True, text=True)
        self.assertEqual(bad.returncode, 2)

if __name__ == '__main__':
    unittest.main()
