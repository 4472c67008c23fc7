import unittest
from unittest.mock import patch, MagicMock
from irlfrac.manager import VerificationManager
from irlfrac.verify import CheckReport, SUITES
from irlfrac.exceptions import VerificationError

def passing(threads = 1):
    return [CheckReport.compare("demo", 1.0, 1.0, 1e-8), CheckReport.compare("demo", 2.0, 2.0, 1e-8)]

def counterexample(threads = 1):
    return [CheckReport.compare("demo", 1.0, 2.0, 1e-3, expect_pass=False)]

class TestVerificationManager(unittest.TestCase):

    def setUp(self):
        self.manager = VerificationManager({"passing": passing, "counterexample": counterexample})

    def test_default_suites(self):
        self.assertEqual(VerificationManager().list_suites(), list(SUITES))

    def test_add_suite(self):
        self.manager.add_suite("extra", passing)
        self.assertIn("extra", self.manager._suites)
        with self.assertRaises(VerificationError):
            self.manager.add_suite("extra", passing)
        with self.assertRaises(VerificationError):
            self.manager.add_suite("broken", "not callable")

    def test_remove_suite(self):
        self.manager.remove_suite("passing")
        self.assertNotIn("passing", self.manager._suites)
        with self.assertRaises(VerificationError):
            self.manager.remove_suite("passing")

    def test_get_suite(self):
        self.assertIs(self.manager.get_suite("passing"), passing)
        with self.assertRaises(VerificationError) as ctx:
            self.manager.get_suite("missing")
        self.assertIn("missing", str(ctx.exception))

    def test_run_suite_passes_threads(self):
        suite = MagicMock(return_value=[])
        manager = VerificationManager({"mocked": suite}, threads=3)
        self.assertEqual(manager.run_suite("mocked"), [])
        suite.assert_called_once_with(threads=3)

    def test_run_suite_wraps_errors(self):
        suite = MagicMock(side_effect=ZeroDivisionError("boom"))
        manager = VerificationManager({"mocked": suite})
        with self.assertRaises(VerificationError) as ctx:
            manager.run_suite("mocked")
        self.assertIsInstance(ctx.exception.__cause__, ZeroDivisionError)

    def test_run_all_and_summary(self):
        results = self.manager.run_all()
        self.assertEqual(list(results), ["passing", "counterexample"])
        self.assertEqual(VerificationManager.summary(results), {"suites": 2, "checks": 3, "unexpected": 0})
        self.assertEqual(list(self.manager.run_all(["counterexample"])), ["counterexample"])

    @patch("irlfrac.manager.log")
    def test_unexpected_logged(self, mock_log):
        manager = VerificationManager({"surprise": lambda threads = 1: [CheckReport.compare("demo", 1.0, 1.0, 1e-3, expect_pass=False)]})
        results = manager.run_all()
        self.assertEqual(VerificationManager.summary(results)["unexpected"], 1)
        mock_log.warning.assert_called_once()

    def test_list_suites(self):
        self.assertEqual(self.manager.list_suites(), ["passing", "counterexample"])

if __name__ == '__main__':
    unittest.main()
