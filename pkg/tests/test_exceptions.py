import unittest
from irlfrac.exceptions import (IRLFracError, DomainError, PoleError, NumericOverflowError, LimitError, ArityError,
                                QuadratureFailure, BudgetExceeded, NonFiniteIntegrand, MissingDerivatives, DepthExceeded,
                                AnalyticityRequired, ConfigError, VerificationError)

class TestIRLFracExceptions(unittest.TestCase):

    def test_message_layout(self):
        error = IRLFracError("detail", "Traceback line", "Something failed:")
        self.assertEqual(str(error), "Something failed: detail\nTraceback line")
        self.assertEqual(str(IRLFracError()), "An error occurred in irlfrac:")

    def test_default_messages(self):
        self.assertEqual(str(DomainError("x=0")), "Argument outside the domain of the operation: x=0")
        self.assertEqual(str(ConfigError("bad")), "Invalid configuration: bad")

    def test_hierarchy(self):
        for cls in (DomainError, LimitError, ArityError, QuadratureFailure, MissingDerivatives, DepthExceeded,
                    AnalyticityRequired, ConfigError, VerificationError, NumericOverflowError):
            with self.assertRaises(IRLFracError):
                raise cls("error occurred")
        self.assertTrue(issubclass(PoleError, DomainError))
        self.assertTrue(issubclass(NumericOverflowError, OverflowError))
        self.assertTrue(issubclass(BudgetExceeded, QuadratureFailure))
        self.assertTrue(issubclass(NonFiniteIntegrand, QuadratureFailure))

    def test_budget_result(self):
        error = BudgetExceeded("1e-3 > 1e-10", result="partial")
        self.assertEqual(error.result, "partial")
        self.assertIn("Subdivision budget exhausted:", str(error))
        self.assertEqual(QuadratureFailure("short", result="partial").result, "partial")
        self.assertIsNone(NonFiniteIntegrand("f(0) = nan").result)

if __name__ == '__main__':
    unittest.main()
