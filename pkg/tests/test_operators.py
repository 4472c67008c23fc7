import unittest, math
import numpy as np
import mpmath
from hypothesis import given, settings, strategies as st
from irlfrac.functions import FunctionSpec, Smoothness, power, exponential, sine
from irlfrac.operators import (Side, Form, Identity, Order, CutRatio, EvalRequest, lower_differint, upper_incomplete_integral,
                               upper_incomplete_derivative, upper_differint, differint, classical_rl, shifted_base_identity,
                               recurrence_derivative, composition_lhs_rhs, evaluate_grid)
from irlfrac.closedforms import classical_exp, power_lower, power_upper
from irlfrac.exceptions import DomainError, DepthExceeded, MissingDerivatives

def close(a, b, rel):
    return abs(complex(a) - complex(b)) <= rel * max(abs(complex(b)), 1e-300)

def reference(kind, f, mu, x, y):
    # mpmath quadrature of the defining integrals, mu < 0
    g = lambda t: mpmath.mpf(f(float(t)).real)
    kernel = lambda t: (x - t) ** (-mu - 1) * g(t)
    if kind == "lower":
        value = mpmath.quad(kernel, [0, y * x])
    else:
        value = mpmath.quad(kernel, [y * x, x])
    return complex(value / mpmath.gamma(-mu))

class TestTypes(unittest.TestCase):

    def test_order(self):
        self.assertTrue(Order(-0.5).is_integral)
        self.assertTrue(Order(0.3j).is_derivative)
        self.assertEqual(Order(1.4).n, 2)
        self.assertEqual(Order(-1.4).n, 0)
        self.assertTrue(Order(2).is_nonnegative_integer)
        self.assertFalse(Order(2 + 1e-3j).is_nonnegative_integer)
        self.assertEqual(Order(1.5).shifted(2).mu, -0.5)
        with self.assertRaises(DomainError):
            Order(math.nan)

    def test_cut_ratio(self):
        self.assertEqual(CutRatio(0.25).y, 0.25)
        for y in (0.0, 1.0, -0.1):
            with self.assertRaises(DomainError):
                CutRatio(y)

    def test_request_coercion(self):
        req = EvalRequest(sine(), -0.5, 1.0, 0.5, "upper", "form2")
        self.assertEqual(req.order, Order(-0.5))
        self.assertEqual(req.y, CutRatio(0.5))
        self.assertIs(req.side, Side.UPPER)
        self.assertIs(req.form, Form.FORM2)
        self.assertIs(req.with_(side=Side.LOWER).side, Side.LOWER)

    def test_request_validation(self):
        with self.assertRaises(DomainError):
            EvalRequest(sine(), -0.5, 0.0, 0.5)
        with self.assertRaises(DomainError):
            EvalRequest(sine(domain_bound=1.0), -0.5, 1.5, 0.5)
        lower_only = FunctionSpec(np.exp, smoothness=Smoothness.L1_LOWER)
        EvalRequest(lower_only, -0.5, 1.0, 0.5, Side.LOWER)
        with self.assertRaises(DomainError):
            EvalRequest(lower_only, -0.5, 1.0, 0.5, Side.UPPER)

class TestIncompleteIntegrals(unittest.TestCase):

    def test_lower_against_mpmath(self):
        for f, mu, x, y in ((exponential(1.0), -0.5, 1.0, 0.5), (sine(), -1.7, 2.0, 0.3), (power(0.5), -0.3, 0.7, 0.9)):
            value = lower_differint(EvalRequest(f, mu, x, y)).value
            self.assertTrue(close(value, reference("lower", f, mu, x, y), 1e-9), (f.name, mu))

    def test_upper_against_mpmath(self):
        for f, mu, x, y in ((exponential(1.0), -0.5, 1.0, 0.5), (sine(), -1.7, 2.0, 0.3), (power(0.5), -0.3, 0.7, 0.9)):
            value = upper_incomplete_integral(EvalRequest(f, mu, x, y, Side.UPPER)).value
            self.assertTrue(close(value, reference("upper", f, mu, x, y), 1e-9), (f.name, mu))

    def test_forms_agree(self):
        for side in Side:
            for mu in (-0.3, -2.7, -0.5 + 0.4j):
                values = [differint(EvalRequest(sine(), mu, 2.0, 0.3, side, form)).value
                          for form in (Form.FORM1, Form.FORM2, Form.FORM3)]
                self.assertTrue(close(values[1], values[0], 1e-8), (side, mu))
                self.assertTrue(close(values[2], values[0], 1e-8), (side, mu))

    def test_power_closed_forms(self):
        for mu in (-1.5, -0.3, -0.5 + 0.4j):
            self.assertTrue(close(differint(EvalRequest(power(0.5), mu, 2.0, 0.25)).value, power_lower(0.5, mu, 2.0, 0.25), 1e-8))
            self.assertTrue(close(differint(EvalRequest(power(0.5), mu, 2.0, 0.25, Side.UPPER)).value, power_upper(0.5, mu, 2.0, 0.25), 1e-8))

    def test_wrong_side_or_regime(self):
        with self.assertRaises(DomainError):
            lower_differint(EvalRequest(sine(), -0.5, 1.0, 0.5, Side.UPPER))
        with self.assertRaises(DomainError):
            upper_incomplete_integral(EvalRequest(sine(), 0.5, 1.0, 0.5, Side.UPPER))
        with self.assertRaises(DomainError):
            upper_incomplete_integral(EvalRequest(sine(), -0.5, 1.0, 0.5, Side.LOWER))

class TestIncompleteDerivatives(unittest.TestCase):

    def test_lower_vanishes_at_integer_orders(self):
        for mu in (0, 1, 3):
            result = lower_differint(EvalRequest(exponential(1.0), mu, 1.0, 0.5))
            self.assertEqual(result.value, 0)
            self.assertEqual(result.n_evals, 0)

    def test_upper_integer_order_is_classical(self):
        value = upper_incomplete_derivative(EvalRequest(sine(), 1, 1.0, 0.5, Side.UPPER)).value
        self.assertTrue(close(value, math.cos(1.0), 1e-9))
        value = upper_differint(EvalRequest(sine(), 2, 1.0, 0.5, Side.UPPER)).value
        self.assertTrue(close(value, -math.sin(1.0), 1e-9))

    def test_derivative_additivity(self):
        for mu in (0.5, 1.3, 0.4 + 0.3j):
            lower = differint(EvalRequest(exponential(1.0), mu, 1.5, 0.4)).value
            upper = differint(EvalRequest(exponential(1.0), mu, 1.5, 0.4, Side.UPPER)).value
            self.assertTrue(close(lower + upper, classical_exp(1.0, mu, 1.5), 1e-8), mu)

    def test_power_derivative_closed_forms(self):
        for mu in (0.4, 1.3):
            self.assertTrue(close(differint(EvalRequest(power(2.5), mu, 2.0, 0.75, Side.UPPER)).value, power_upper(2.5, mu, 2.0, 0.75), 1e-8))
            self.assertTrue(close(differint(EvalRequest(power(2.5), mu, 2.0, 0.75)).value, power_lower(2.5, mu, 2.0, 0.75), 1e-8))

    def test_upper_needs_derivatives(self):
        f = FunctionSpec(np.exp, smoothness=Smoothness.L1)
        with self.assertRaises(MissingDerivatives):
            upper_incomplete_derivative(EvalRequest(f, 0.5, 1.0, 0.5, Side.UPPER))
        with self.assertRaises(DomainError):
            upper_incomplete_derivative(EvalRequest(sine(), -0.5, 1.0, 0.5, Side.UPPER))

class TestClassical(unittest.TestCase):

    def test_classical_exp(self):
        for mu in (-0.5, 0.5, 1.5):
            self.assertTrue(close(classical_rl(exponential(1.0), mu, 0.0, 1.2).value, classical_exp(1.0, mu, 1.2), 1e-9), mu)

    def test_shifted_base(self):
        upper, classical = shifted_base_identity(EvalRequest(sine(), -0.6, 1.0, 0.4, Side.UPPER))
        self.assertTrue(close(upper, classical, 1e-12))
        upper, classical = shifted_base_identity(EvalRequest(sine(), 0.6, 1.0, 0.4, Side.UPPER))
        self.assertTrue(close(upper, classical, 1e-12))

    def test_domain(self):
        with self.assertRaises(DomainError):
            classical_rl(sine(), -0.5, 1.0, 1.0)
        with self.assertRaises(DomainError):
            classical_rl(sine(), -0.5, -0.1, 1.0)

class TestRecurrences(unittest.TestCase):

    def test_against_direct(self):
        for f in (power(1.5), exponential(1.0)):
            for mu in (0.3, 1.4):
                for side in Side:
                    req = EvalRequest(f, mu, 1.0, 0.5, side)
                    self.assertTrue(close(recurrence_derivative(side, req), differint(req).value, 1e-5), (f.name, mu, side))

    def test_limits(self):
        with self.assertRaises(DomainError):
            recurrence_derivative(Side.LOWER, EvalRequest(sine(), -0.5, 1.0, 0.5))
        with self.assertRaises(DepthExceeded):
            recurrence_derivative(Side.LOWER, EvalRequest(sine(), 4.2, 1.0, 0.5))

class TestCompositions(unittest.TestCase):

    def test_identities(self):
        for identity in Identity:
            for f in (sine(), power(2)):
                lhs, rhs = composition_lhs_rhs(identity, f, 1.5, 1.0, 0.5)
                self.assertTrue(close(lhs, rhs, 1e-5), (identity, f.name))

    def test_requires_order_above_one(self):
        with self.assertRaises(DomainError):
            composition_lhs_rhs(Identity.D_LOWER, sine(), 0.8, 1.0, 0.5)

class TestOperatorProperties(unittest.TestCase):

    @given(st.floats(min_value=-3, max_value=3), st.floats(min_value=-3, max_value=3),
           st.floats(min_value=-2.5, max_value=1.9).filter(lambda mu: abs(mu) > 0.05))
    @settings(max_examples=25, deadline=None)
    def test_linearity(self, alpha, beta, mu):
        combined = FunctionSpec(lambda t: alpha * np.sin(t) + beta * np.exp(t),
                                tuple((lambda t, k=k: alpha * np.sin(t + k * np.pi / 2) + beta * np.exp(t)) for k in (1, 2, 3)),
                                smoothness=Smoothness.ANALYTIC, name="combined")
        for side in Side:
            op = lambda f: differint(EvalRequest(f, mu, 1.2, 0.4, side)).value
            separate = alpha * op(sine()) + beta * op(exponential(1.0))
            self.assertLessEqual(abs(op(combined) - separate), 1e-8 * (1 + abs(separate)), (side, mu))

    @given(st.floats(min_value=0.5, max_value=2.0), st.floats(min_value=-2.5, max_value=1.9).filter(lambda mu: abs(mu) > 0.05))
    @settings(max_examples=25, deadline=None)
    def test_homogeneity(self, c, mu):
        # substituting t = s/c scales the order-mu operator of f(c t) by c^mu
        for side in Side:
            scaled = differint(EvalRequest(exponential(c), mu, 1.0, 0.5, side)).value
            unscaled = differint(EvalRequest(exponential(1.0), mu, c, 0.5, side)).value
            expected = c ** mu * unscaled
            self.assertLessEqual(abs(scaled - expected), 1e-8 * (1 + abs(expected)), (side, c, mu))

class TestEvaluateGrid(unittest.TestCase):

    def test_threaded_order(self):
        requests = [EvalRequest(sine(), -0.5, x, 0.5, side) for x in (0.5, 1.0, 1.5) for side in Side]
        sequential = evaluate_grid(requests)
        threaded = evaluate_grid(requests, threads=3)
        self.assertEqual([r.value for r in sequential], [r.value for r in threaded])

if __name__ == '__main__':
    unittest.main()
