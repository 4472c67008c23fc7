import unittest, math
import numpy as np
from irlfrac.functions import (Smoothness, FunctionSpec, constant, power, exponential, sine, power2, product, times_monomial,
                               composite)
from irlfrac.exceptions import DomainError, MissingDerivatives

class TestFunctionSpec(unittest.TestCase):

    def test_scalar_and_vector_calls(self):
        f = exponential(1.0)
        self.assertIsInstance(f(0.5), complex)
        self.assertAlmostEqual(f(0.5).real, math.exp(0.5))
        values = f(np.array([0.0, 1.0]))
        self.assertEqual(values.dtype, complex)
        self.assertTrue(np.allclose(values, [1.0, math.e]))

    def test_domain_bound(self):
        with self.assertRaises(DomainError):
            FunctionSpec(np.exp, domain_bound=0.0)

    def test_inconsistent_derivatives_rejected(self):
        with self.assertRaises(DomainError):
            FunctionSpec(np.sin, (np.sin,), smoothness=Smoothness.ANALYTIC)

    def test_supplied_derivatives(self):
        f = sine()
        self.assertAlmostEqual(f.derivative(1)(0.3).real, math.cos(0.3))
        self.assertAlmostEqual(f.derivative(2)(0.3).real, -math.sin(0.3))
        self.assertIs(f.derivative(0), f)

    def test_missing_derivatives(self):
        f = FunctionSpec(np.exp, smoothness=Smoothness.L1, name="g")
        with self.assertRaises(MissingDerivatives):
            f.derivative(1)

    def test_finite_difference_fallback(self):
        f = FunctionSpec(np.exp, smoothness=Smoothness.CN)
        self.assertTrue(f.fd_fallback)
        self.assertAlmostEqual(f.derivative(1)(0.7).real, math.exp(0.7), places=8)
        self.assertAlmostEqual(f.derivative(2)(0.7).real, math.exp(0.7), places=6)

class TestBuiltins(unittest.TestCase):

    def test_constant(self):
        f = constant(2.5)
        self.assertEqual(f(3.0), 2.5)
        self.assertEqual(f.derivative(4)(3.0), 0)
        self.assertTrue(f.is_analytic)

    def test_power(self):
        f = power(1.5)
        self.assertAlmostEqual(f(4.0).real, 8.0)
        self.assertAlmostEqual(f.derivative(1)(4.0).real, 1.5 * 2.0)
        self.assertAlmostEqual(f.derivative(2)(4.0).real, 0.75 * 0.5)
        self.assertIs(f.smoothness, Smoothness.CN)
        self.assertIs(power(-0.3).smoothness, Smoothness.L1)
        polynomial = power(2)
        self.assertTrue(polynomial.is_analytic)
        self.assertEqual(polynomial.radius, math.inf)
        self.assertEqual(polynomial.derivative(3)(1.3), 0)
        with self.assertRaises(DomainError):
            power(-1.0)

    def test_complex_power(self):
        f = power(0.5 + 0.5j)
        self.assertAlmostEqual(f(2.0), 2.0 ** (0.5 + 0.5j))

    def test_exponential_and_sine(self):
        f = exponential(-2.0)
        self.assertAlmostEqual(f.derivative(3)(0.5).real, -8 * math.exp(-1.0))
        self.assertAlmostEqual(sine().derivative(5)(0.2).real, math.cos(0.2))

    def test_power2(self):
        f = power2(1.5, 0.5)
        self.assertEqual(f.domain_bound, 1.0)
        t = 0.4
        self.assertAlmostEqual(f(t).real, t ** 0.5 * (1 - t) ** -0.5)
        expected = 0.5 * t ** -0.5 * (1 - t) ** -0.5 + 0.5 * t ** 0.5 * (1 - t) ** -1.5
        self.assertAlmostEqual(f.derivative(1)(t).real, expected)
        with self.assertRaises(DomainError):
            power2(0.0, 0.5)

class TestCombinators(unittest.TestCase):

    def test_product(self):
        f = product(sine(), exponential(1.0))
        t = 0.6
        self.assertAlmostEqual(f(t).real, math.sin(t) * math.exp(t))
        self.assertAlmostEqual(f.derivative(1)(t).real, (math.cos(t) + math.sin(t)) * math.exp(t))
        self.assertTrue(f.is_analytic)
        self.assertIs(product(power(0.5), sine()).smoothness, Smoothness.CN)
        self.assertEqual(product(power(0.5), sine()).radius, 0.0)

    def test_times_monomial(self):
        f = times_monomial(exponential(1.0), 2)
        self.assertAlmostEqual(f(1.5).real, 2.25 * math.exp(1.5))
        self.assertAlmostEqual(f.derivative(2)(1.5).real, (2 + 4 * 1.5 + 2.25) * math.exp(1.5))

    def test_composite(self):
        f = composite(exponential(1.0), power(2))
        t = 0.7
        self.assertAlmostEqual(f(t).real, math.exp(t * t))
        self.assertAlmostEqual(f.derivative(1)(t).real, 2 * t * math.exp(t * t))
        self.assertAlmostEqual(f.derivative(2)(t).real, (2 + 4 * t * t) * math.exp(t * t))
        self.assertTrue(f.is_analytic)
        self.assertEqual(len(f.derivs), 16)

if __name__ == '__main__':
    unittest.main()
