import unittest, math
import mpmath
from irlfrac.closedforms import (PowerLawParams, power_lower, power_upper, constant_lower, constant_upper, classical_power,
                                 classical_exp, power2_lower, power2_complete, power2_upper, power_composition_sides,
                                 nested_power, inversion_ratio)
from irlfrac.functions import constant, power2
from irlfrac.operators import Side, Identity, EvalRequest, differint
from irlfrac.exceptions import DomainError, NumericOverflowError

mpmath.mp.dps = 30

def close(a, b, rel):
    return abs(complex(a) - complex(b)) <= rel * max(abs(complex(b)), 1e-300)

class TestPowerLaw(unittest.TestCase):

    def test_params(self):
        self.assertEqual(PowerLawParams(0.5).lam, 0.5 + 0j)
        with self.assertRaises(DomainError):
            PowerLawParams(-1.0)
        with self.assertRaises(DomainError):
            PowerLawParams(0.0, 0.5)
        self.assertEqual(PowerLawParams(1.5, 0.5).alpha, 0.5 + 0j)

    def test_lower_against_mpmath(self):
        # B_y(lambda + 1, -mu) / Gamma(-mu) x^(lambda - mu)
        for lam, mu, x, y in ((0.5, -0.7, 2.0, 0.3), (2.0, -1.5, 0.5, 0.8), (0.3, 0.4, 1.5, 0.6)):
            expected = complex(mpmath.betainc(lam + 1, -mu, 0, y) / mpmath.gamma(-mu) * mpmath.mpf(x) ** (lam - mu))
            self.assertTrue(close(power_lower(lam, mu, x, y), expected, 1e-10), (lam, mu))

    def test_upper_against_mpmath(self):
        for lam, mu, x, y in ((0.5, -0.7, 2.0, 0.3), (2.0, -1.5, 0.5, 0.8)):
            expected = complex(mpmath.betainc(-mu, lam + 1, 0, 1 - y) / mpmath.gamma(-mu) * mpmath.mpf(x) ** (lam - mu))
            self.assertTrue(close(power_upper(lam, mu, x, y), expected, 1e-10), (lam, mu))

    def test_sides_sum_to_classical(self):
        for lam, mu in ((0.5, -0.7), (1.5, 0.6), (2.0, 1.3), (0.5, -0.4 + 0.3j)):
            total = power_lower(lam, mu, 1.7, 0.35) + power_upper(lam, mu, 1.7, 0.35)
            self.assertTrue(close(total, classical_power(lam, mu, 1.7), 1e-10), (lam, mu))

    def test_lower_vanishes_at_integer_orders(self):
        for mu in (0, 1, 2):
            self.assertEqual(power_lower(1.5, mu, 1.0, 0.5), 0)

    def test_integer_order_upper_is_classical(self):
        self.assertTrue(close(power_upper(3.0, 1, 2.0, 0.5), 3 * 2.0 ** 2, 1e-12))

    def test_domain(self):
        with self.assertRaises(DomainError):
            power_lower(0.5, -0.5, 0.0, 0.5)
        with self.assertRaises(DomainError):
            power_upper(0.5, -0.5, 1.0, 1.0)

class TestConstant(unittest.TestCase):

    def test_matches_power_zero(self):
        for mu in (-0.5, 0.7, -1.2 + 0.2j):
            self.assertTrue(close(constant_lower(mu, 1.3, 0.4), power_lower(0.0, mu, 1.3, 0.4), 1e-11), mu)
            self.assertTrue(close(constant_upper(mu, 1.3, 0.4), power_upper(0.0, mu, 1.3, 0.4), 1e-11), mu)

    def test_matches_operators(self):
        for side, closed in ((Side.LOWER, constant_lower), (Side.UPPER, constant_upper)):
            for mu in (-0.5, 0.7):
                value = differint(EvalRequest(constant(), mu, 1.3, 0.4, side)).value
                self.assertTrue(close(value, closed(mu, 1.3, 0.4), 1e-9), (side, mu))

    def test_high_orders(self):
        # 1/Gamma(1 - mu) grows like Gamma(mu)
        expected = complex((1 - mpmath.mpf(0.5) ** -120.5) * mpmath.rgamma(1 - mpmath.mpf(120.5)))
        self.assertTrue(close(constant_lower(120.5, 1.0, 0.5), expected, 1e-10))
        with self.assertRaises(NumericOverflowError):
            constant_lower(200.5, 1.0, 0.5)

class TestClassicalForms(unittest.TestCase):

    def test_classical_power(self):
        self.assertTrue(close(classical_power(2.0, -1.0, 3.0), 9.0, 1e-13))
        self.assertTrue(close(classical_power(2.0, 1.0, 3.0), 6.0, 1e-13))
        self.assertTrue(close(classical_power(0.0, 0.5, 4.0), 1 / math.sqrt(math.pi * 4.0), 1e-13))
        with self.assertRaises(DomainError):
            classical_power(-1.5, 0.5, 1.0)

    def test_classical_exp_branches(self):
        # the incomplete-gamma branch and the series agree for real alpha > 0
        for mu in (-0.5, -2.3):
            expected = complex(mpmath.mpf(1.2) ** (-mu) * mpmath.nsum(lambda k: mpmath.mpf(1.2) ** k / mpmath.gamma(k + 1 - mu), [0, mpmath.inf]))
            self.assertTrue(close(classical_exp(1.0, mu, 1.2), expected, 1e-11), mu)
        self.assertTrue(close(classical_exp(1.0, 1, 1.2), math.exp(1.2), 1e-12))
        self.assertTrue(close(classical_exp(-2.0, 2, 0.8), 4 * math.exp(-1.6), 1e-12))

    def test_classical_exp_domain(self):
        with self.assertRaises(DomainError):
            classical_exp(0.0, 0.5, 1.0)
        with self.assertRaises(DomainError):
            classical_exp(1.0, 0.5, -1.0)

class TestHypergeometricForms(unittest.TestCase):

    def test_complete_against_mpmath(self):
        lam, alpha, mu, x = 1.5, 0.5, -0.7, 0.6
        integrand = lambda t: (x - t) ** (-mu - 1) * t ** (lam - 1) * (1 - t) ** (-alpha)
        expected = complex(mpmath.quad(integrand, [0, x]) / mpmath.gamma(-mu))
        self.assertTrue(close(power2_complete(lam, alpha, mu, x), expected, 1e-10))

    def test_sides_sum_to_complete(self):
        for mu in (-0.7, -1.4, 0.5):
            total = power2_lower(1.5, 0.5, mu, 0.6, 0.3) + power2_upper(1.5, 0.5, mu, 0.6, 0.3)
            self.assertTrue(close(total, power2_complete(1.5, 0.5, mu, 0.6), 1e-9), mu)

    def test_matches_operators(self):
        for side, closed in ((Side.LOWER, power2_lower), (Side.UPPER, power2_upper)):
            value = differint(EvalRequest(power2(1.5, 0.5), -0.7, 0.6, 0.3, side)).value
            self.assertTrue(close(value, closed(1.5, 0.5, -0.7, 0.6, 0.3), 1e-8), side)

    def test_domain(self):
        with self.assertRaises(DomainError):
            power2_lower(1.5, 0.5, -0.7, 1.0, 0.3)
        with self.assertRaises(DomainError):
            power2_complete(1.5, 0.5, -0.7, 1.2)

class TestCompositionSides(unittest.TestCase):

    def test_identities_hold(self):
        for identity in Identity:
            for lam in (0.0, 0.5, 2.0):
                lhs, rhs = power_composition_sides(identity, lam, 1.6, 1.4, 0.3)
                self.assertTrue(close(lhs, rhs, 1e-10), (identity, lam))

    def test_domain(self):
        with self.assertRaises(DomainError):
            power_composition_sides(Identity.D_UPPER, 0.5, 0.9, 1.0, 0.5)
        with self.assertRaises(DomainError):
            power_composition_sides(Identity.LOWER_D, -0.5, 1.5, 1.0, 0.5)

class TestNested(unittest.TestCase):

    def test_lower_integrals(self):
        lam, mu, nu, x, y = 0.5, 0.4, 0.6, 0.5, 0.5
        expected = (complex(mpmath.betainc(lam + 1, nu, 0, y) * mpmath.betainc(lam + nu + 1, mu, 0, y))
                    / complex(mpmath.gamma(mu) * mpmath.gamma(nu)) * x ** (lam + mu + nu))
        self.assertTrue(close(nested_power(Side.LOWER, lam, -nu, -mu, x, y), expected, 1e-10))

    def test_inversion_fails_for_incomplete(self):
        for side in Side:
            ratio = inversion_ratio(side, 1.0, 0.5, 0.5)
            self.assertGreater(abs(ratio - 1), 1e-3, side)

if __name__ == '__main__':
    unittest.main()
