import unittest, math
from irlfrac.differences import central_difference, richardson_derivative, default_step

class TestCentralDifference(unittest.TestCase):

    def test_first_order(self):
        value = central_difference(math.sin, 0.3, 1e-4)
        self.assertAlmostEqual(value.real, math.cos(0.3), places=7)

    def test_second_order_stencil(self):
        # exact on quadratics
        value = central_difference(lambda t: 3 * t * t - t + 2, 1.7, 0.5, order=2)
        self.assertAlmostEqual(value.real, 6.0, places=10)

class TestRichardson(unittest.TestCase):

    def test_first_derivative(self):
        value, error = richardson_derivative(math.exp, 1.0, 1e-2)
        self.assertAlmostEqual(value.real, math.e, places=10)
        self.assertLess(error, 1e-8)

    def test_higher_orders(self):
        for order, expected in ((2, -math.sin(0.8)), (3, -math.cos(0.8))):
            value, _ = richardson_derivative(math.sin, 0.8, 0.1, order=order)
            self.assertAlmostEqual(value.real, expected, places=7)

    def test_complex_values(self):
        value, _ = richardson_derivative(lambda t: complex(math.cos(t), math.sin(t)), 0.5, 1e-2)
        self.assertAlmostEqual(value.real, -math.sin(0.5), places=10)
        self.assertAlmostEqual(value.imag, math.cos(0.5), places=10)

class TestDefaultStep(unittest.TestCase):

    def test_scales_with_x(self):
        self.assertAlmostEqual(default_step(5.0), 0.05)
        self.assertAlmostEqual(default_step(-5.0), 0.05)
        self.assertAlmostEqual(default_step(0.0), 0.01)

    def test_stencil_stays_positive(self):
        for x in (1e-3, 0.01, 0.2):
            for order in (1, 2, 4):
                h = default_step(x, order)
                self.assertGreater(x - 0.5 * order * h, 0.0)

if __name__ == '__main__':
    unittest.main()
