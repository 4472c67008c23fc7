"""
irlfrac Differences module.

This module provides numerical differentiation by central differences with Richardson extrapolation.
It includes:

- central_difference: The k-th order central difference quotient of a scalar callable.
- richardson_derivative: Repeated halving of the step combined by Richardson extrapolation.
- default_step: A step size that keeps every stencil point on the positive axis.

The callables differentiated here are scalar: they take one float and return a number. Operators
wrap themselves as such callables for the recurrence derivatives and the composition identities.
"""

import logging
from math import comb
import numpy as np

log = logging.getLogger("irlfrac.differences")

def central_difference(func, x, h, order = 1):
    """
    Computes the central difference quotient of the given order.

    The stencil is sum_j (-1)^j C(k, j) f(x + (k/2 - j) h) / h^k, which is second order accurate.

    Args:
        func (callable): Scalar callable.
        x (float): Evaluation point.
        h (float): Step size, h > 0.
        order (int, optional): Derivative order k >= 1. Defaults to 1.

    Returns:
        complex: The difference quotient.
    """
    total = 0j
    for j in range(order + 1):
        total += (-1) ** j * comb(order, j) * complex(func(x + (0.5 * order - j) * h))
    return total / h ** order

def richardson_derivative(func, x, h, order = 1, levels = 3):
    """
    Differentiates a scalar callable by Richardson-extrapolated central differences.

    The central quotients D_1, D_2, ... at steps h, h/2, ... are combined in a Richardson table with
    factors 4, 16, ...; with three levels the result is (16 R_2 - R_1)/15 where
    R_i = (4 D_(i+1) - D_i)/3.

    Args:
        func (callable): Scalar callable.
        x (float): Evaluation point.
        h (float): Largest step, h > 0.
        order (int, optional): Derivative order. Defaults to 1.
        levels (int, optional): Number of step halvings in the table. Defaults to 3.

    Returns:
        tuple: (value, error estimate), the error being the change made by the last extrapolation.
    """
    row = [central_difference(func, x, h / 2 ** i, order) for i in range(levels)]
    previous = row[-1]
    factor = 4.0
    while len(row) > 1:
        previous = row[-1]
        row = [(factor * row[i + 1] - row[i]) / (factor - 1.0) for i in range(len(row) - 1)]
        factor *= 4.0
    value = row[0]
    error = float(abs(value - previous))
    log.debug(f"Richardson derivative of order {order} at {x} with step {h:.3e}: error {error:.3e}.")
    return value, error

def default_step(x, order = 1, scale = 1e-2):
    """
    Returns a step for differentiating near x.

    Args:
        x (float): Evaluation point.
        order (int, optional): Derivative order. Defaults to 1.
        scale (float, optional): Step relative to max(|x|, 1). Defaults to 1e-2.

    Returns:
        float: The step, capped so that x - order * h / 2 stays above 0 when x > 0.
    """
    h = scale * max(abs(x), 1.0)
    if x > 0:
        h = min(h, x / (order + 1.0))
    return float(np.float64(h))

# Define the public interface of the module
__all__ = ["central_difference", "richardson_derivative", "default_step"]
