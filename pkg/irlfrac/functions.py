"""
irlfrac Functions module.

This module provides the function descriptions consumed by the operators and verification checks.
It includes:

- Smoothness: The function-space tags that decide which operators and fallbacks are allowed.
- FunctionSpec: A value callback with optional derivative callbacks and smoothness metadata.
- Builtin constructors: constant, power, exponential, sine, power2.
- Combinators: product, times_monomial, composite.

Callbacks are vectorised: they receive a 1-D float array and return an array of the same shape.
Calling a FunctionSpec with a scalar returns a complex scalar.
"""

import enum, logging, math
from dataclasses import dataclass, field
import numpy as np
from irlfrac.differences import richardson_derivative, default_step
from irlfrac.exceptions import DomainError, MissingDerivatives
from irlfrac.specfun import gamma_ratio, faa_di_bruno_derivative

log = logging.getLogger("irlfrac.functions")

DEFAULT_DERIVATIVES = 30
_SPOT_CHECK_ORDERS = 8
_SPOT_CHECK_TOLERANCE = 1e-4

class Smoothness(enum.Enum):
    """Declared function class of a FunctionSpec."""

    #: Integrable on [0, yb] only.
    L1_LOWER = "L1-on-[0,yb]"
    #: Integrable on [0, b].
    L1 = "L1"
    #: Bounded on [0, b].
    L_INFINITY = "L-infinity"
    #: n times continuously differentiable; missing derivatives may be computed numerically.
    CN = "C^n"
    #: Analytic; missing derivatives may be computed numerically.
    ANALYTIC = "analytic"

@dataclass(frozen=True)
class FunctionSpec:
    """
    A user function on [0, b] for the incomplete operators.

    Attributes:
        value (callable): Vectorised callback t -> f(t).
        derivs (tuple): Vectorised callbacks f', f'', ... (possibly empty).
        domain_bound (float): b > 0, the right end of the domain.
        smoothness (Smoothness): Declared function class.
        name (str): Label used in reports and logs.
        radius (float): Radius of the disk of analyticity about any point of (0, b].
        check_derivs (bool): Run the finite-difference spot check of `derivs` on construction.
    """
    value: object
    derivs: tuple = ()
    domain_bound: float = math.inf
    smoothness: Smoothness = Smoothness.L1
    name: str = "f"
    radius: float = 0.0
    check_derivs: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "derivs", tuple(self.derivs))
        if not self.domain_bound > 0:
            raise DomainError(f"domain_bound={self.domain_bound!r}", None, "Function domain bound must be positive:")
        if self.derivs and self.check_derivs:
            self._spot_check()

    def _spot_check(self):
        bound = min(self.domain_bound, 2.0)
        points = np.random.default_rng(0).uniform(0.2 * bound, 0.8 * bound, 3)
        callbacks = (self.value,) + self.derivs
        for k in range(1, min(len(callbacks), _SPOT_CHECK_ORDERS + 1)):
            for t in points:
                expected = _scalar(callbacks[k], t)
                estimate, _ = richardson_derivative(lambda s: _scalar(callbacks[k - 1], s), float(t), 5e-3 * t)
                if abs(estimate - expected) > _SPOT_CHECK_TOLERANCE * max(abs(expected), 1e-2):
                    raise DomainError(f"{self.name}: derivative {k} at t={t:.6g} is {expected!r}, finite differences give {estimate!r}",
                                      None, "Derivative callbacks are inconsistent:")

    def __call__(self, t):
        if np.ndim(t) == 0:
            return _scalar(self.value, t)
        return _vector(self.value, t)

    @property
    def fd_fallback(self):
        """True if missing derivatives may be computed by finite differences."""
        return self.smoothness in (Smoothness.CN, Smoothness.ANALYTIC)

    @property
    def is_analytic(self):
        """True if tagged analytic."""
        return self.smoothness is Smoothness.ANALYTIC

    def derivative(self, k):
        """
        Returns the k-th derivative as a FunctionSpec.

        Supplied callbacks are used first; beyond them, finite differences are used only for the
        C^n and analytic tags.

        Args:
            k (int): Derivative order, k >= 0.

        Returns:
            FunctionSpec: f^(k).

        Raises:
            MissingDerivatives: If f^(k) is neither supplied nor allowed to be approximated.
        """
        if k == 0:
            return self
        if k <= len(self.derivs):
            return FunctionSpec(self.derivs[k - 1], self.derivs[k:], self.domain_bound, self.smoothness,
                                f"{self.name}^({k})", self.radius, check_derivs=False)
        if not self.fd_fallback:
            raise MissingDerivatives(f"{self.name} supplies {len(self.derivs)} derivatives, order {k} requested with smoothness {self.smoothness.value}")
        base = self.derivative(len(self.derivs)) if self.derivs else self
        order = k - len(self.derivs)
        log.debug(f"Using finite differences for derivative {k} of {self.name}.")

        def approximate(t):
            t = np.atleast_1d(np.asarray(t, dtype=float))
            return np.array([richardson_derivative(base, s, default_step(s, order), order)[0] for s in t])

        return FunctionSpec(approximate, (), self.domain_bound, self.smoothness, f"{self.name}^({k})", self.radius)

# weakest first
_STRENGTH = [Smoothness.L1_LOWER, Smoothness.L1, Smoothness.L_INFINITY, Smoothness.CN, Smoothness.ANALYTIC]

def _scalar(callback, t):
    return complex(np.asarray(callback(np.array([float(t)])), dtype=complex).reshape(-1)[0])

def _vector(callback, t):
    t = np.asarray(t, dtype=float)
    return np.broadcast_to(np.asarray(callback(t), dtype=complex), t.shape)

def _power_callback(coefficient, exponent):
    exponent = complex(exponent)
    if coefficient == 0:
        return lambda t: np.zeros(np.shape(t), dtype=complex)
    if exponent.imag == 0:
        real = exponent.real
        if real == 0:
            return lambda t: np.full(np.shape(t), coefficient, dtype=complex)
        return lambda t: coefficient * np.power(np.asarray(t, dtype=float), real).astype(complex)

    def complex_power(t):
        t = np.asarray(t, dtype=float)
        safe = np.where(t > 0, t, 1.0)
        return np.where(t > 0, coefficient * np.exp(exponent * np.log(safe)), 0j)

    return complex_power

def constant(c = 1.0, domain_bound = math.inf):
    """
    Returns the constant function f(t) = c.
    """
    c = complex(c)
    zeros = tuple(_power_callback(0, 0) for _ in range(DEFAULT_DERIVATIVES))
    return FunctionSpec(_power_callback(c, 0), zeros, domain_bound, Smoothness.ANALYTIC, f"const({c.real:g})" if c.imag == 0 else f"const({c})", math.inf)

def power(lam, domain_bound = math.inf, derivatives = DEFAULT_DERIVATIVES):
    """
    Returns f(t) = t^lambda with its falling-factorial derivatives.

    Args:
        lam (complex): Exponent lambda, Re(lambda) > -1.
        domain_bound (float, optional): Right end of the domain. Defaults to infinity.
        derivatives (int, optional): Number of derivative callbacks. Defaults to 30.

    Returns:
        FunctionSpec: The power function; analytic when lambda is a nonnegative integer.

    Raises:
        DomainError: If Re(lambda) <= -1.
    """
    lam = complex(lam)
    if not lam.real > -1:
        raise DomainError(f"lambda={lam!r}", None, "Power function requires Re(lambda) > -1:")
    polynomial = lam.imag == 0 and lam.real >= 0 and lam.real == int(lam.real)
    derivs = tuple(_power_callback((-1) ** k * gamma_ratio(lam, k), lam - k) for k in range(1, derivatives + 1))
    label = f"{lam.real:g}" if lam.imag == 0 else f"{lam}"
    if polynomial:
        return FunctionSpec(_power_callback(1.0, lam), derivs, domain_bound, Smoothness.ANALYTIC, f"t^{label}", math.inf)
    smoothness = Smoothness.CN if lam.real >= 0 else Smoothness.L1
    return FunctionSpec(_power_callback(1.0, lam), derivs, domain_bound, smoothness, f"t^{label}", 0.0)

def exponential(alpha = 1.0, domain_bound = math.inf, derivatives = DEFAULT_DERIVATIVES):
    """
    Returns f(t) = exp(alpha t).
    """
    alpha = complex(alpha)

    def scaled(k):
        factor = alpha ** k
        return lambda t: factor * np.exp(alpha * np.asarray(t, dtype=float))

    label = f"{alpha.real:g}" if alpha.imag == 0 else f"{alpha}"
    return FunctionSpec(scaled(0), tuple(scaled(k) for k in range(1, derivatives + 1)), domain_bound,
                        Smoothness.ANALYTIC, f"exp({label}t)", math.inf)

def sine(domain_bound = math.inf, derivatives = DEFAULT_DERIVATIVES):
    """
    Returns f(t) = sin(t).
    """
    def shifted(k):
        return lambda t: np.sin(np.asarray(t, dtype=float) + 0.5 * k * math.pi).astype(complex)

    return FunctionSpec(shifted(0), tuple(shifted(k) for k in range(1, derivatives + 1)), domain_bound,
                        Smoothness.ANALYTIC, "sin(t)", math.inf)

def power2(lam, alpha, derivatives = 8):
    """
    Returns f(t) = t^(lambda - 1) (1 - t)^(-alpha) on [0, 1).

    Args:
        lam (complex): Exponent parameter, Re(lambda) > 0.
        alpha (complex): Exponent of (1 - t).
        derivatives (int, optional): Number of derivative callbacks. Defaults to 8.

    Returns:
        FunctionSpec: The function, with domain bound 1.

    Raises:
        DomainError: If Re(lambda) <= 0.
    """
    lam, alpha = complex(lam), complex(alpha)
    if not lam.real > 0:
        raise DomainError(f"lambda={lam!r}", None, "The hypergeometric test function requires Re(lambda) > 0:")

    def nth(k):
        # Leibniz rule on t^(lambda - 1) times (1 - t)^(-alpha)
        terms = [(math.comb(k, j) * (-1) ** j * gamma_ratio(lam - 1.0, j) * gamma_ratio(-alpha, k - j), j)
                 for j in range(k + 1)]

        def callback(t):
            t = np.asarray(t, dtype=float)
            total = np.zeros(t.shape, dtype=complex)
            for coefficient, j in terms:
                if coefficient != 0:
                    total += coefficient * _power_callback(1.0, lam - 1.0 - j)(t) * np.exp(-(alpha + k - j) * np.log1p(-t))
            return total

        return callback

    return FunctionSpec(nth(0), tuple(nth(k) for k in range(1, derivatives + 1)), 1.0, Smoothness.CN,
                        f"t^({lam}-1)(1-t)^(-{alpha})", 0.0)

def product(f, g):
    """
    Returns the pointwise product f g, with derivatives by the Leibniz rule.

    Args:
        f (FunctionSpec): First factor.
        g (FunctionSpec): Second factor.

    Returns:
        FunctionSpec: The product on the smaller of the two domains.
    """
    order = min(len(f.derivs), len(g.derivs))
    fs = (f.value,) + f.derivs
    gs = (g.value,) + g.derivs

    def nth(k):
        def callback(t):
            return sum(math.comb(k, j) * _vector(fs[j], t) * _vector(gs[k - j], t) for j in range(k + 1))

        return callback

    smoothness = min(f.smoothness, g.smoothness, key=_STRENGTH.index)
    return FunctionSpec(nth(0), tuple(nth(k) for k in range(1, order + 1)), min(f.domain_bound, g.domain_bound),
                        smoothness, f"{f.name}*{g.name}", min(f.radius, g.radius), check_derivs=False)

def times_monomial(f, n):
    """
    Returns t -> t^n f(t).
    """
    return product(power(n), f)

def composite(outer, inner, derivatives = 16):
    """
    Returns t -> outer(inner(t)), with derivatives by the Faa di Bruno formula.

    Args:
        outer (FunctionSpec): Outer function f, evaluated at g(t).
        inner (FunctionSpec): Inner function g.
        derivatives (int, optional): Largest derivative order supplied, at most 16. Defaults to 16.

    Returns:
        FunctionSpec: The composite f o g.
    """
    order = min(len(outer.derivs), len(inner.derivs), derivatives)
    fs = (outer.value,) + outer.derivs
    gs = inner.derivs

    def at_inner(callback, t):
        return _vector(callback, np.real(_vector(inner.value, t)))

    def nth(k):
        if k == 0:
            return lambda t: at_inner(outer.value, t)

        def callback(t):
            t = np.atleast_1d(np.asarray(t, dtype=float))
            f_values = [at_inner(fs[r], t) for r in range(1, k + 1)]
            g_values = [_vector(gs[j], t) for j in range(k)]
            return np.array([faa_di_bruno_derivative([fv[i] for fv in f_values], [gv[i] for gv in g_values], k)
                             for i in range(t.size)])

        return callback

    smoothness = Smoothness.ANALYTIC if outer.is_analytic and inner.is_analytic else Smoothness.CN
    return FunctionSpec(nth(0), tuple(nth(k) for k in range(1, order + 1)), inner.domain_bound, smoothness,
                        f"{outer.name}({inner.name})", min(outer.radius, inner.radius), check_derivs=False)

# Define the public interface of the module
__all__ = [
    "DEFAULT_DERIVATIVES", "Smoothness", "FunctionSpec", "constant", "power", "exponential", "sine", "power2",
    "product", "times_monomial", "composite",
]
