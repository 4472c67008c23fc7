"""
irlfrac Closed forms module.

This module provides closed-form values of the incomplete and classical operators, used as oracles
for the numerical operators. It includes:

- power_lower, power_upper: The operators on t^lambda through incomplete beta functions, for every mu.
- constant_lower, constant_upper: The same for f = 1.
- classical_exp, classical_power: The classical operator based at 0 on e^(alpha t) and t^alpha.
- power2_lower, power2_upper: The operators on t^(lambda - 1) (1 - t)^(-alpha) through incomplete
  hypergeometric integrals.
- power_composition_sides: Both sides of the composition identities for t^lambda.
- nested_power, inversion_ratio: Compositions of two incomplete operators on t^lambda.

All orders mu are differentiation orders; integrals have Re(mu) < 0. Powers of x use the principal
branch with x > 0.
"""

import cmath, logging, math
from dataclasses import dataclass
import numpy as np
from irlfrac.exceptions import DomainError
from irlfrac.operators import Identity, Side
from irlfrac.quadrature import integrate_endpoint_power, require_converged
from irlfrac.specfun import (SPECFUN_QUAD, gamma, reciprocal_gamma, incomplete_beta,
                             gauss_2f1, lower_incomplete_gamma)

log = logging.getLogger("irlfrac.closedforms")

@dataclass(frozen=True)
class PowerLawParams:
    """
    Parameters of the power-law test functions.

    Attributes:
        lam (complex): Exponent lambda; Re(lambda) > -1 for t^lambda, Re(lambda) > 0 with alpha.
        alpha (complex, optional): Exponent of (1 - t)^(-alpha) for the hypergeometric family.
    """
    lam: complex
    alpha: complex = None

    def __post_init__(self):
        lam = complex(self.lam)
        object.__setattr__(self, "lam", lam)
        if self.alpha is None:
            if not lam.real > -1:
                raise DomainError(f"lambda={lam!r}", None, "Power closed forms require Re(lambda) > -1:")
        else:
            object.__setattr__(self, "alpha", complex(self.alpha))
            if not lam.real > 0:
                raise DomainError(f"lambda={lam!r}", None, "Hypergeometric closed forms require Re(lambda) > 0:")

def _xpow(x, exponent):
    return cmath.exp(complex(exponent) * math.log(x))

def _check(x, y):
    if not x > 0:
        raise DomainError(f"x={x!r}", None, "Closed forms require x > 0:")
    if not 0 < y < 1:
        raise DomainError(f"y={y!r}", None, "Closed forms require 0 < y < 1:")

def power_lower(lam, mu, x, y):
    """
    Returns the lower operator on t^lambda, B_y(lambda + 1, -mu) / Gamma(-mu) * x^(lambda - mu).

    Args:
        lam (complex): Re(lambda) > -1.
        mu (complex): Any order.
        x (float): x > 0.
        y (float): 0 < y < 1.

    Returns:
        complex: The value; 0 when mu is a nonnegative integer.
    """
    lam, mu = PowerLawParams(lam).lam, complex(mu)
    _check(x, y)
    rg = reciprocal_gamma(-mu)
    if rg == 0:
        return 0j
    return incomplete_beta(y, lam + 1.0, -mu) * rg * _xpow(x, lam - mu)

def power_upper(lam, mu, x, y):
    """
    Returns the upper operator on t^lambda, B_(1 - y)(-mu, lambda + 1) / Gamma(-mu) * x^(lambda - mu).

    For Re(mu) >= 0 the beta quotient is continued as
    Gamma(lambda + 1) / Gamma(lambda + 1 - mu) - B_y(lambda + 1, -mu) / Gamma(-mu).

    Args:
        lam (complex): Re(lambda) > -1.
        mu (complex): Any order.
        x (float): x > 0.
        y (float): 0 < y < 1.

    Returns:
        complex: The value.
    """
    lam, mu = PowerLawParams(lam).lam, complex(mu)
    _check(x, y)
    if (-mu).real > 0:
        coefficient = incomplete_beta(1.0 - y, -mu, lam + 1.0) * reciprocal_gamma(-mu)
    else:
        coefficient = gamma(lam + 1.0) * reciprocal_gamma(lam + 1.0 - mu) - power_lower(lam, mu, 1.0, y)
    return coefficient * _xpow(x, lam - mu)

def constant_lower(mu, x, y):
    """
    Returns the lower operator on f = 1, (1 - (1 - y)^(-mu)) x^(-mu) / Gamma(1 - mu).
    """
    mu = complex(mu)
    _check(x, y)
    return (1.0 - _xpow(1.0 - y, -mu)) * _xpow(x, -mu) * reciprocal_gamma(1.0 - mu)

def constant_upper(mu, x, y):
    """
    Returns the upper operator on f = 1, (1 - y)^(-mu) x^(-mu) / Gamma(1 - mu).
    """
    mu = complex(mu)
    _check(x, y)
    return _xpow(1.0 - y, -mu) * _xpow(x, -mu) * reciprocal_gamma(1.0 - mu)

def classical_power(alpha, mu, x):
    """
    Returns the classical operator on t^alpha based at 0, Gamma(alpha + 1) / Gamma(alpha - mu + 1) x^(alpha - mu).

    Args:
        alpha (complex): Re(alpha) > -1.
        mu (complex): Any order.
        x (float): x > 0.

    Returns:
        complex: The value.
    """
    alpha, mu = complex(alpha), complex(mu)
    if not alpha.real > -1:
        raise DomainError(f"alpha={alpha!r}", None, "classical_power requires Re(alpha) > -1:")
    if not x > 0:
        raise DomainError(f"x={x!r}", None, "Closed forms require x > 0:")
    return gamma(alpha + 1.0) * reciprocal_gamma(alpha - mu + 1.0) * _xpow(x, alpha - mu)

def classical_exp(alpha, mu, x):
    """
    Returns the classical operator on e^(alpha t) based at 0.

    For real alpha > 0 and Re(mu) < 0 the value is alpha^mu e^(alpha x) gamma(-mu, alpha x) / Gamma(-mu);
    otherwise the entire series x^(-mu) sum_k (alpha x)^k / Gamma(k + 1 - mu) is summed.

    Args:
        alpha (complex): alpha != 0.
        mu (complex): Any order.
        x (float): x > 0.

    Returns:
        complex: The value.
    """
    alpha, mu = complex(alpha), complex(mu)
    if alpha == 0:
        raise DomainError("alpha=0", None, "classical_exp requires alpha != 0:")
    if not x > 0:
        raise DomainError(f"x={x!r}", None, "Closed forms require x > 0:")
    if alpha.imag == 0 and alpha.real > 0 and mu.real < 0:
        a = alpha.real
        return _xpow(a, mu) * math.exp(a * x) * lower_incomplete_gamma(-mu, a * x) * reciprocal_gamma(-mu)
    z = alpha * x
    total = 0j
    power = 1 + 0j
    for k in range(2000):
        term = power * reciprocal_gamma(k + 1.0 - mu)
        total += term
        if k > abs(z) and abs(term) <= 1e-17 * abs(total):
            break
        power *= z
    return _xpow(x, -mu) * total

def _power2_smooth(mu, alpha, x):
    return lambda u: np.exp((-mu - 1.0) * np.log1p(-u)) * np.exp(-alpha * np.log1p(-u * x))

def power2_lower(lam, alpha, mu, x, y):
    """
    Returns the lower operator on t^(lambda - 1) (1 - t)^(-alpha).

    The value is x^(lambda - mu - 1) / Gamma(-mu) times the integral over [0, y] of
    (1 - u)^(-mu - 1) u^(lambda - 1) (1 - ux)^(-alpha), which equals
    Gamma(lambda) / Gamma(lambda - mu) x^(lambda - mu - 1) times the lower incomplete 2F1(alpha, [lambda, lambda - mu; y]; x).

    Args:
        lam (complex): Re(lambda) > 0.
        alpha (complex): Exponent of (1 - t).
        mu (complex): Any order.
        x (float): 0 < x < 1.
        y (float): 0 < y < 1.

    Returns:
        complex: The value.
    """
    params = PowerLawParams(lam, alpha)
    lam, alpha, mu = params.lam, params.alpha, complex(mu)
    _check(x, y)
    if not x < 1:
        raise DomainError(f"x={x!r}", None, "Hypergeometric closed forms require x < 1:")
    rg = reciprocal_gamma(-mu)
    if rg == 0:
        return 0j
    result = integrate_endpoint_power(_power2_smooth(mu, alpha, x), lam - 1.0, 0.0, y, "a", SPECFUN_QUAD)
    integral = require_converged(result, SPECFUN_QUAD, f"power2_lower({lam}, {alpha}, {mu}, x={x}, y={y})")
    return rg * integral * _xpow(x, lam - mu - 1.0)

def power2_complete(lam, alpha, mu, x):
    """
    Returns the classical operator based at 0 on t^(lambda - 1) (1 - t)^(-alpha),
    Gamma(lambda) x^(lambda - mu - 1) 2F1(alpha, lambda; lambda - mu; x) / Gamma(lambda - mu).
    """
    params = PowerLawParams(lam, alpha)
    if not 0 < x < 1:
        raise DomainError(f"x={x!r}", None, "Hypergeometric closed forms require 0 < x < 1:")
    mu = complex(mu)
    return gamma(params.lam) * _xpow(x, params.lam - mu - 1.0) * gauss_2f1(params.alpha, params.lam, params.lam - mu, x, regularized=True)

def power2_upper(lam, alpha, mu, x, y):
    """
    Returns the upper operator on t^(lambda - 1) (1 - t)^(-alpha).

    For Re(mu) < 0 the integral over [y, 1] is evaluated directly; otherwise the value is continued
    as power2_complete minus power2_lower.

    Args:
        lam (complex): Re(lambda) > 0.
        alpha (complex): Exponent of (1 - t).
        mu (complex): Any order.
        x (float): 0 < x < 1.
        y (float): 0 < y < 1.

    Returns:
        complex: The value.
    """
    params = PowerLawParams(lam, alpha)
    lam, alpha, mu = params.lam, params.alpha, complex(mu)
    _check(x, y)
    if not x < 1:
        raise DomainError(f"x={x!r}", None, "Hypergeometric closed forms require x < 1:")
    if mu.real < 0:
        smooth = lambda u: np.exp((lam - 1.0) * np.log(u)) * np.exp(-alpha * np.log1p(-u * x))
        result = integrate_endpoint_power(smooth, -mu - 1.0, y, 1.0, "b", SPECFUN_QUAD)
        integral = require_converged(result, SPECFUN_QUAD, f"power2_upper({lam}, {alpha}, {mu}, x={x}, y={y})")
        return reciprocal_gamma(-mu) * integral * _xpow(x, lam - mu - 1.0)
    return power2_complete(lam, alpha, mu, x) - power2_lower(lam, alpha, mu, x, y)

def power_composition_sides(identity, lam, mu, x, y):
    """
    Returns both sides of a composition identity for f(t) = t^lambda in closed form.

    mu is the integration order (Re(mu) > 1); the identities are those of
    operators.composition_lhs_rhs. Their agreement is an identity between incomplete beta functions.

    Args:
        identity (Identity or str): Which identity.
        lam (complex): Exponent; the identities with f' need Re(lambda) > 0 or lambda = 0.
        mu (complex): Integration order, Re(mu) > 1.
        x (float): x > 0.
        y (float): 0 < y < 1.

    Returns:
        tuple: (lhs, rhs) as complex numbers.
    """
    identity = Identity(identity)
    lam, mu = complex(lam), complex(mu)
    if not mu.real > 1:
        raise DomainError(f"mu={mu!r}", None, "Composition identities require Re(mu) > 1:")
    lower = identity in (Identity.D_LOWER, Identity.LOWER_D)
    form = power_lower if lower else power_upper
    boundary = _xpow(x, mu - 1.0) * _xpow(1.0 - y, mu - 1.0) * _xpow(x * y, lam) * reciprocal_gamma(mu)
    previous = form(lam, 1.0 - mu, x, y)
    if identity in (Identity.D_LOWER, Identity.D_UPPER):
        lhs = (lam + mu) * form(lam, -mu, x, y) / x
        rhs = (y if lower else -y) * boundary + previous
        return lhs, rhs
    if not (lam == 0 or lam.real > 0):
        raise DomainError(f"lambda={lam!r}", None, "Identities with f' require Re(lambda) > 0 or lambda = 0:")
    lhs = 0j if lam == 0 else lam * form(lam - 1.0, -mu, x, y)
    if lower:
        at_zero = 1.0 if lam == 0 else 0.0
        rhs = boundary - _xpow(x, mu - 1.0) * at_zero * reciprocal_gamma(mu) + previous
    else:
        rhs = -boundary + previous
    return lhs, rhs

def _coefficient(side, lam, mu, y):
    return power_lower(lam, mu, 1.0, y) if side is Side.LOWER else power_upper(lam, mu, 1.0, y)

def nested_power(side, lam, inner, outer, x, y):
    """
    Returns D^outer[D^inner[t^lambda; y]; y](x) for two operators of the same side.

    The inner operator maps t^lambda to c_1 t^(lambda - inner), so the composition is
    c_1 c_2 x^(lambda - inner - outer); for two lower integrals this is
    B_y(lambda + 1, nu) B_y(lambda + nu + 1, mu) / (Gamma(mu) Gamma(nu)) x^(lambda + mu + nu) with nu = -inner
    and mu = -outer.

    Args:
        side (Side or str): Lower or upper.
        lam (complex): Re(lambda) > -1.
        inner (complex): Order of the first operator.
        outer (complex): Order of the second operator; Re(lambda - inner) > -1.
        x (float): x > 0.
        y (float): 0 < y < 1.

    Returns:
        complex: The composition.
    """
    side = Side(side)
    lam, inner, outer = complex(lam), complex(inner), complex(outer)
    first = _coefficient(side, lam, inner, y)
    second = _coefficient(side, lam - inner, outer, y)
    return first * second * _xpow(x, lam - inner - outer)

def inversion_ratio(side, lam, mu, y):
    """
    Returns D^mu[I^mu[t^lambda; y]; y] / t^lambda, which is 1 for the classical operators.

    Args:
        side (Side or str): Lower or upper.
        lam (complex): Re(lambda) > -1.
        mu (complex): Integration order, Re(mu) > 0.
        y (float): 0 < y < 1.

    Returns:
        complex: The ratio, independent of x.
    """
    return nested_power(side, lam, -complex(mu), complex(mu), 1.0, y)

# Define the public interface of the module
__all__ = [
    "PowerLawParams", "power_lower", "power_upper", "constant_lower", "constant_upper", "classical_power", "classical_exp",
    "power2_lower", "power2_complete", "power2_upper", "power_composition_sides", "nested_power", "inversion_ratio",
]
