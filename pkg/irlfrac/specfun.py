"""
irlfrac Special functions module.

This module provides the complex special functions behind every closed form of the incomplete
Riemann-Liouville operators. It includes:

- gamma, loggamma and reciprocal_gamma: Lanczos approximation with reflection.
- beta: The complete beta function.
- lower_incomplete_gamma and upper_incomplete_gamma: Series and continued fraction.
- incomplete_beta and complementary_incomplete_beta: Quadrature of the defining integral, valid for
  any second parameter when y < 1, and the continuation B(a, b) - B_y(b, a) for the complement.
- gamma_ratio and generalized_binomial: Pole-free products.
- gauss_2f1 and incomplete_gauss_2f1: The Gauss hypergeometric series and its incomplete kinds.
- faa_di_bruno_partitions, faa_di_bruno_derivative and partial_bell_polynomials: Derivatives of
  composite functions.
"""

import cmath, logging, math
from dataclasses import dataclass
import numpy as np
from irlfrac.exceptions import DomainError, PoleError, NumericOverflowError, LimitError, ArityError
from irlfrac.quadrature import QuadConfig, integrate_endpoint_power, require_converged

log = logging.getLogger("irlfrac.specfun")

_LANCZOS_G = 7
_LANCZOS_COEFFICIENTS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)
_LOG_MAX = math.log(np.finfo(float).max)
_EPS = np.finfo(float).eps
_TINY = 1e-300
_MAX_ITERATIONS = 10000
_PARTITION_LIMIT = 16

# Tolerances for the quadratures behind the incomplete beta and hypergeometric functions.
SPECFUN_QUAD = QuadConfig(abs_tol=1e-14, rel_tol=1e-13)

def _is_pole(z):
    return z.imag == 0 and z.real <= 0 and z.real == math.floor(z.real)

def _cpow(base, exponent):
    # principal branch for positive real bases, scalar or array
    return np.exp(complex(exponent) * np.log(base))

def loggamma(z):
    """
    Computes log(Gamma(z)) by the Lanczos approximation (g = 7, nine coefficients).

    The imaginary part is a branch of arg(Gamma(z)), not necessarily the principal one; only
    exp(loggamma(z)) and the real part are meaningful.

    Args:
        z (complex): Argument, not a nonpositive integer.

    Returns:
        complex: log(Gamma(z)).

    Raises:
        PoleError: If z is a nonpositive integer.
    """
    z = complex(z)
    if _is_pole(z):
        raise PoleError(f"z={z!r}")
    if z.real < 0.5:
        return complex(math.log(math.pi) - cmath.log(cmath.sin(math.pi * z)) - loggamma(1.0 - z))
    z -= 1.0
    series = _LANCZOS_COEFFICIENTS[0]
    for i, coefficient in enumerate(_LANCZOS_COEFFICIENTS[1:], start=1):
        series += coefficient / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_TWO_PI + (z + 0.5) * cmath.log(t) - t + cmath.log(series)

def gamma(z):
    """
    Computes the gamma function for complex arguments.

    Values below the floating-point range underflow to 0.

    Args:
        z (complex): Argument.

    Returns:
        complex: Gamma(z).

    Raises:
        PoleError: If z is a nonpositive integer.
        NumericOverflowError: If |Gamma(z)| exceeds the floating-point range.
    """
    z = complex(z)
    if _is_pole(z):
        raise PoleError(f"z={z!r}")
    log_value = loggamma(z)
    if log_value.real > _LOG_MAX:
        raise NumericOverflowError(f"Gamma({z!r})")
    return _real_if_real(z, cmath.exp(log_value))

def reciprocal_gamma(z):
    """
    Computes 1/Gamma(z), an entire function.

    The value is formed from log(Gamma(z)), so Gamma(1 - z) overflowing inside the reflection formula
    does not matter as long as the result itself is representable.

    Args:
        z (complex): Argument.

    Returns:
        complex: 1/Gamma(z), exactly 0 at the nonpositive integers.

    Raises:
        NumericOverflowError: If |1/Gamma(z)| exceeds the floating-point range (Re(z) below about -171).
    """
    z = complex(z)
    if _is_pole(z):
        return 0j
    log_value = -loggamma(z)
    if log_value.real > _LOG_MAX:
        raise NumericOverflowError(f"1/Gamma({z!r})")
    return _real_if_real(z, cmath.exp(log_value))

def _real_if_real(z, value):
    # loggamma carries a branch of arg(Gamma); on the real axis the imaginary part is roundoff
    return complex(value.real, 0.0) if z.imag == 0 else value

def beta(a, b):
    """
    Computes the complete beta function Gamma(a) Gamma(b) / Gamma(a + b).

    Args:
        a (complex): First parameter.
        b (complex): Second parameter.

    Returns:
        complex: B(a, b); 0 when a + b is a pole and a, b are not.

    Raises:
        PoleError: If a or b is a nonpositive integer.
    """
    return gamma(a) * gamma(b) * reciprocal_gamma(complex(a) + complex(b))

def _check_incomplete_gamma(nu, x):
    nu = complex(nu)
    if not nu.real > 0:
        raise DomainError(f"nu={nu!r}", None, "Incomplete gamma requires Re(nu) > 0:")
    if not x >= 0:
        raise DomainError(f"x={x!r}", None, "Incomplete gamma requires x >= 0:")
    return nu, float(x)

def _gamma_series(nu, x):
    term = 1.0 / nu
    total = term
    for n in range(1, _MAX_ITERATIONS):
        term *= x / (nu + n)
        total += term
        if abs(term) < abs(total) * _EPS:
            return total * cmath.exp(nu * math.log(x) - x)
    raise LimitError(f"nu={nu!r}, x={x!r}", None, "Incomplete gamma series did not converge:")

def _gamma_continued_fraction(nu, x):
    b = x + 1.0 - nu
    c = 1.0 / _TINY
    d = 1.0 / b
    h = d
    for i in range(1, _MAX_ITERATIONS):
        an = -i * (i - nu)
        b += 2.0
        d = an * d + b
        if abs(d) < _TINY:
            d = _TINY
        c = b + an / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            return cmath.exp(nu * math.log(x) - x) * h
    raise LimitError(f"nu={nu!r}, x={x!r}", None, "Incomplete gamma continued fraction did not converge:")

def lower_incomplete_gamma(nu, x):
    """
    Computes gamma(nu, x), the integral of t^(nu - 1) e^(-t) over [0, x].

    The power series is used below x = Re(nu) + 1, the continued fraction of the complement above.

    Args:
        nu (complex): Parameter with Re(nu) > 0.
        x (float): Upper limit, x >= 0.

    Returns:
        complex: gamma(nu, x).

    Raises:
        DomainError: If Re(nu) <= 0 or x < 0.
    """
    nu, x = _check_incomplete_gamma(nu, x)
    if x == 0:
        return 0j
    if x < nu.real + 1.0:
        return _gamma_series(nu, x)
    return gamma(nu) - _gamma_continued_fraction(nu, x)

def upper_incomplete_gamma(nu, x):
    """
    Computes Gamma(nu, x), the integral of t^(nu - 1) e^(-t) over [x, infinity).

    Args:
        nu (complex): Parameter with Re(nu) > 0.
        x (float): Lower limit, x >= 0.

    Returns:
        complex: Gamma(nu, x).

    Raises:
        DomainError: If Re(nu) <= 0 or x < 0.
    """
    nu, x = _check_incomplete_gamma(nu, x)
    if x == 0:
        return gamma(nu)
    if x < nu.real + 1.0:
        return gamma(nu) - _gamma_series(nu, x)
    return _gamma_continued_fraction(nu, x)

def incomplete_beta(y, a, b, cfg = None):
    """
    Computes B_y(a, b), the integral of t^(a - 1) (1 - t)^(b - 1) over [0, y].

    For y < 1 the second parameter is unrestricted because (1 - t)^(b - 1) is bounded on [0, y].

    Args:
        y (float): Upper limit in [0, 1].
        a (complex): First parameter, Re(a) > 0.
        b (complex): Second parameter; Re(b) > 0 is required only when y = 1.
        cfg (QuadConfig, optional): Quadrature settings. Defaults to SPECFUN_QUAD.

    Returns:
        complex: B_y(a, b).

    Raises:
        DomainError: On violated preconditions.
        QuadratureFailure: If the quadrature falls well short of its tolerance.
    """
    a, b, y = complex(a), complex(b), float(y)
    if not 0 <= y <= 1:
        raise DomainError(f"y={y!r}", None, "Incomplete beta requires 0 <= y <= 1:")
    if not a.real > 0:
        raise DomainError(f"a={a!r}", None, "Incomplete beta requires Re(a) > 0:")
    if y == 0:
        return 0j
    if y == 1:
        if not b.real > 0:
            raise DomainError(f"b={b!r}", None, "The complete beta integral requires Re(b) > 0:")
        return beta(a, b)
    cfg = cfg or SPECFUN_QUAD
    result = integrate_endpoint_power(lambda t: _cpow(1.0 - t, b - 1.0), a - 1.0, 0.0, y, "a", cfg)
    return require_converged(result, cfg, f"B_{y}({a}, {b})")

def complementary_incomplete_beta(y, a, b, cfg = None):
    """
    Computes B_(1 - y)(a, b).

    For Re(a) > 0 this is the defining integral over [0, 1 - y]. Otherwise the value is the analytic
    continuation in a, B(a, b) - B_y(b, a), which requires Re(b) > 0.

    Args:
        y (float): Cut ratio in [0, 1].
        a (complex): First parameter.
        b (complex): Second parameter.
        cfg (QuadConfig, optional): Quadrature settings. Defaults to SPECFUN_QUAD.

    Returns:
        complex: B_(1 - y)(a, b).

    Raises:
        DomainError: If Re(a) <= 0 and Re(b) <= 0, or y is outside [0, 1].
        PoleError: If the continuation hits a gamma pole.
    """
    a, b, y = complex(a), complex(b), float(y)
    if a.real > 0:
        return incomplete_beta(1.0 - y, a, b, cfg)
    if not 0 <= y < 1:
        raise DomainError(f"y={y!r}", None, "The continued complementary beta requires 0 <= y < 1:")
    return beta(a, b) - incomplete_beta(y, b, a, cfg)

def gamma_ratio(mu, k):
    """
    Computes Gamma(-mu + k) / Gamma(-mu) as the product of (-mu + j) for j < k.

    Args:
        mu (complex): Order.
        k (int): Nonnegative integer.

    Returns:
        complex: The ratio, 1 for k = 0.
    """
    mu = complex(mu)
    result = 1 + 0j
    for j in range(k):
        result *= -mu + j
    return result

def generalized_binomial(mu, k):
    """
    Computes the binomial coefficient C(mu, k) for complex mu.

    Args:
        mu (complex): Upper argument.
        k (int): Nonnegative integer.

    Returns:
        complex: (-1)^k gamma_ratio(mu, k) / k!.
    """
    return (-1) ** k * gamma_ratio(mu, k) / math.factorial(k)

def gauss_2f1(a, b, c, x, regularized = False):
    """
    Sums the Gauss hypergeometric series 2F1(a, b; c; x) for |x| < 1.

    Args:
        a (complex): First numerator parameter.
        b (complex): Second numerator parameter.
        c (complex): Denominator parameter.
        x (float): Argument, |x| < 1.
        regularized (bool, optional): Return 2F1 / Gamma(c), which is entire in c. Defaults to False.

    Returns:
        complex: The series value.

    Raises:
        DomainError: If |x| >= 1.
        PoleError: If c is a nonpositive integer and regularized is False.
        LimitError: If the series does not converge.
    """
    a, b, c = complex(a), complex(b), complex(c)
    if not abs(x) < 1:
        raise DomainError(f"x={x!r}", None, "The hypergeometric series requires |x| < 1:")
    if not regularized and _is_pole(c):
        raise PoleError(f"c={c!r}")
    numerator = 1 + 0j
    total = 0j
    small = 0
    for k in range(_MAX_ITERATIONS):
        term = numerator * reciprocal_gamma(c + k) if regularized else numerator
        total += term
        if total != 0 and abs(term) <= _EPS * abs(total):
            small += 1
            if small >= 2:
                return total
        else:
            small = 0
        numerator *= (a + k) * (b + k) / (k + 1.0) * x
        if not regularized:
            numerator /= c + k
        if numerator == 0:
            return total
    raise LimitError(f"a={a!r}, b={b!r}, c={c!r}, x={x!r}", None, "Hypergeometric series did not converge:")

def incomplete_gauss_2f1(kind, a, b, c, y, x, cfg = None):
    """
    Computes the lower or upper incomplete Gauss hypergeometric function.

    The value is the Euler integral of u^(b - 1) (1 - u)^(c - b - 1) (1 - ux)^(-a) over [0, y] (lower)
    or [y, 1] (upper), divided by B(b, c - b). The two kinds sum to gauss_2f1(a, b, c, x).

    Args:
        kind (str): "lower" or "upper".
        a (complex): Exponent of (1 - ux).
        b (complex): Parameter with Re(b) > 0.
        c (complex): Parameter; the upper kind requires Re(c - b) > 0.
        y (float): Cut ratio in (0, 1).
        x (float): Argument, |x| < 1.
        cfg (QuadConfig, optional): Quadrature settings. Defaults to SPECFUN_QUAD.

    Returns:
        complex: The incomplete function value.

    Raises:
        DomainError: Outside the preconditions.
        QuadratureFailure: If the quadrature falls well short of its tolerance.
        PoleError: If Gamma(c) has a pole.
    """
    a, b, c = complex(a), complex(b), complex(c)
    if kind not in ("lower", "upper"):
        raise DomainError(f"kind={kind!r}", None, "Incomplete hypergeometric kind must be 'lower' or 'upper':")
    if not b.real > 0:
        raise DomainError(f"b={b!r}", None, "Incomplete hypergeometric function requires Re(b) > 0:")
    if not 0 < y < 1:
        raise DomainError(f"y={y!r}", None, "Incomplete hypergeometric function requires 0 < y < 1:")
    if not abs(x) < 1:
        raise DomainError(f"x={x!r}", None, "Incomplete hypergeometric function requires |x| < 1:")
    cfg = cfg or SPECFUN_QUAD
    normalization = gamma(c) * reciprocal_gamma(b) * reciprocal_gamma(c - b)
    if kind == "lower":
        result = integrate_endpoint_power(lambda u: _cpow(1.0 - u, c - b - 1.0) * _cpow(1.0 - u * x, -a), b - 1.0, 0.0, y, "a", cfg)
    else:
        if not (c - b).real > 0:
            raise DomainError(f"c - b={c - b!r}", None, "Upper incomplete hypergeometric function requires Re(c - b) > 0:")
        result = integrate_endpoint_power(lambda u: _cpow(u, b - 1.0) * _cpow(1.0 - u * x, -a), c - b - 1.0, y, 1.0, "b", cfg)
    return normalization * require_converged(result, cfg, f"{kind} 2F1({a}, {b}; {c}; {x}) cut at {y}")

@dataclass(frozen=True)
class Partition:
    """
    An integer partition of k as multiplicities (r_1, ..., r_k), part j occurring r_j times.
    """
    parts: tuple

    @property
    def r(self):
        """Number of parts, sum of r_j."""
        return sum(self.parts)

    @property
    def k(self):
        """Partitioned integer, sum of j * r_j."""
        return sum(j * r for j, r in enumerate(self.parts, start=1))

def _integer_partitions(n, largest):
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        for rest in _integer_partitions(n - part, part):
            yield (part,) + rest

def faa_di_bruno_partitions(k):
    """
    Enumerates every (r_1, ..., r_k) with sum_j j r_j = k.

    Partitions are grouped by r = sum_j r_j in decreasing order and ordered lexicographically
    (descending) inside a group, so k = 3 gives (3, 0, 0), (1, 1, 0), (0, 0, 1).

    Args:
        k (int): Positive integer, at most 16.

    Returns:
        list: Partition objects, one per integer partition of k.

    Raises:
        DomainError: If k < 1.
        LimitError: If k > 16.
    """
    if k < 1:
        raise DomainError(f"k={k!r}", None, "Partitions require k >= 1:")
    if k > _PARTITION_LIMIT:
        raise LimitError(f"k={k} > {_PARTITION_LIMIT}", None, "Partition enumeration is limited:")
    partitions = []
    for parts in _integer_partitions(k, k):
        multiplicities = [0] * k
        for part in parts:
            multiplicities[part - 1] += 1
        partitions.append(Partition(tuple(multiplicities)))
    partitions.sort(key=lambda p: (-p.r, tuple(-r for r in p.parts)))
    return partitions

def faa_di_bruno_derivative(f_derivs, g_derivs, k):
    """
    Computes d^k/dx^k f(g(x)) from derivative values by the Faa di Bruno formula.

    Each partition contributes k! / prod_j (r_j! (j!)^r_j) * f^(r)(g(x)) * prod_j (g^(j)(x))^r_j.

    Args:
        f_derivs (list): f'(g(x)), f''(g(x)), ... with at least k entries.
        g_derivs (list): g'(x), g''(x), ... with at least k entries.
        k (int): Derivative order, 1 <= k <= 16.

    Returns:
        complex: The k-th derivative of the composite.

    Raises:
        ArityError: If fewer than k values are supplied.
        LimitError: If k > 16.
    """
    if len(f_derivs) < k or len(g_derivs) < k:
        raise ArityError(f"k={k}, {len(f_derivs)} outer and {len(g_derivs)} inner values")
    total = 0j
    for partition in faa_di_bruno_partitions(k):
        term = complex(math.factorial(k)) * complex(f_derivs[partition.r - 1])
        for j, r in enumerate(partition.parts, start=1):
            if r:
                term *= complex(g_derivs[j - 1]) ** r / (math.factorial(r) * math.factorial(j) ** r)
        total += term
    return total

def partial_bell_polynomials(g_derivs, k):
    """
    Tabulates the partial Bell polynomials B_(n, r)(g', g'', ...) for n, r <= k.

    Uses B_(n, r) = sum_(i = 1)^(n - r + 1) C(n - 1, i - 1) g^(i) B_(n - i, r - 1) with B_(0, 0) = 1,
    so that d^n/dx^n f(g(x)) = sum_r f^(r)(g(x)) B_(n, r).

    Args:
        g_derivs (list): g'(x), g''(x), ... with at least k entries.
        k (int): Largest order.

    Returns:
        list: table[n][r] as complex numbers.

    Raises:
        ArityError: If fewer than k values are supplied.
    """
    if len(g_derivs) < k:
        raise ArityError(f"k={k}, {len(g_derivs)} inner values")
    table = [[0j] * (k + 1) for _ in range(k + 1)]
    table[0][0] = 1 + 0j
    for n in range(1, k + 1):
        for r in range(1, n + 1):
            total = 0j
            for i in range(1, n - r + 2):
                total += math.comb(n - 1, i - 1) * complex(g_derivs[i - 1]) * table[n - i][r - 1]
            table[n][r] = total
    return table

# Define the public interface of the module
__all__ = [
    "SPECFUN_QUAD", "loggamma", "gamma", "reciprocal_gamma", "beta", "lower_incomplete_gamma", "upper_incomplete_gamma",
    "incomplete_beta", "complementary_incomplete_beta", "gamma_ratio", "generalized_binomial", "gauss_2f1",
    "incomplete_gauss_2f1", "Partition", "faa_di_bruno_partitions", "faa_di_bruno_derivative", "partial_bell_polynomials",
]
