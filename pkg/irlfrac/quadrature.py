"""
irlfrac Quadrature module.

This module provides the adaptive integration engine used by every operator and special function.
It includes functionalities for:

- Adaptive Gauss-Kronrod (7/15 point) bisection of complex-valued integrands on real intervals.
- Integrating smooth(t) * |t - endpoint|^sigma for complex sigma with Re(sigma) > -1, where the
  algebraic endpoint singularity is handled by integrating a polynomial fit of the smooth factor
  moment by moment.
- Fixed composite Gauss-Legendre rules, used for norm estimates on dense grids.
- Refusing results that fell well short of their error target before their value is used.

Integrands are called with a 1-D float array of nodes and must return an array of the same length
(or a scalar, which is broadcast).
"""

import heapq, logging
from dataclasses import dataclass, replace
import numpy as np
from numpy.polynomial import chebyshev, legendre, Polynomial
from irlfrac.exceptions import DomainError, QuadratureFailure, BudgetExceeded, NonFiniteIntegrand

log = logging.getLogger("irlfrac.quadrature")

# Kronrod abscissae (descending, last one is the centre) and weights of the 15 point rule,
# and the weights of the embedded 7 point Gauss rule (abscissae _XGK[1], _XGK[3], _XGK[5], _XGK[7]).
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

_NODES = np.concatenate((-_XGK, _XGK[-2::-1]))
_KRONROD_WEIGHTS = np.concatenate((_WGK, _WGK[-2::-1]))
_GAUSS_WEIGHTS = np.zeros(15)
for _i, _w in zip((1, 3, 5, 7), _WG):
    _GAUSS_WEIGHTS[_i] = _w
    _GAUSS_WEIGHTS[14 - _i] = _w

_EPS = np.finfo(float).eps
_MAX_SLICE_SHRINKS = 12
UNCONVERGED_SLACK = 1e3

@dataclass(frozen=True)
class QuadConfig:
    """
    Tolerances and budgets of the quadrature engine.

    Attributes:
        abs_tol (float): Absolute error target.
        rel_tol (float): Relative error target.
        max_subdivisions (int): Maximum number of bisections per adaptive run.
        singular_taylor_order (int): Degree of the polynomial fitted on the singular slice.
        singular_split (float): Width of the singular slice as a fraction of the interval.
    """
    abs_tol: float = 1e-11
    rel_tol: float = 1e-10
    max_subdivisions: int = 2000
    singular_taylor_order: int = 8
    singular_split: float = 0.1

    def __post_init__(self):
        if not self.abs_tol > 0 or not self.rel_tol > 0:
            raise DomainError(f"abs_tol={self.abs_tol!r}, rel_tol={self.rel_tol!r}", None, "Quadrature tolerances must be positive:")
        if int(self.max_subdivisions) != self.max_subdivisions or self.max_subdivisions < 1:
            raise DomainError(f"max_subdivisions={self.max_subdivisions!r}", None, "The subdivision budget must be a positive integer:")
        if int(self.singular_taylor_order) != self.singular_taylor_order or self.singular_taylor_order < 1:
            raise DomainError(f"singular_taylor_order={self.singular_taylor_order!r}", None, "The singular expansion order must be a positive integer:")
        if not 0 < self.singular_split < 1:
            raise DomainError(f"singular_split={self.singular_split!r}", None, "The singular split must lie in (0, 1):")

    def tolerance(self, value):
        """
        Returns the error target for a given integral value.

        Args:
            value (complex): Current integral estimate.

        Returns:
            float: max(abs_tol, rel_tol * |value|).
        """
        return max(self.abs_tol, self.rel_tol * abs(value))

    def tightened(self, abs_tol, rel_tol):
        """
        Returns a copy whose tolerances are at most the given ones.
        """
        return replace(self, abs_tol=min(self.abs_tol, abs_tol), rel_tol=min(self.rel_tol, rel_tol))

@dataclass(frozen=True)
class QuadResult:
    """
    Outcome of a quadrature.

    Attributes:
        value (complex): Integral estimate.
        err_estimate (float): Absolute error estimate.
        n_evals (int): Number of integrand evaluations.
        converged (bool): True if the error target was met.
    """
    value: complex
    err_estimate: float
    n_evals: int
    converged: bool

    @classmethod
    def exact(cls, value):
        """
        Returns a result for a value known without quadrature.
        """
        return cls(complex(value), 0.0, 0, True)

    def scaled(self, factor):
        """
        Returns the result multiplied by a constant factor.

        Args:
            factor (complex): The constant.

        Returns:
            QuadResult: value * factor with the error estimate scaled by |factor|.
        """
        factor = complex(factor)
        return QuadResult(self.value * factor, self.err_estimate * abs(factor), self.n_evals, self.converged)

    def __add__(self, other):
        if isinstance(other, QuadResult):
            return QuadResult(self.value + other.value, self.err_estimate + other.err_estimate,
                              self.n_evals + other.n_evals, self.converged and other.converged)
        return QuadResult(self.value + complex(other), self.err_estimate, self.n_evals, self.converged)

    __radd__ = __add__

def _evaluate(f, nodes):
    values = np.broadcast_to(np.asarray(f(nodes), dtype=complex), nodes.shape)
    finite = np.isfinite(values)
    if not finite.all():
        index = int(np.argmin(finite))
        raise NonFiniteIntegrand(f"f({nodes[index]!r}) = {values[index]!r}")
    return values

def _gauss_kronrod(f, a, b):
    # QUADPACK error estimate: |K - G| scaled against the mean deviation, floored at the roundoff level
    half = 0.5 * (b - a)
    centre = 0.5 * (a + b)
    values = _evaluate(f, centre + half * _NODES)
    kronrod = half * np.dot(_KRONROD_WEIGHTS, values)
    gauss = half * np.dot(_GAUSS_WEIGHTS, values)
    resabs = abs(half) * np.dot(_KRONROD_WEIGHTS, np.abs(values))
    resasc = abs(half) * np.dot(_KRONROD_WEIGHTS, np.abs(values - kronrod / (b - a)))
    err = float(abs(kronrod - gauss))
    if resasc != 0 and err != 0:
        err = resasc * min(1.0, (200.0 * err / resasc) ** 1.5)
    err = max(err, 50 * _EPS * resabs)
    return complex(kronrod), float(err), float(resabs)

def integrate(f, a, b, cfg = None):
    """
    Integrates f over [a, b] by adaptive Gauss-Kronrod bisection.

    The interval with the largest error estimate is bisected until the total estimate meets
    `cfg.tolerance(value)`. Refinement also stops when the estimate falls below the roundoff floor
    100 * eps * integral of |f|; such a result is returned with `converged=False`. Each interval's
    estimate is the QUADPACK one, never below 50 * eps times its integral of |f|.

    Args:
        f (callable): Integrand taking and returning 1-D arrays.
        a (float): Lower limit.
        b (float): Upper limit, b >= a.
        cfg (QuadConfig, optional): Tolerances and budget. Defaults to QuadConfig().

    Returns:
        QuadResult: Integral estimate and work counters.

    Raises:
        DomainError: If a > b or a limit is not finite.
        NonFiniteIntegrand: If f is NaN or infinite at a node.
        BudgetExceeded: If the subdivision budget runs out; the best result is attached.
    """
    cfg = cfg or QuadConfig()
    a, b = float(a), float(b)
    if not (np.isfinite(a) and np.isfinite(b)):
        raise DomainError(f"[{a!r}, {b!r}]", None, "Integration limits must be finite:")
    if a > b:
        raise DomainError(f"a={a!r} > b={b!r}", None, "Integration limits must satisfy a <= b:")
    if a == b:
        return QuadResult.exact(0.0)
    total, total_err, total_abs = _gauss_kronrod(f, a, b)
    n_evals = 15
    heap = [(-total_err, 0, a, b, total, total_err, total_abs)]
    settled = []
    counter = 1
    subdivisions = 0
    while True:
        if total_err <= cfg.tolerance(total):
            converged = True
            break
        if total_err <= 100 * _EPS * total_abs or not heap:
            converged = False
            log.warning(f"Quadrature on [{a}, {b}] stopped at the roundoff floor: error {total_err:.3e} for value {total:.6e}.")
            break
        if subdivisions >= cfg.max_subdivisions:
            result = QuadResult(total, total_err, n_evals, False)
            raise BudgetExceeded(f"{subdivisions} bisections on [{a}, {b}], error {total_err:.3e}", None, result=result)
        item = heapq.heappop(heap)
        _, _, left, right, value, err, resabs = item
        middle = 0.5 * (left + right)
        if not left < middle < right:
            settled.append(item)
            continue
        total, total_err, total_abs = total - value, total_err - err, total_abs - resabs
        for lo, hi in ((left, middle), (middle, right)):
            piece = _gauss_kronrod(f, lo, hi)
            heapq.heappush(heap, (-piece[1], counter, lo, hi) + piece)
            total, total_err, total_abs = total + piece[0], total_err + piece[1], total_abs + piece[2]
            counter += 1
        total_err = max(total_err, 0.0)
        n_evals += 30
        subdivisions += 1
    # exact resummation; the running sums only steer the refinement
    intervals = heap + settled
    total = complex(sum(item[4] for item in intervals))
    total_err = float(sum(item[5] for item in intervals))
    result = QuadResult(total, total_err, n_evals, converged and total_err <= cfg.tolerance(total))
    log.debug(f"integrate [{a}, {b}]: {subdivisions} bisections, {n_evals} evaluations, error {result.err_estimate:.3e}.")
    return result

def _power(base, exponent):
    # principal branch; base > 0
    return np.exp(complex(exponent) * np.log(base))

def _fit_monomials(values, order):
    # Chebyshev interpolant on s = 2w - 1, returned as monomial coefficients in w together with
    # the magnitude of the two highest Chebyshev coefficients.
    nodes = chebyshev.chebpts1(order + 1)
    shift = Polynomial([-1.0, 2.0])
    coefficients = np.zeros(order + 1, dtype=complex)
    tail = 0.0
    for part, unit in ((values.real, 1.0), (values.imag, 1j)):
        cheb = chebyshev.chebfit(nodes, part, order)
        tail += float(np.sum(np.abs(cheb[-2:])))
        monomial = Polynomial(chebyshev.cheb2poly(cheb))(shift).coef
        coefficients[:len(monomial)] += unit * monomial
    return coefficients, tail

def integrate_endpoint_power(smooth, exponent, a, b, singular_at, cfg = None):
    """
    Integrates smooth(t) * |t - e|^sigma over [a, b], where e is the singular endpoint.

    A slice of width `singular_split * (b - a)` next to the singular endpoint is handled by fitting
    `smooth` with a polynomial of degree `singular_taylor_order` and integrating each moment
    v^(sigma + k) exactly; the slice is shrunk while the tail of the fit exceeds its share of the
    tolerance. The rest of the interval goes through `integrate`.

    Args:
        smooth (callable): Smooth factor, taking and returning 1-D arrays.
        exponent (complex): sigma, with Re(sigma) > -1.
        a (float): Lower limit.
        b (float): Upper limit, b >= a.
        singular_at (str): "a" or "b".
        cfg (QuadConfig, optional): Tolerances and budget. Defaults to QuadConfig().

    Returns:
        QuadResult: Integral estimate; the error includes the fit tail bound.

    Raises:
        DomainError: If Re(sigma) <= -1, a > b or singular_at is not "a" or "b".
        BudgetExceeded: If the remainder integral runs out of budget.
    """
    cfg = cfg or QuadConfig()
    sigma = complex(exponent)
    if not sigma.real > -1:
        raise DomainError(f"sigma={sigma!r}", None, "Endpoint exponent must have real part above -1:")
    if singular_at not in ("a", "b"):
        raise DomainError(f"singular_at={singular_at!r}", None, "The singular endpoint must be 'a' or 'b':")
    a, b = float(a), float(b)
    if a > b:
        raise DomainError(f"a={a!r} > b={b!r}", None, "Integration limits must satisfy a <= b:")
    if a == b:
        return QuadResult.exact(0.0)
    sign = 1.0 if singular_at == "a" else -1.0
    endpoint = a if singular_at == "a" else b
    order = cfg.singular_taylor_order
    unit_nodes = 0.5 * (chebyshev.chebpts1(order + 1) + 1.0)
    powers = sigma + np.arange(order + 1) + 1.0
    width = cfg.singular_split * (b - a)
    n_evals = 0
    for attempt in range(_MAX_SLICE_SHRINKS + 1):
        values = _evaluate(smooth, endpoint + sign * width * unit_nodes)
        n_evals += order + 1
        coefficients, tail = _fit_monomials(values, order)
        slice_value = complex(_power(width, sigma + 1.0) * np.sum(coefficients / powers))
        slice_err = tail * width ** (sigma.real + 1.0) / (sigma.real + 1.0)
        if slice_err <= 0.5 * cfg.tolerance(slice_value):
            break
        if attempt < _MAX_SLICE_SHRINKS:
            width *= 0.25
    log.debug(f"Singular slice of width {width:.3e} at {endpoint}: tail {slice_err:.3e} after {attempt} shrinks.")

    def remainder(t):
        return _power(sign * (t - endpoint), sigma) * np.asarray(smooth(t), dtype=complex)

    rest_cfg = replace(cfg, abs_tol=0.5 * cfg.abs_tol)
    if singular_at == "a":
        rest = integrate(remainder, a + width, b, rest_cfg)
    else:
        rest = integrate(remainder, a, b - width, rest_cfg)
    value = slice_value + rest.value
    err = slice_err + rest.err_estimate
    return QuadResult(value, err, n_evals + rest.n_evals, err <= cfg.tolerance(value))

def require_converged(result, cfg, context):
    """
    Returns the value of a quadrature result, refusing results that fell well short of their target.

    A result that did not converge but whose error stays within `UNCONVERGED_SLACK` times the
    tolerance (typically one stopped at the roundoff floor) is accepted with a warning.

    Args:
        result (QuadResult): The quadrature outcome.
        cfg (QuadConfig): The settings it was computed with.
        context (str): What was being integrated, for the messages.

    Returns:
        complex: result.value.

    Raises:
        QuadratureFailure: If the error exceeds the slackened tolerance; the result is attached.
    """
    if result.converged:
        return result.value
    tolerance = cfg.tolerance(result.value)
    if result.err_estimate > UNCONVERGED_SLACK * tolerance:
        raise QuadratureFailure(f"{context}: error {result.err_estimate:.3e} against tolerance {tolerance:.3e}", None, result=result)
    log.warning(f"{context}: quadrature stopped short, error {result.err_estimate:.3e} against tolerance {tolerance:.3e}.")
    return result.value

def gauss_legendre_panels(f, a, b, panels = 256, nodes = 4):
    """
    Integrates f over [a, b] with a fixed composite Gauss-Legendre rule.

    Args:
        f (callable): Integrand taking and returning 1-D arrays.
        a (float): Lower limit.
        b (float): Upper limit.
        panels (int, optional): Number of equal panels. Defaults to 256.
        nodes (int, optional): Gauss-Legendre nodes per panel. Defaults to 4.

    Returns:
        complex: The composite rule value.
    """
    x, w = legendre.leggauss(nodes)
    edges = np.linspace(float(a), float(b), panels + 1)
    half = 0.5 * np.diff(edges)
    centres = 0.5 * (edges[:-1] + edges[1:])
    points = (centres[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return complex(np.dot(weights, _evaluate(f, points)))

# Define the public interface of the module
__all__ = ["QuadConfig", "QuadResult", "integrate", "integrate_endpoint_power", "require_converged", "gauss_legendre_panels"]
