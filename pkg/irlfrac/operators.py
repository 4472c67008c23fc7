"""
irlfrac Operators module.

This module provides the lower and upper incomplete Riemann-Liouville differintegrals and the
classical Riemann-Liouville operator they are checked against. It includes:

- Order, CutRatio, EvalRequest: Validated inputs. mu is the differentiation order everywhere; the
  integration order is -mu.
- lower_differint: The lower operator over [0, yx] in three equivalent forms, valid for every mu.
- upper_incomplete_integral: The upper operator over [yx, x] for Re(mu) < 0, in three forms.
- upper_incomplete_derivative: The upper operator for Re(mu) >= 0, as the classical operator based
  at xy decomposed into boundary terms and an integral of f^(n).
- upper_differint, differint: Dispatch on side and regime.
- recurrence_derivative: The derivative recurrences, by numerical differentiation.
- classical_rl: The classical operator based at a.
- composition_lhs_rhs: Both sides of the four composition identities with d/dx.
- shifted_base_identity: The upper operator next to the classical operator based at xy.
- evaluate_grid: Ordered evaluation of many requests on a thread pool.
"""

import cmath, enum, logging, math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
import numpy as np
from irlfrac.differences import richardson_derivative
from irlfrac.exceptions import DomainError, DepthExceeded
from irlfrac.functions import FunctionSpec, Smoothness
from irlfrac.quadrature import QuadConfig, QuadResult, integrate, integrate_endpoint_power
from irlfrac.specfun import reciprocal_gamma

log = logging.getLogger("irlfrac.operators")

MAX_RECURRENCE_DEPTH = 4
# The nested differences of the recurrences need integrals well below the default tolerance.
RECURRENCE_QUAD = QuadConfig(abs_tol=1e-14, rel_tol=1e-13)
FD_RELATIVE_STEP = 1e-3

class Side(enum.Enum):
    """Side of an incomplete operator."""

    #: Integration over [0, yx].
    LOWER = "lower"
    #: Integration over [yx, x].
    UPPER = "upper"

class Form(enum.Enum):
    """Integral representation used for an incomplete operator."""

    AUTO = "auto"
    #: Kernel (x - t)^(-mu - 1) in the original variable t.
    FORM1 = "form1"
    #: Substitution t = ux.
    FORM2 = "form2"
    #: Lower: t = wyx. Upper: t = (1 - v)x.
    FORM3 = "form3"

class Identity(enum.Enum):
    """Composition identities of the incomplete integrals with d/dx."""

    D_LOWER = "d-lower"
    LOWER_D = "lower-d"
    D_UPPER = "d-upper"
    UPPER_D = "upper-d"

@dataclass(frozen=True)
class Order:
    """
    A complex differentiation order mu.

    Attributes:
        mu (complex): The order; Re(mu) < 0 is an integral of order -mu.
    """
    mu: complex

    def __post_init__(self):
        mu = complex(self.mu)
        if not (math.isfinite(mu.real) and math.isfinite(mu.imag)):
            raise DomainError(f"mu={mu!r}", None, "The order must be finite:")
        object.__setattr__(self, "mu", mu)

    @property
    def is_integral(self):
        """True for Re(mu) < 0."""
        return self.mu.real < 0

    @property
    def is_derivative(self):
        """True for Re(mu) >= 0, including Re(mu) = 0 with Im(mu) != 0."""
        return not self.is_integral

    @property
    def n(self):
        """floor(Re(mu)) + 1 in the derivative regime, 0 for integrals."""
        return math.floor(self.mu.real) + 1 if self.is_derivative else 0

    @property
    def is_nonnegative_integer(self):
        """True when 1/Gamma(-mu) vanishes."""
        return self.mu.imag == 0 and self.mu.real >= 0 and self.mu.real == math.floor(self.mu.real)

    def shifted(self, k):
        """Returns the order mu - k."""
        return Order(self.mu - k)

@dataclass(frozen=True)
class CutRatio:
    """
    The incompleteness parameter y, splitting [0, x] at yx.

    Attributes:
        y (float): 0 < y < 1.
    """
    y: float

    def __post_init__(self):
        y = float(self.y)
        if not 0 < y < 1:
            raise DomainError(f"y={y!r}", None, "The cut ratio must satisfy 0 < y < 1:")
        object.__setattr__(self, "y", y)

@dataclass(frozen=True)
class EvalRequest:
    """
    A single operator evaluation.

    Attributes:
        f (FunctionSpec): The function.
        order (Order): The differentiation order; numbers are converted.
        x (float): Evaluation point in (0, f.domain_bound].
        y (CutRatio): Cut ratio; floats are converted.
        side (Side): Lower or upper; strings are converted.
        form (Form): Integral representation; strings are converted.
        quad (QuadConfig): Quadrature settings.
    """
    f: FunctionSpec
    order: Order
    x: float
    y: CutRatio
    side: Side = Side.LOWER
    form: Form = Form.AUTO
    quad: QuadConfig = field(default_factory=QuadConfig)

    def __post_init__(self):
        if not isinstance(self.order, Order):
            object.__setattr__(self, "order", Order(self.order))
        if not isinstance(self.y, CutRatio):
            object.__setattr__(self, "y", CutRatio(self.y))
        object.__setattr__(self, "side", Side(self.side))
        object.__setattr__(self, "form", Form(self.form))
        x = float(self.x)
        if not 0 < x <= self.f.domain_bound:
            raise DomainError(f"x={x!r}, domain bound {self.f.domain_bound!r}", None, "The evaluation point must lie in (0, b]:")
        object.__setattr__(self, "x", x)
        if self.side is Side.UPPER and self.f.smoothness is Smoothness.L1_LOWER:
            raise DomainError(f"{self.f.name} is only integrable on [0, yb]", None, "The upper operator needs f integrable on [0, b]:")

    def with_(self, **changes):
        """Returns a copy with the given fields replaced (and validated)."""
        return replace(self, **changes)

def _cpow(base, exponent):
    # principal branch, base > 0 (scalar or array)
    return np.exp(complex(exponent) * np.log(base))

def _kernel_integral(f, sigma, a, b, singular_at, quad):
    # integral of |t - endpoint|^sigma f(t) over [a, b]; the endpoint-power path unless sigma is a nonnegative integer
    endpoint = a if singular_at == "a" else b
    sign = 1.0 if singular_at == "a" else -1.0
    if sigma.imag == 0 and sigma.real >= 0 and sigma.real == math.floor(sigma.real):
        return integrate(lambda t: (sign * (t - endpoint)) ** sigma.real * f(t), a, b, quad)
    return integrate_endpoint_power(f, sigma, a, b, singular_at, quad)

def _lower_value(f, mu, x, y, form, quad):
    rg = reciprocal_gamma(-mu)
    if rg == 0:
        return QuadResult.exact(0.0)
    sigma = -mu - 1.0
    if form in (Form.AUTO, Form.FORM1):
        result = integrate(lambda t: _cpow(x - t, sigma) * f(t), 0.0, y * x, quad)
        return result.scaled(rg)
    scale = rg * cmath.exp(-mu * math.log(x))
    if form is Form.FORM2:
        result = integrate(lambda u: _cpow(1.0 - u, sigma) * f(u * x), 0.0, y, quad)
        return result.scaled(scale)
    result = integrate(lambda w: _cpow(1.0 - w * y, sigma) * f(y * w * x), 0.0, 1.0, quad)
    return result.scaled(scale * y)

def _upper_integral_value(f, mu, x, y, form, quad):
    rg = reciprocal_gamma(-mu)
    sigma = -mu - 1.0
    if form in (Form.AUTO, Form.FORM1):
        return _kernel_integral(f, sigma, y * x, x, "b", quad).scaled(rg)
    scale = rg * cmath.exp(-mu * math.log(x))
    if form is Form.FORM2:
        return _kernel_integral(lambda u: f(u * x), sigma, y, 1.0, "b", quad).scaled(scale)
    return _kernel_integral(lambda v: f((1.0 - v) * x), sigma, 0.0, 1.0 - y, "a", quad).scaled(scale)

def _caputo_split(f, mu, base, x, quad):
    # sum_(k < n) f^(k)(base) (x - base)^(k - mu) / Gamma(k + 1 - mu) + classical integral of f^(n) at order mu - n
    n = math.floor(mu.real) + 1
    length = x - base
    boundary = 0j
    for k in range(n):
        boundary += f.derivative(k)(base) * cmath.exp((k - mu) * math.log(length)) * reciprocal_gamma(k + 1 - mu)
    rest = _upper_integral_at_base(f.derivative(n), mu - n, base, x, quad)
    log.debug(f"Decomposition of order {mu} at base {base}: {n} boundary terms.")
    return rest + boundary

def _upper_integral_at_base(f, mu, base, x, quad):
    return _kernel_integral(f, -mu - 1.0, base, x, "b", quad).scaled(reciprocal_gamma(-mu))

def _upper_value(f, mu, x, y, form, quad):
    if mu.real < 0:
        return _upper_integral_value(f, mu, x, y, form, quad)
    return _caputo_split(f, mu, x * y, x, quad)

def lower_differint(req):
    """
    Evaluates the lower incomplete differintegral of order mu on [0, yx].

    The value is (1/Gamma(-mu)) times the integral of (x - t)^(-mu - 1) f(t) over [0, yx], computed in
    the requested form (auto selects form1). The kernel is never singular since t <= yx < x, so the
    same formula serves every mu, and the result is exactly 0 when mu is a nonnegative integer.

    Args:
        req (EvalRequest): The request; its side must be lower.

    Returns:
        QuadResult: The operator value.

    Raises:
        DomainError: If the request is for the upper side.
        QuadratureFailure: If the quadrature fails.
    """
    if req.side is not Side.LOWER:
        raise DomainError(f"side={req.side.value}", None, "lower_differint needs a lower request:")
    log.debug(f"Lower operator of order {req.order.mu} on {req.f.name} at x={req.x}, y={req.y.y}, {req.form.value}.")
    return _lower_value(req.f, req.order.mu, req.x, req.y.y, req.form, req.quad)

def upper_incomplete_integral(req):
    """
    Evaluates the upper incomplete integral of order -mu on [yx, x] for Re(mu) < 0.

    When the kernel exponent -mu - 1 is not a nonnegative integer the endpoint singularity at t = x
    is integrated by integrate_endpoint_power.

    Args:
        req (EvalRequest): The request; upper side, Re(mu) < 0.

    Returns:
        QuadResult: The operator value.

    Raises:
        DomainError: On a lower request or Re(mu) >= 0.
        QuadratureFailure: If the quadrature fails.
    """
    if req.side is not Side.UPPER:
        raise DomainError(f"side={req.side.value}", None, "upper_incomplete_integral needs an upper request:")
    if not req.order.is_integral:
        raise DomainError(f"mu={req.order.mu!r}", None, "The upper incomplete integral requires Re(mu) < 0:")
    log.debug(f"Upper integral of order {req.order.mu} on {req.f.name} at x={req.x}, y={req.y.y}, {req.form.value}.")
    return _upper_integral_value(req.f, req.order.mu, req.x, req.y.y, req.form, req.quad)

def upper_incomplete_derivative(req):
    """
    Evaluates the upper incomplete derivative of order mu for Re(mu) >= 0.

    With n = floor(Re(mu)) + 1 and a = xy fixed, the value is
    sum_(k < n) f^(k)(a) (x - a)^(k - mu) / Gamma(k + 1 - mu) plus the upper integral of f^(n) at
    order mu - n.

    Args:
        req (EvalRequest): The request; upper side, Re(mu) >= 0.

    Returns:
        QuadResult: The operator value.

    Raises:
        DomainError: On a lower request or Re(mu) < 0.
        MissingDerivatives: If f cannot supply f', ..., f^(n).
        QuadratureFailure: If the quadrature fails.
    """
    if req.side is not Side.UPPER:
        raise DomainError(f"side={req.side.value}", None, "upper_incomplete_derivative needs an upper request:")
    if not req.order.is_derivative:
        raise DomainError(f"mu={req.order.mu!r}", None, "The upper incomplete derivative requires Re(mu) >= 0:")
    return _caputo_split(req.f, req.order.mu, req.x * req.y.y, req.x, req.quad)

def upper_differint(req):
    """
    Evaluates the upper operator in whichever regime the order falls.
    """
    if req.order.is_integral:
        return upper_incomplete_integral(req)
    return upper_incomplete_derivative(req)

def differint(req):
    """
    Evaluates the incomplete operator of the request's side.

    Args:
        req (EvalRequest): The request.

    Returns:
        QuadResult: The operator value.
    """
    if req.side is Side.LOWER:
        return lower_differint(req)
    return upper_differint(req)

def classical_rl(f, mu, a, x, quad = None):
    """
    Evaluates the classical Riemann-Liouville differintegral of order mu based at a.

    For Re(mu) < 0 this is the kernel integral over [a, x]; for Re(mu) >= 0 the derivative is
    decomposed into boundary terms at a and an integral of f^(n).

    Args:
        f (FunctionSpec): The function.
        mu (Order or complex): The order.
        a (float): Base point, 0 <= a < x.
        x (float): Evaluation point.
        quad (QuadConfig, optional): Quadrature settings. Defaults to QuadConfig().

    Returns:
        QuadResult: The operator value.

    Raises:
        DomainError: If a >= x or a < 0.
        MissingDerivatives: If f cannot supply the derivatives a derivative order needs.
    """
    order = mu if isinstance(mu, Order) else Order(mu)
    a, x = float(a), float(x)
    if not 0 <= a < x:
        raise DomainError(f"a={a!r}, x={x!r}", None, "The classical operator requires 0 <= a < x:")
    quad = quad or QuadConfig()
    if order.is_integral:
        return _upper_integral_at_base(f, order.mu, a, x, quad)
    return _caputo_split(f, order.mu, a, x, quad)

def shifted_base_identity(req):
    """
    Evaluates the upper operator and the classical operator based at a = xy.

    Args:
        req (EvalRequest): An upper request.

    Returns:
        tuple: (upper value, classical value), complex numbers that coincide for every order.
    """
    upper = upper_differint(req.with_(side=Side.UPPER))
    classical = classical_rl(req.f, req.order, req.x * req.y.y, req.x, req.quad)
    return upper.value, classical.value

def _recurrence_value(side, f, mu, x, y, quad, step):
    # (value, finite-difference error of the outermost d/dx)
    if mu.real < 0:
        if side is Side.LOWER:
            return _lower_value(f, mu, x, y, Form.FORM1, quad).value, 0.0
        return _upper_integral_value(f, mu, x, y, Form.FORM1, quad).value, 0.0
    previous = mu - 1.0
    derivative, error = richardson_derivative(lambda s: _recurrence_value(side, f, previous, s, y, quad, step)[0], x, step)
    correction = y * cmath.exp(-mu * math.log(1.0 - y)) * cmath.exp(-mu * math.log(x)) * f(x * y) * reciprocal_gamma(1.0 - mu)
    log.debug(f"Recurrence step at order {mu}, x={x}: finite-difference error {error:.3e}.")
    return (derivative - correction if side is Side.LOWER else derivative + correction), error

def recurrence_derivative(side, req, fd_step = None, with_error = False):
    """
    Evaluates an incomplete derivative through its recurrence in the order.

    D^mu = d/dx D^(mu - 1) - y (1 - y)^(-mu) x^(-mu) f(xy) / Gamma(1 - mu) on the lower side, with a plus
    sign on the upper side, applied until the order reaches the integral regime. Each d/dx is a
    central difference with three Richardson levels.

    Args:
        side (Side or str): Lower or upper.
        req (EvalRequest): The request; Re(mu) >= 0. Its side is ignored.
        fd_step (float, optional): Difference step. Defaults to 1e-3 * x.
        with_error (bool, optional): Also return the finite-difference error estimate. Defaults to False.

    Returns:
        complex: The derivative value, or (value, fd_error) when with_error is set. fd_error is the
        change made by the last Richardson extrapolation of the outermost d/dx, which dominates the
        quadrature error.

    Raises:
        DomainError: If Re(mu) < 0.
        DepthExceeded: If floor(Re(mu)) + 1 > 4.
    """
    side = Side(side)
    if not req.order.is_derivative:
        raise DomainError(f"mu={req.order.mu!r}", None, "Recurrence derivatives require Re(mu) >= 0:")
    if req.order.n > MAX_RECURRENCE_DEPTH:
        raise DepthExceeded(f"depth {req.order.n} > {MAX_RECURRENCE_DEPTH} for mu={req.order.mu!r}")
    step = fd_step or FD_RELATIVE_STEP * req.x
    quad = req.quad.tightened(RECURRENCE_QUAD.abs_tol, RECURRENCE_QUAD.rel_tol)
    value, error = _recurrence_value(side, req.f, req.order.mu, req.x, req.y.y, quad, step)
    return (value, error) if with_error else value

def composition_lhs_rhs(identity, f, mu, x, y, quad = None, fd_step = None):
    """
    Evaluates both sides of a composition identity of an incomplete integral with d/dx.

    Here mu is the integration order (Re(mu) > 1) and I^mu is the operator of differentiation order
    -mu. The identities are

    - d-lower: d/dx I^mu[f] = y (1 - y)^(mu - 1) x^(mu - 1) f(xy) / Gamma(mu) + I^(mu - 1)[f]
    - lower-d: I^mu[f'] = x^(mu - 1) ((1 - y)^(mu - 1) f(xy) - f(0)) / Gamma(mu) + I^(mu - 1)[f]
    - d-upper: d/dx I^mu{f} = -y (1 - y)^(mu - 1) x^(mu - 1) f(xy) / Gamma(mu) + I^(mu - 1){f}
    - upper-d: I^mu{f'} = -x^(mu - 1) (1 - y)^(mu - 1) f(xy) / Gamma(mu) + I^(mu - 1){f}

    Args:
        identity (Identity or str): Which identity.
        f (FunctionSpec): The function; the "-d" identities need f'.
        mu (complex): Integration order, Re(mu) > 1.
        x (float): Evaluation point.
        y (float): Cut ratio.
        quad (QuadConfig, optional): Quadrature settings. Defaults to the recurrence settings.
        fd_step (float, optional): Difference step for d/dx. Defaults to 1e-3 * x.

    Returns:
        tuple: (lhs, rhs) as complex numbers.

    Raises:
        DomainError: If Re(mu) <= 1 or y, x are invalid.
        MissingDerivatives: If f' is needed and unavailable.
    """
    identity = Identity(identity)
    mu = complex(mu)
    if not mu.real > 1:
        raise DomainError(f"mu={mu!r}", None, "Composition identities require Re(mu) > 1:")
    y = CutRatio(y).y
    x = float(x)
    if not 0 < x <= f.domain_bound:
        raise DomainError(f"x={x!r}", None, "The evaluation point must lie in (0, b]:")
    quad = quad or RECURRENCE_QUAD
    step = fd_step or FD_RELATIVE_STEP * x
    lower = identity in (Identity.D_LOWER, Identity.LOWER_D)
    value = _lower_value if lower else _upper_integral_value
    boundary = cmath.exp((mu - 1.0) * math.log(x)) * cmath.exp((mu - 1.0) * math.log(1.0 - y)) * f(x * y) * reciprocal_gamma(mu)
    previous = value(f, -(mu - 1.0), x, y, Form.FORM1, quad).value
    if identity in (Identity.D_LOWER, Identity.D_UPPER):
        lhs, _ = richardson_derivative(lambda s: value(f, -mu, s, y, Form.FORM1, quad).value, x, step)
        rhs = (y if lower else -y) * boundary + previous
    else:
        lhs = value(f.derivative(1), -mu, x, y, Form.FORM1, quad).value
        if lower:
            rhs = boundary - cmath.exp((mu - 1.0) * math.log(x)) * f(0.0) * reciprocal_gamma(mu) + previous
        else:
            rhs = -boundary + previous
    log.debug(f"Composition {identity.value} at mu={mu}, x={x}, y={y}: lhs={lhs}, rhs={rhs}.")
    return complex(lhs), complex(rhs)

def evaluate_grid(requests, threads = 1):
    """
    Evaluates many requests, optionally on a thread pool, keeping the input order.

    Args:
        requests (list): EvalRequest objects.
        threads (int, optional): Worker threads. Defaults to 1.

    Returns:
        list: QuadResult objects in request order.
    """
    requests = list(requests)
    if threads <= 1 or len(requests) <= 1:
        return [differint(req) for req in requests]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(differint, requests))

# Define the public interface of the module
__all__ = [
    "MAX_RECURRENCE_DEPTH", "RECURRENCE_QUAD", "Side", "Form", "Identity", "Order", "CutRatio", "EvalRequest",
    "lower_differint", "upper_incomplete_integral", "upper_incomplete_derivative", "upper_differint", "differint",
    "classical_rl", "shifted_base_identity", "recurrence_derivative", "composition_lhs_rhs", "evaluate_grid",
]
