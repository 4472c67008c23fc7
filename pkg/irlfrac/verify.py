"""
irlfrac Verify module.

This module turns the identities, bounds and counterexamples of incomplete fractional calculus into
executable checks. It includes:

- CheckReport and BoundReport: Outcomes of a single comparison or norm bound, with a polarity
  (`expect_pass`) so that counterexamples are asserted to fail.
- Checks: norm bounds, zero-order limits, Leibniz rules, the chain rule, semigroup and inversion
  failures, the derivative shift, and the composition identities.
- Suites: forms, closedforms, additivity, recurrence, composition, bounds, limits, leibniz, chain and
  counterexamples, each a function returning a list of reports.
- Serialization of reports as CSV or JSON lines.

Orders are differentiation orders unless a docstring says otherwise; integrals have Re(mu) < 0.
"""

import csv, json, logging, math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
import numpy as np
from irlfrac.closedforms import (power_lower, power_upper, constant_lower, constant_upper, classical_exp, classical_power,
                                 power_composition_sides, nested_power, inversion_ratio)
from irlfrac.exceptions import DomainError, LimitError, AnalyticityRequired
from irlfrac.functions import FunctionSpec, Smoothness, constant, power, exponential, sine, product, times_monomial, composite
from irlfrac.operators import (Side, Form, Identity, EvalRequest, differint, classical_rl, recurrence_derivative, composition_lhs_rhs,
                               shifted_base_identity)
from irlfrac.quadrature import QuadConfig, integrate, require_converged, gauss_legendre_panels
from irlfrac.differences import richardson_derivative
from irlfrac.specfun import (gamma, reciprocal_gamma, beta, gamma_ratio, generalized_binomial, faa_di_bruno_derivative,
                             partial_bell_polynomials)

log = logging.getLogger("irlfrac.verify")

REPORT_FIELDS = ["name", "params", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_err", "rel_err", "tolerance", "passed"]
FAILURE_MARGIN = 1e-3
CROSS_PATH_TOLERANCE = 1e-7
BOUND_TOLERANCE = 1e-9
L1_PANELS = 256
LINF_SAMPLES = 1024
MU_SEQUENCE = (0.1, 0.03, 0.01, 0.003)
MAX_SERIES_TERMS = 30
FAA_DI_BRUNO_LIMIT = 16
# nested operators are compared to 1e-7, so both levels run tighter than the default
NESTED_QUAD = QuadConfig(abs_tol=1e-13, rel_tol=1e-12)

@dataclass(frozen=True)
class CheckReport:
    """
    Outcome of comparing two evaluations of the same quantity.

    Attributes:
        name (str): Identity name.
        lhs (complex): Left side.
        rhs (complex): Right side.
        abs_err (float): |lhs - rhs|.
        rel_err (float): abs_err / |rhs|, infinite when rhs = 0.
        tolerance (float): Pass threshold for either error.
        passed (bool): abs_err <= tolerance or rel_err <= tolerance.
        expect_pass (bool): False for counterexamples, which must fail.
        metadata (dict): Parameters of the evaluation.
    """
    name: str
    lhs: complex
    rhs: complex
    abs_err: float
    rel_err: float
    tolerance: float
    passed: bool
    expect_pass: bool = True
    metadata: dict = field(default_factory=dict)

    @classmethod
    def compare(cls, name, lhs, rhs, tolerance, expect_pass = True, **metadata):
        """
        Builds a report from both sides.

        Args:
            name (str): Identity name.
            lhs (complex): Left side.
            rhs (complex): Right side.
            tolerance (float): Pass threshold.
            expect_pass (bool, optional): Expected polarity. Defaults to True.
            **metadata: Parameters recorded with the report.

        Returns:
            CheckReport: The report.
        """
        lhs, rhs = complex(lhs), complex(rhs)
        abs_err = abs(lhs - rhs)
        rel_err = abs_err / abs(rhs) if rhs != 0 else math.inf
        passed = abs_err <= tolerance or rel_err <= tolerance
        report = cls(name, lhs, rhs, abs_err, rel_err, float(tolerance), passed, expect_pass, metadata)
        if report.unexpected:
            log.warning(f"Unexpected polarity for {name} {metadata}: abs_err={abs_err:.3e}, rel_err={rel_err:.3e}, tolerance={tolerance:.1e}.")
        return report

    @property
    def unexpected(self):
        """True when the outcome contradicts the expected polarity."""
        return self.passed != self.expect_pass

    def to_row(self):
        """
        Returns the report as a serialization row with the REPORT_FIELDS keys.
        """
        return {
            "name": self.name,
            "params": format_params(self.metadata, self.expect_pass),
            "lhs_re": self.lhs.real, "lhs_im": self.lhs.imag,
            "rhs_re": self.rhs.real, "rhs_im": self.rhs.imag,
            "abs_err": self.abs_err, "rel_err": self.rel_err, "tolerance": self.tolerance,
            "passed": self.passed,
        }

@dataclass(frozen=True)
class BoundReport:
    """
    Outcome of an empirical operator-norm bound.

    Attributes:
        name (str): Bound name.
        measured_norm (float): Norm of the operator output.
        bound_value (float): Right-hand side of the inequality.
        slack (float): bound_value - measured_norm.
        passed (bool): slack >= -tolerance.
        tolerance (float): Allowed violation.
        expect_pass (bool): Always True for bounds.
        metadata (dict): Parameters of the evaluation.
    """
    name: str
    measured_norm: float
    bound_value: float
    slack: float
    passed: bool
    tolerance: float = BOUND_TOLERANCE
    expect_pass: bool = True
    metadata: dict = field(default_factory=dict)

    @classmethod
    def build(cls, name, measured_norm, bound_value, tolerance = BOUND_TOLERANCE, **metadata):
        slack = bound_value - measured_norm
        report = cls(name, float(measured_norm), float(bound_value), float(slack), slack >= -tolerance, tolerance, True, metadata)
        if report.unexpected:
            log.warning(f"Bound {name} violated {metadata}: measured {measured_norm:.6e} > bound {bound_value:.6e}.")
        return report

    @property
    def unexpected(self):
        """True when the bound is violated."""
        return not self.passed

    def to_row(self):
        """
        Returns the report as a serialization row; lhs is the measured norm, rhs the bound.
        """
        metadata = dict(self.metadata, slack=self.slack)
        abs_err = abs(self.slack)
        return {
            "name": self.name,
            "params": format_params(metadata, self.expect_pass),
            "lhs_re": self.measured_norm, "lhs_im": 0.0,
            "rhs_re": self.bound_value, "rhs_im": 0.0,
            "abs_err": abs_err, "rel_err": abs_err / self.bound_value if self.bound_value else math.inf,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }

def _format_value(value):
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, complex):
        return f"{value.real:g}{value.imag:+g}i" if value.imag else f"{value.real:g}"
    if isinstance(value, float):
        return f"{value:g}"
    return str(value)

def format_params(metadata, expect_pass = True):
    """
    Renders metadata as "key=value;..." sorted by key, with expect=pass|fail appended to the keys.
    """
    items = dict(metadata, expect="pass" if expect_pass else "fail")
    return ";".join(f"{key}={_format_value(items[key])}" for key in sorted(items))

def format_float(value):
    """
    Formats a float with 17 significant digits and a lowercase exponent.
    """
    return f"{value:.16e}"

def write_reports(reports, stream, fmt = "csv", header = True):
    """
    Writes reports to a text stream.

    Args:
        reports (list): CheckReport or BoundReport objects.
        stream (file): Text stream.
        fmt (str, optional): "csv" or "jsonl". Defaults to "csv".
        header (bool, optional): Write the CSV header. Defaults to True.
    """
    if fmt == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        if header:
            writer.writerow(REPORT_FIELDS)
        for report in reports:
            row = report.to_row()
            writer.writerow([_csv_cell(row[key]) for key in REPORT_FIELDS])
    elif fmt == "jsonl":
        for report in reports:
            row = report.to_row()
            stream.write(json.dumps({key: _json_cell(row[key]) for key in REPORT_FIELDS}) + "\n")
    else:
        raise DomainError(f"fmt={fmt!r}", None, "Report format must be 'csv' or 'jsonl':")

def _csv_cell(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_float(value)
    return value

def _json_cell(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value

def run_tasks(tasks, threads = 1):
    """
    Runs zero-argument callables, optionally on a thread pool, and returns their results in order.
    """
    tasks = list(tasks)
    if threads <= 1 or len(tasks) <= 1:
        return [task() for task in tasks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda task: task(), tasks))

def _flatten(results):
    reports = []
    for result in results:
        if isinstance(result, list):
            reports.extend(result)
        else:
            reports.append(result)
    return reports

def _value(f, mu, x, y, side, quad = None, form = Form.AUTO):
    return differint(EvalRequest(f, mu, x, y, side, form, quad or QuadConfig())).value

def operator_function(f, mu, y, side, quad = None):
    """
    Wraps t -> D^mu[f; y](t) as a FunctionSpec so that it can be fed to another operator.

    The result is tagged C^n, so its derivatives come from finite differences.
    """
    quad = quad or NESTED_QUAD

    def value(t):
        t = np.atleast_1d(np.asarray(t, dtype=float))
        return np.array([_value(f, mu, s, y, side, quad) for s in t])

    return FunctionSpec(value, (), f.domain_bound, Smoothness.CN, f"D^{mu}[{f.name}]")

# Norm bounds

def _bound_constant(which, mu, y):
    # coefficient of b^Re(mu) / (Re(mu) |Gamma(mu)|)
    m = mu.real
    if which == 1:
        return (1.0 - y) ** (m - 1.0)
    if which == 2:
        return 1.0
    if which == 3:
        return (1.0 - y) ** (m - 1.0)
    if which == 4:
        return 1.0 - (1.0 - y) ** m
    return (1.0 - y) ** m

def check_norm_bounds(f, mu, b, y, which, quad = None):
    """
    Checks one of the five operator-norm bounds of the incomplete integrals of order mu > 0.

    Here mu is the integration order. The bounds, with C = b^mu / Gamma(mu + 1), are

    1. 0 < mu <= 1: ||I^mu[f]||_L1[0,b] <= (1 - y)^(mu - 1) C ||f||_L1[0,yb]
    2. mu > 1: ||I^mu[f]||_L1[0,b] <= C ||f||_L1[0,yb]
    3. mu > 1: ||I^mu{f}||_L1[0,b] <= (1 - y)^(mu - 1) C ||f||_L1[0,b]
    4. ||I^mu[f]||_Linf[0,b] <= (1 - (1 - y)^mu) C ||f||_Linf[0,yb]
    5. ||I^mu{f}||_Linf[0,b] <= (1 - y)^mu C ||f||_Linf[0,b]

    For complex mu the real part replaces mu and |Gamma(mu)| Re(mu) replaces Gamma(mu + 1). L1 norms use
    256 Gauss-Legendre panels, Linf norms 1024 samples at x_i = b i / 1024.

    Args:
        f (FunctionSpec): The function, defined on [0, b].
        mu (complex): Integration order with Re(mu) > 0.
        b (float): Right end of the interval, b <= f.domain_bound.
        y (float): Cut ratio.
        which (int): Bound number, 1 to 5.
        quad (QuadConfig, optional): Quadrature settings. Defaults to QuadConfig().

    Returns:
        BoundReport: Measured norm against the bound.

    Raises:
        DomainError: On a regime mismatch or an unsuitable function class.
    """
    mu = complex(mu)
    m = mu.real
    if which not in (1, 2, 3, 4, 5):
        raise DomainError(f"which={which!r}", None, "Norm bounds are numbered 1 to 5:")
    if not m > 0:
        raise DomainError(f"mu={mu!r}", None, "Norm bounds need a positive integration order:")
    if which == 1 and not m <= 1:
        raise DomainError(f"mu={mu!r}", None, "Bound 1 requires 0 < mu <= 1:")
    if which in (2, 3) and not m > 1:
        raise DomainError(f"mu={mu!r}", None, f"Bound {which} requires mu > 1:")
    if which == 3 and f.smoothness is Smoothness.L1_LOWER:
        raise DomainError(f.name, None, "Bound 3 requires f integrable on [0, b]:")
    if which in (4, 5) and f.smoothness in (Smoothness.L1_LOWER, Smoothness.L1):
        raise DomainError(f.name, None, f"Bound {which} requires a bounded function:")
    if not 0 < b <= f.domain_bound:
        raise DomainError(f"b={b!r}", None, "The interval must lie inside the domain of f:")
    quad = quad or QuadConfig()
    side = Side.LOWER if which in (1, 2, 4) else Side.UPPER
    output = lambda x: abs(_value(f, -mu, x, y, side, quad))
    if which <= 3:
        measured = gauss_legendre_panels(lambda xs: np.array([output(x) for x in xs]), 0.0, b, L1_PANELS).real
        limit = y * b if which in (1, 2) else b
        f_norm = require_converged(integrate(lambda ts: np.abs(f(ts)), 0.0, limit, quad), quad, f"norm of {f.name}").real
    else:
        samples = b * np.arange(1, LINF_SAMPLES + 1) / LINF_SAMPLES
        measured = max(output(x) for x in samples)
        limit = y * b if which == 4 else b
        f_norm = float(np.max(np.abs(f(limit * np.arange(0, LINF_SAMPLES + 1) / LINF_SAMPLES))))
    bound = _bound_constant(which, mu, y) * b ** m / (m * abs(gamma(mu))) * f_norm
    return BoundReport.build(f"bound-{which}", measured, bound, f=f.name, mu=mu, b=float(b), y=float(y))

# Zero-order limits

def check_zero_order_limits(f, x, y, mu_sequence = MU_SEQUENCE, tolerance = 1e-2, quad = None):
    """
    Follows the incomplete integrals of order mu -> 0+ at x.

    The lower integral tends to 0 and the upper integral to f(x). For each side one report per mu
    compares the value with its limit; it passes when the error does not exceed the previous
    error (or `tolerance`). A final report per side compares the last error with `tolerance`, and a
    monotonicity report measures the largest increase over the last three errors.

    Args:
        f (FunctionSpec): Function continuous at x.
        x (float): Evaluation point.
        y (float): Cut ratio.
        mu_sequence (tuple, optional): Decreasing positive integration orders. Defaults to MU_SEQUENCE.
        tolerance (float, optional): Final tolerance. Defaults to 1e-2.
        quad (QuadConfig, optional): Quadrature settings.

    Returns:
        list: CheckReport objects.
    """
    reports = []
    target_upper = f(x)
    for side, target in ((Side.LOWER, 0j), (Side.UPPER, target_upper)):
        errors = []
        previous = math.inf
        for mu in mu_sequence:
            value = _value(f, -mu, x, y, side, quad)
            error = abs(value - target)
            reports.append(CheckReport.compare(f"limit-{side.value}", value, target, max(tolerance, previous),
                                               f=f.name, x=x, y=y, mu=mu))
            errors.append(error)
            previous = error
        reports.append(CheckReport.compare(f"limit-{side.value}-final", errors[-1], 0.0, tolerance, f=f.name, x=x, y=y, mu=mu_sequence[-1]))
        tail = errors[-3:]
        increase = max([0.0] + [later - earlier for earlier, later in zip(tail, tail[1:])])
        reports.append(CheckReport.compare(f"limit-{side.value}-monotone", increase, 0.0, 0.0, f=f.name, x=x, y=y))
    return reports

# Leibniz rules and the chain rule

def leibniz_monomial_check(f, n, mu, x, y, side, tolerance = 1e-8, quad = None):
    """
    Checks D^mu[t^n f; y] = sum_k C(n, k) x^(n - k) (-1)^k Gamma(-mu + k) / Gamma(-mu) D^(mu - k)[f; y].

    Args:
        f (FunctionSpec): The function.
        n (int): Monomial degree, 1 <= n <= 6.
        mu (complex): Order.
        x (float): Evaluation point.
        y (float): Cut ratio.
        side (Side or str): Lower or upper.
        tolerance (float, optional): Pass threshold. Defaults to 1e-8.
        quad (QuadConfig, optional): Quadrature settings.

    Returns:
        CheckReport: Direct quadrature against the finite sum.
    """
    side = Side(side)
    if not 1 <= n <= 6:
        raise DomainError(f"n={n!r}", None, "The monomial Leibniz rule is checked for 1 <= n <= 6:")
    mu = complex(mu)
    lhs = _value(times_monomial(f, n), mu, x, y, side, quad)
    rhs = 0j
    for k in range(n + 1):
        rhs += math.comb(n, k) * x ** (n - k) * (-1) ** k * gamma_ratio(mu, k) * _value(f, mu - k, x, y, side, quad)
    return CheckReport.compare(f"leibniz-monomial-{side.value}", lhs, rhs, tolerance, f=f.name, n=n, mu=mu, x=x, y=y)

def _series_tail(terms):
    magnitudes = [abs(term) for term in terms[-3:]]
    if magnitudes[-1] == 0:
        return 0.0
    ratios = [later / earlier for earlier, later in zip(magnitudes, magnitudes[1:]) if earlier > 0]
    if not ratios:
        return 0.0
    ratio = max(ratios)
    if ratio >= 1:
        return math.inf
    return magnitudes[-1] * ratio / (1.0 - ratio)

def _require_analytic(g, x):
    if not (g.is_analytic and g.radius > x):
        raise AnalyticityRequired(f"{g.name} is {g.smoothness.value} with radius {g.radius} at x={x}")

def _series_report(name, lhs, terms, tolerance, **metadata):
    tail = _series_tail(terms)
    effective = tolerance if math.isinf(tail) else max(tolerance, 10.0 * tail)
    return CheckReport.compare(name, lhs, sum(terms), effective, tail=tail, K=len(terms) - 1, **metadata)

def leibniz_series_check(f, g, mu, x, y, side, K = 25, tolerance = 1e-6, quad = None):
    """
    Checks D^mu[f g; y](x) = sum_(k <= K) C(mu, k) D^(mu - k)[f; y](x) g^(k)(x).

    The tail is extrapolated geometrically from the last three terms; the check passes when the
    difference is within max(tolerance, 10 * tail), which is recorded in the report metadata.

    Args:
        f (FunctionSpec): First factor.
        g (FunctionSpec): Analytic factor with derivatives and radius > x.
        mu (complex): Order.
        x (float): Evaluation point.
        y (float): Cut ratio.
        side (Side or str): Lower or upper.
        K (int, optional): Truncation, at most 30. Defaults to 25.
        tolerance (float, optional): Pass threshold. Defaults to 1e-6.
        quad (QuadConfig, optional): Quadrature settings.

    Returns:
        CheckReport: Direct quadrature on the product against the truncated series.

    Raises:
        AnalyticityRequired: If g is not analytic on a disk of radius > x.
        LimitError: If K > 30.
    """
    side = Side(side)
    _require_analytic(g, x)
    if K > MAX_SERIES_TERMS:
        raise LimitError(f"K={K} > {MAX_SERIES_TERMS}")
    mu = complex(mu)
    lhs = _value(product(f, g), mu, x, y, side, quad)
    terms = [generalized_binomial(mu, k) * _value(f, mu - k, x, y, side, quad) * g.derivative(k)(x) for k in range(K + 1)]
    return _series_report(f"leibniz-series-{side.value}", lhs, terms, tolerance, f=f.name, g=g.name, mu=mu, x=x, y=y)

def composite_derivatives(outer, inner, x, K):
    """
    Returns [(f o g)(x), (f o g)'(x), ..., (f o g)^(K)(x)].

    Orders up to 16 use faa_di_bruno_derivative; higher orders use partial Bell polynomials.
    """
    g_value = inner(x).real
    f_derivs = [outer.derivative(r)(g_value) for r in range(1, K + 1)]
    g_derivs = [inner.derivative(j)(x) for j in range(1, K + 1)]
    values = [outer(g_value)]
    bell = partial_bell_polynomials(g_derivs, K) if K > FAA_DI_BRUNO_LIMIT else None
    for k in range(1, K + 1):
        if k <= FAA_DI_BRUNO_LIMIT:
            values.append(faa_di_bruno_derivative(f_derivs, g_derivs, k))
        else:
            values.append(sum(f_derivs[r - 1] * bell[k][r] for r in range(1, k + 1)))
    return values

def chain_rule_check(outer, inner, mu, x, y, side, K = 20, tolerance = 1e-5, quad = None):
    """
    Checks D^mu[f(g(t)); y](x) = sum_(k <= K) C(mu, k) D^(mu - k)[1; y](x) (f o g)^(k)(x).

    D^(mu - k)[1; y](x) is (1 - (1 - y)^(k - mu)) x^(k - mu) / Gamma(1 + k - mu) on the lower side and
    (1 - y)^(k - mu) x^(k - mu) / Gamma(1 + k - mu) on the upper side.

    Args:
        outer (FunctionSpec): Outer function f with derivatives.
        inner (FunctionSpec): Inner function g with derivatives.
        mu (complex): Order.
        x (float): Evaluation point.
        y (float): Cut ratio.
        side (Side or str): Lower or upper.
        K (int, optional): Truncation, at most 30. Defaults to 20.
        tolerance (float, optional): Pass threshold. Defaults to 1e-5.
        quad (QuadConfig, optional): Quadrature settings.

    Returns:
        CheckReport: Direct quadrature on the composite against the truncated series.
    """
    side = Side(side)
    _require_analytic(outer, x)
    _require_analytic(inner, x)
    if K > MAX_SERIES_TERMS:
        raise LimitError(f"K={K} > {MAX_SERIES_TERMS}")
    mu = complex(mu)
    lhs = _value(composite(outer, inner), mu, x, y, side, quad)
    form = constant_lower if side is Side.LOWER else constant_upper
    derivatives = composite_derivatives(outer, inner, x, K)
    terms = [generalized_binomial(mu, k) * form(mu - k, x, y) * derivatives[k] for k in range(K + 1)]
    return _series_report(f"chain-{side.value}", lhs, terms, tolerance, f=outer.name, g=inner.name, mu=mu, x=x, y=y)

# Counterexamples

_NESTED_KINDS = {
    "lower-integral": (Side.LOWER, -1.0),
    "lower-derivative": (Side.LOWER, 1.0),
    "upper-integral": (Side.UPPER, -1.0),
    "upper-derivative": (Side.UPPER, 1.0),
}

def _nested_numeric(side, lam, inner, outer, x, y):
    f = power(lam)
    return _value(operator_function(f, inner, y, side), outer, x, y, side, NESTED_QUAD)

def semigroup_failure_report(lam, mu, nu, y, kind = "lower-integral", x = 1.0):
    """
    Shows that incomplete operators have no semigroup property.

    For positive mu and nu, `kind` selects lower or upper operators of integration (orders -mu, -nu)
    or differentiation (orders mu, nu). The composition of the nu operator followed by the mu operator
    on t^lambda, as a product of incomplete betas, is compared with the single operator of the summed
    order; the report is expected to fail by more than 1e-3.

    Args:
        lam (complex): Exponent lambda.
        mu (float): Outer order magnitude.
        nu (float): Inner order magnitude.
        y (float): Cut ratio.
        kind (str, optional): One of lower-integral, lower-derivative, upper-integral, upper-derivative.
        x (float, optional): Evaluation point. Defaults to 1.

    Returns:
        CheckReport: Expected failure.
    """
    side, sign = _NESTED_KINDS[kind]
    nested = nested_power(side, lam, sign * nu, sign * mu, x, y)
    single = (power_lower if side is Side.LOWER else power_upper)(lam, sign * (mu + nu), x, y)
    return CheckReport.compare(f"semigroup-{kind}", nested, single, FAILURE_MARGIN, expect_pass=False,
                               lam=complex(lam), mu=mu, nu=nu, x=x, y=y)

def semigroup_cross_path_report(lam, mu, nu, y, kind = "lower-integral", x = 1.0):
    """
    Computes the same composition as semigroup_failure_report by nested numerical operators and
    compares it with the beta-product value to 1e-7.
    """
    side, sign = _NESTED_KINDS[kind]
    nested = nested_power(side, lam, sign * nu, sign * mu, x, y)
    numeric = _nested_numeric(side, lam, sign * nu, sign * mu, x, y)
    return CheckReport.compare(f"semigroup-{kind}-crosspath", numeric, nested, CROSS_PATH_TOLERANCE,
                               lam=complex(lam), mu=mu, nu=nu, x=x, y=y)

def semigroup_complete_report(lam, mu, nu):
    """
    Checks that complete betas (the limit y -> 1) restore the classical semigroup property
    B(lambda + 1, nu) B(lambda + nu + 1, mu) / (Gamma(mu) Gamma(nu)) = B(lambda + 1, mu + nu) / Gamma(mu + nu).
    """
    lam = complex(lam)
    lhs = beta(lam + 1.0, nu) * beta(lam + nu + 1.0, mu) * reciprocal_gamma(mu) * reciprocal_gamma(nu)
    rhs = beta(lam + 1.0, mu + nu) * reciprocal_gamma(mu + nu)
    return CheckReport.compare("semigroup-complete", lhs, rhs, 1e-8, lam=lam, mu=mu, nu=nu)

def inversion_failure_report(lam, mu, y, side = Side.LOWER):
    """
    Shows that the incomplete derivative of order mu does not invert the incomplete integral of order mu.

    The ratio D^mu[I^mu[t^lambda; y]; y] / t^lambda is a product of incomplete betas; the report compares
    it with 1 and is expected to fail by more than 1e-3.

    Args:
        lam (complex): Exponent lambda.
        mu (float): Integration order, mu > 0.
        y (float): Cut ratio.
        side (Side or str, optional): Lower or upper. Defaults to lower.

    Returns:
        CheckReport: Expected failure.
    """
    side = Side(side)
    ratio = inversion_ratio(side, lam, mu, y)
    return CheckReport.compare(f"inversion-{side.value}", ratio, 1.0, FAILURE_MARGIN, expect_pass=False,
                               lam=complex(lam), mu=mu, y=y)

def inversion_cross_path_report(lam, mu, y, side = Side.LOWER, x = 1.0):
    """
    Computes the inversion ratio by nested numerical operators at x and compares it with the
    beta-product value to 1e-7.
    """
    side = Side(side)
    ratio = inversion_ratio(side, lam, mu, y)
    numeric = _nested_numeric(side, lam, -mu, mu, x, y) / x ** complex(lam)
    return CheckReport.compare(f"inversion-{side.value}-crosspath", numeric, ratio, CROSS_PATH_TOLERANCE,
                               lam=complex(lam), mu=mu, x=x, y=y)

def inversion_complete_report(lam, mu):
    """
    Checks that complete betas restore the classical left inverse:
    B(lambda + 1, mu) Gamma(lambda + mu + 1) / (Gamma(mu) Gamma(lambda + 1)) = 1.
    """
    lam = complex(lam)
    lhs = beta(lam + 1.0, mu) * reciprocal_gamma(mu) * gamma(lam + mu + 1.0) * reciprocal_gamma(lam + 1.0)
    return CheckReport.compare("inversion-complete", lhs, 1.0, 1e-8, lam=lam, mu=mu)

def derivative_shift_report(f, mu, x, y, side = Side.UPPER, quad = None, fd_step = None):
    """
    Shows that d/dx D^mu[f; y] differs from D^(mu + 1)[f; y].

    The difference is the boundary term y (1 - y)^(-mu - 1) x^(-mu - 1) f(xy) / Gamma(-mu); the report
    is expected to fail by more than 1e-3.
    """
    side = Side(side)
    mu = complex(mu)
    step = fd_step or 1e-3 * x
    lhs, _ = richardson_derivative(lambda s: _value(f, mu, s, y, side, quad), x, step)
    rhs = _value(f, mu + 1.0, x, y, side, quad)
    return CheckReport.compare(f"derivative-shift-{side.value}", lhs, rhs, FAILURE_MARGIN, expect_pass=False,
                               f=f.name, mu=mu, x=x, y=y)

def composition_theorem_suite(f, mus, x, y, tolerance = 1e-5, quad = None):
    """
    Evaluates the four composition identities for each integration order in `mus` (Re(mu) > 1).

    Returns:
        list: CheckReport objects, one per identity and order.
    """
    reports = []
    for mu in mus:
        for identity in Identity:
            lhs, rhs = composition_lhs_rhs(identity, f, mu, x, y, quad)
            reports.append(CheckReport.compare(f"composition-{identity.value}", lhs, rhs, tolerance, f=f.name, mu=complex(mu), x=x, y=y))
    return reports

# Suites

FORM_FUNCTIONS = (power(0.5), exponential(1.0), sine())
FORM_ORDERS = (-0.3, -1.5, -2.7, complex(-0.5, 0.4))
GRID_X = (0.3, 1.0, 2.0)
GRID_Y = (0.1, 0.5, 0.9)

def _grid():
    for f in FORM_FUNCTIONS:
        for mu in FORM_ORDERS:
            for x in GRID_X:
                for y in GRID_Y:
                    yield f, mu, x, y

def forms_suite(threads = 1):
    """
    Compares the three integral forms pairwise on both sides over the standard grid (tolerance 1e-8).
    """
    def point(f, mu, x, y, side):
        values = {form: _value(f, mu, x, y, side, form=form) for form in (Form.FORM1, Form.FORM2, Form.FORM3)}
        return [CheckReport.compare(f"forms-{side.value}-{a.value}-{b.value}", values[a], values[b], 1e-8, f=f.name, mu=complex(mu), x=x, y=y)
                for a, b in ((Form.FORM1, Form.FORM2), (Form.FORM1, Form.FORM3), (Form.FORM2, Form.FORM3))]

    tasks = [lambda args=args, side=side: point(*args, side) for args in _grid() for side in Side]
    return _flatten(run_tasks(tasks, threads))

CLOSED_FORM_LAMBDAS = (0.0, 0.5, 1.0, 2.5)
CLOSED_FORM_ORDERS = (-1.5, -0.3, 0.4, 1.3, complex(-0.5, 0.4))

def closed_form_concordance_suite(threads = 1, xs = (0.5, 2.0), ys = (0.25, 0.75)):
    """
    Compares the operators on t^lambda with the incomplete-beta closed forms (tolerance 1e-8),
    derivative orders included, and the classical operator with its exp and power closed forms.
    """
    def point(lam, mu, x, y, side):
        closed = (power_lower if side is Side.LOWER else power_upper)(lam, mu, x, y)
        return CheckReport.compare(f"closedform-power-{side.value}", _value(power(lam), mu, x, y, side), closed, 1e-8,
                                   lam=lam, mu=complex(mu), x=x, y=y)

    def classical(mu, x):
        exp_value = classical_rl(exponential(1.0), mu, 0.0, x).value
        power_value = classical_rl(power(1.5), mu, 0.0, x).value
        return [CheckReport.compare("closedform-classical-exp", exp_value, classical_exp(1.0, mu, x), 1e-8, mu=complex(mu), x=x),
                CheckReport.compare("closedform-classical-power", power_value, classical_power(1.5, mu, x), 1e-8, mu=complex(mu), x=x)]

    tasks = [lambda args=(lam, mu, x, y, side): point(*args)
             for lam in CLOSED_FORM_LAMBDAS for mu in CLOSED_FORM_ORDERS for x in xs for y in ys for side in Side]
    tasks += [lambda mu=mu, x=x: classical(mu, x) for mu in (-1.5, -0.3, complex(-0.5, 0.4)) for x in xs]
    return _flatten(run_tasks(tasks, threads))

def additivity_suite(threads = 1):
    """
    Checks lower + upper = classical operator based at 0 (tolerance 1e-7) on the standard grid and for
    derivative orders 0.5 and 1.5 on polynomials, and that the upper operator equals the classical
    operator based at xy.
    """
    def point(f, mu, x, y):
        lower = _value(f, mu, x, y, Side.LOWER)
        upper = _value(f, mu, x, y, Side.UPPER)
        classical = classical_rl(f, mu, 0.0, x).value
        return CheckReport.compare("additivity", lower + upper, classical, 1e-7, f=f.name, mu=complex(mu), x=x, y=y)

    def shifted(f, mu, x, y):
        upper, classical = shifted_base_identity(EvalRequest(f, mu, x, y, Side.UPPER))
        return CheckReport.compare("shifted-base", upper, classical, 1e-7, f=f.name, mu=complex(mu), x=x, y=y)

    tasks = [lambda args=args: point(*args) for args in _grid()]
    polynomials = (power(2.0), power(3.0))
    tasks += [lambda args=(f, mu, x, y): point(*args) for f in polynomials for mu in (0.5, 1.5) for x in GRID_X for y in GRID_Y]
    tasks += [lambda args=(f, mu, 1.0, 0.5): shifted(*args) for f in FORM_FUNCTIONS for mu in (-0.3, 0.5, 1.5)]
    return run_tasks(tasks, threads)

RECURRENCE_ORDERS = (0.3, 0.7, 1.4)

def recurrence_suite(threads = 1):
    """
    Compares the direct derivatives with the recurrence derivatives (tolerance 1e-5) on t^1.5 and e^t.
    """
    def point(f, mu, side):
        req = EvalRequest(f, mu, 1.0, 0.5, side)
        direct = differint(req).value
        value, fd_error = recurrence_derivative(side, req, with_error=True)
        return CheckReport.compare(f"recurrence-{side.value}", value, direct, 1e-5, f=f.name, mu=mu, x=1.0, y=0.5, fd_error=fd_error)

    tasks = [lambda args=(f, mu, side): point(*args) for f in (power(1.5), exponential(1.0)) for mu in RECURRENCE_ORDERS for side in Side]
    return run_tasks(tasks, threads)

COMPOSITION_ORDERS = (1.2, 2.3, 2.5)

def composition_suite(threads = 1):
    """
    Evaluates the composition identities numerically (tolerance 1e-5) for 1, t^2 and sin t, and in
    closed form (tolerance 1e-10) for t^lambda.
    """
    functions = (constant(1.0), power(2.0), sine())
    tasks = [lambda f=f, mu=mu: composition_theorem_suite(f, (mu,), 1.0, 0.5) for f in functions for mu in COMPOSITION_ORDERS]

    def closed(identity, lam, mu):
        lhs, rhs = power_composition_sides(identity, lam, mu, 1.0, 0.5)
        return CheckReport.compare(f"composition-closedform-{identity.value}", lhs, rhs, 1e-10, lam=lam, mu=mu, x=1.0, y=0.5)

    tasks += [lambda args=(identity, lam, mu): closed(*args) for identity in Identity for lam in (0.0, 0.5, 2.0) for mu in COMPOSITION_ORDERS]
    return _flatten(run_tasks(tasks, threads))

def bounds_suite(threads = 1, draws = 20, seed = 0):
    """
    Checks the five norm bounds on `draws` random (f, mu, y, b) per bound, plus the equality cases
    of bounds 4 and 5 for f = 1.
    """
    rng = np.random.default_rng(seed)
    integrable = (power(-0.3), power(0.5), exponential(1.0), sine())
    bounded = (power(0.5), exponential(1.0), sine(), constant(1.0))
    tasks = []
    for which in (1, 2, 3, 4, 5):
        pool = integrable if which <= 3 else bounded
        for _ in range(draws):
            f = pool[int(rng.integers(len(pool)))]
            if which == 1:
                mu = float(rng.uniform(0.05, 1.0))
            elif which in (2, 3):
                mu = float(rng.uniform(1.05, 3.0))
            else:
                mu = float(rng.uniform(0.05, 3.0))
            y = float(rng.uniform(0.1, 0.9))
            b = float(rng.uniform(0.5, 2.0))
            tasks.append(lambda args=(f, mu, b, y, which): check_norm_bounds(*args))
    tasks += [lambda which=which: check_norm_bounds(constant(1.0), 0.7, 1.5, 0.4, which) for which in (4, 5)]
    return run_tasks(tasks, threads)

def limits_suite(threads = 1):
    """
    Follows both incomplete integrals to order 0 for 1, sin t and e^t at x = 1, y = 0.5.
    """
    tasks = [lambda f=f: check_zero_order_limits(f, 1.0, 0.5) for f in (constant(1.0), sine(), exponential(1.0))]
    return _flatten(run_tasks(tasks, threads))

def leibniz_suite(threads = 1):
    """
    Checks the monomial Leibniz rule (n <= 3) and the Leibniz series.
    """
    tasks = [
        lambda: leibniz_monomial_check(constant(1.0), 1, -0.7, 1.0, 0.5, Side.LOWER),
        lambda: leibniz_monomial_check(exponential(1.0), 2, -0.7, 1.0, 0.5, Side.LOWER),
        lambda: leibniz_monomial_check(exponential(1.0), 2, -0.7, 1.0, 0.5, Side.UPPER),
        lambda: leibniz_monomial_check(sine(), 3, 0.4, 1.0, 0.5, Side.LOWER),
        lambda: leibniz_monomial_check(power(0.5), 3, 0.4, 1.0, 0.5, Side.UPPER, tolerance=1e-6),
        lambda: leibniz_series_check(power(0.7), constant(1.0), -0.6, 1.0, 0.5, Side.LOWER),
        lambda: leibniz_series_check(power(0.7), power(1.0), -0.6, 1.0, 0.5, Side.LOWER),
        lambda: leibniz_series_check(power(0.7), exponential(1.0), -0.6, 1.0, 0.5, Side.LOWER),
        lambda: leibniz_series_check(power(0.7), exponential(1.0), -0.6, 1.0, 0.5, Side.UPPER),
    ]
    return run_tasks(tasks, threads)

def chain_suite(threads = 1):
    """
    Checks the chain rule for exp(t^2) on both sides and for exp(t) with the identity inside.
    """
    tasks = [
        lambda: chain_rule_check(exponential(1.0), power(2.0), -0.5, 0.6, 0.5, Side.LOWER),
        lambda: chain_rule_check(exponential(1.0), power(2.0), -0.5, 0.6, 0.5, Side.UPPER),
        lambda: chain_rule_check(exponential(1.0), power(1.0), -0.5, 0.6, 0.5, Side.LOWER),
    ]
    return run_tasks(tasks, threads)

SEMIGROUP_POINT = (0.5, 0.4, 0.6, 0.5)
INVERSION_POINT = (1.0, 0.5, 0.5)

def counterexamples_suite(threads = 1):
    """
    Semigroup, inversion and derivative-shift failures, with their cross-path and y -> 1 checks.
    """
    lam, mu, nu, y = SEMIGROUP_POINT
    tasks = []
    for kind in _NESTED_KINDS:
        tasks.append(lambda kind=kind: semigroup_failure_report(lam, mu, nu, y, kind))
        tasks.append(lambda kind=kind: semigroup_cross_path_report(lam, mu, nu, y, kind))
    tasks.append(lambda: semigroup_complete_report(lam, mu, nu))
    inv_lam, inv_mu, inv_y = INVERSION_POINT
    for side in Side:
        tasks.append(lambda side=side: inversion_failure_report(inv_lam, inv_mu, inv_y, side))
        tasks.append(lambda side=side: inversion_cross_path_report(inv_lam, inv_mu, inv_y, side))
    tasks.append(lambda: inversion_complete_report(inv_lam, inv_mu))
    tasks.append(lambda: derivative_shift_report(exponential(1.0), -0.5, 1.0, 0.5, Side.UPPER))
    tasks.append(lambda: derivative_shift_report(exponential(1.0), -0.5, 1.0, 0.5, Side.LOWER))
    return run_tasks(tasks, threads)

SUITES = {
    "forms": forms_suite,
    "closedforms": closed_form_concordance_suite,
    "additivity": additivity_suite,
    "recurrence": recurrence_suite,
    "composition": composition_suite,
    "bounds": bounds_suite,
    "limits": limits_suite,
    "leibniz": leibniz_suite,
    "chain": chain_suite,
    "counterexamples": counterexamples_suite,
}

# Define the public interface of the module
__all__ = [
    "REPORT_FIELDS", "CheckReport", "BoundReport", "format_params", "format_float", "write_reports", "run_tasks", "operator_function",
    "check_norm_bounds", "check_zero_order_limits", "leibniz_monomial_check", "leibniz_series_check", "composite_derivatives",
    "chain_rule_check", "semigroup_failure_report", "semigroup_cross_path_report", "semigroup_complete_report",
    "inversion_failure_report", "inversion_cross_path_report", "inversion_complete_report", "derivative_shift_report",
    "composition_theorem_suite", "forms_suite", "closed_form_concordance_suite", "additivity_suite", "recurrence_suite",
    "composition_suite", "bounds_suite", "limits_suite", "leibniz_suite", "chain_suite", "counterexamples_suite", "SUITES",
]
