"""
irlfrac module initializer

This module provides numerical incomplete Riemann-Liouville fractional integrals and derivatives,
their closed forms on elementary functions, and executable checks of their identities, bounds and
counterexamples. It includes functionalities for:

- Evaluating the lower and upper incomplete differintegrals of any complex order.
- Evaluating the classical Riemann-Liouville operator they split.
- Special functions: gamma, beta, incomplete gamma and beta, Gauss and incomplete Gauss 2F1.
- Adaptive quadrature for complex integrands with endpoint power singularities.
- Closed forms on power, exponential and hypergeometric test functions.
- Verification suites that report each identity as a CheckReport.
- A command line for evaluation, tabulation and verification.

Classes:

- FunctionSpec: A function with optional derivatives and a smoothness tag.
- EvalRequest: A validated operator evaluation.
- QuadConfig: Quadrature tolerances and budgets.
- QuadResult: A quadrature value with its error estimate.
- CheckReport: Outcome of an identity check.
- BoundReport: Outcome of a norm bound.
- VerificationManager: Manages named verification suites.

Modules:

- specfun: Special functions.
- quadrature: Adaptive Gauss-Kronrod and endpoint-power quadrature.
- differences: Richardson-extrapolated finite differences.
- functions: FunctionSpec and the builtin functions.
- operators: The incomplete and classical operators.
- closedforms: Closed forms of the operators on test functions.
- verify: Checks, suites and report serialization.
- manager: Contains the VerificationManager class.
- cli: The `irlfrac` command.
- exceptions: Handles custom exceptions.

Public Functions:

operators:

- differint: Evaluates the operator of a request's side.
- lower_differint: Evaluates the lower operator.
- upper_differint: Evaluates the upper operator.
- classical_rl: Evaluates the classical operator based at a.
- recurrence_derivative: Evaluates a derivative through its order recurrence.
- composition_lhs_rhs: Evaluates both sides of a composition identity.

VerificationManager:

- add_suite: Adds a new suite to the manager.
- remove_suite: Removes a suite from the manager.
- get_suite: Retrieves a suite by its name.
- run_suite: Runs one suite.
- run_all: Runs every registered suite.
- summary: Counts the checks and unexpected polarities of a run.
- list_suites: Lists all registered suites.

Exceptions:

- IRLFracError: Base class of every irlfrac error.
- DomainError: Raised for arguments outside an operation's domain.
- QuadratureFailure: Raised when quadrature cannot deliver a value.
- VerificationError: Raised when a suite fails to run.
"""

from .exceptions import (IRLFracError, DomainError, PoleError, NumericOverflowError, LimitError, ArityError, QuadratureFailure,
                         BudgetExceeded, NonFiniteIntegrand, MissingDerivatives, DepthExceeded, AnalyticityRequired, ConfigError,
                         VerificationError)
from .quadrature import QuadConfig, QuadResult, integrate, integrate_endpoint_power
from .functions import Smoothness, FunctionSpec, constant, power, exponential, sine, power2
from .operators import (Side, Form, Identity, Order, CutRatio, EvalRequest, differint, lower_differint, upper_differint,
                        classical_rl, recurrence_derivative, composition_lhs_rhs)
from .verify import CheckReport, BoundReport
from .manager import VerificationManager

__version__ = "0.1.0"
__author__ = "hreikin"
__email__ = "hreikin@gmail.com"
__license__ = "MIT"
__description__ = "Numerical incomplete Riemann-Liouville fractional integrals and derivatives, with executable checks of their identities."
__url__ = "https://github.com/hreikin/irlfrac"

__all__ = [
    "IRLFracError", "DomainError", "PoleError", "NumericOverflowError", "LimitError", "ArityError", "QuadratureFailure",
    "BudgetExceeded", "NonFiniteIntegrand", "MissingDerivatives", "DepthExceeded", "AnalyticityRequired", "ConfigError",
    "VerificationError", "QuadConfig", "QuadResult", "integrate", "integrate_endpoint_power", "Smoothness", "FunctionSpec",
    "constant", "power", "exponential", "sine", "power2", "Side", "Form", "Identity", "Order", "CutRatio", "EvalRequest",
    "differint", "lower_differint", "upper_differint", "classical_rl", "recurrence_derivative", "composition_lhs_rhs",
    "CheckReport", "BoundReport", "VerificationManager",
]
