"""
irlfrac Exceptions module.

This module provides the exception classes raised by the special functions, the quadrature
engine, the incomplete Riemann-Liouville operators, the verification suites and the CLI.
It includes:

- IRLFracError: Base class for every error raised by the package.
- DomainError: A precondition on parameters or arguments is violated.
- PoleError: A gamma function is evaluated at one of its poles.
- NumericOverflowError: A value exceeds the floating-point range.
- LimitError: A combinatorial or truncation guard is exceeded.
- ArityError: Too few derivative values were supplied.
- QuadratureFailure: The quadrature engine could not deliver a usable value.
- BudgetExceeded: The subdivision budget ran out before the tolerance was met.
- NonFiniteIntegrand: The integrand returned NaN or infinity at a node.
- MissingDerivatives: An operator needs derivatives the function cannot supply.
- DepthExceeded: A recurrence derivative would recurse deeper than allowed.
- AnalyticityRequired: A series check was given a function that is not analytic on the needed disk.
- ConfigError: Invalid command-line or environment configuration.
- VerificationError: A verification suite raised while running.
"""

class IRLFracError(Exception):
    """
    Exception raised when an error occurs inside irlfrac.

    Attributes:
        error (str): Specific error message.
        traceback (str): Traceback of the error.
        message (str): Error message explaining the issue.
    """
    def __init__(self, error = None, traceback = None, message = "An error occurred in irlfrac:"):
        """
        Initialize the error.

        Args:
            error (str, optional): Specific error message. Defaults to None.
            traceback (str, optional): Traceback of the error. Defaults to None.
            message (str): Error message explaining the issue. Defaults to a generic message.
        """
        error_message = f" {error}" if error else ""
        traceback_message = f"\n{traceback}" if traceback else ""
        self.message = message + error_message + traceback_message
        super().__init__(self.message)

class DomainError(IRLFracError):
    """
    Exception raised when an argument lies outside the domain of an operation.
    """
    def __init__(self, error = None, traceback = None, message = "Argument outside the domain of the operation:"):
        super().__init__(error, traceback, message)

class PoleError(DomainError):
    """
    Exception raised when a gamma function is evaluated at a nonpositive integer.
    """
    def __init__(self, error = None, traceback = None, message = "Gamma function pole:"):
        super().__init__(error, traceback, message)

class NumericOverflowError(IRLFracError, OverflowError):
    """
    Exception raised when a result exceeds the representable floating-point range.
    """
    def __init__(self, error = None, traceback = None, message = "Result exceeds the floating-point range:"):
        super().__init__(error, traceback, message)

class LimitError(IRLFracError):
    """
    Exception raised when a combinatorial or truncation guard is exceeded.
    """
    def __init__(self, error = None, traceback = None, message = "Limit exceeded:"):
        super().__init__(error, traceback, message)

class ArityError(IRLFracError):
    """
    Exception raised when fewer derivative values are supplied than the order requires.
    """
    def __init__(self, error = None, traceback = None, message = "Not enough derivative values:"):
        super().__init__(error, traceback, message)

class QuadratureFailure(IRLFracError):
    """
    Exception raised when the quadrature engine cannot deliver a usable value.

    Attributes:
        result (QuadResult): Best value found, with `converged` set to False, when one exists.
    """
    def __init__(self, error = None, traceback = None, message = "Quadrature failed:", result = None):
        self.result = result
        super().__init__(error, traceback, message)

class BudgetExceeded(QuadratureFailure):
    """
    Exception raised when the subdivision budget is exhausted before the tolerance is met.
    """
    def __init__(self, error = None, traceback = None, message = "Subdivision budget exhausted:", result = None):
        super().__init__(error, traceback, message, result)

class NonFiniteIntegrand(QuadratureFailure):
    """
    Exception raised when the integrand is NaN or infinite at a quadrature node.
    """
    def __init__(self, error = None, traceback = None, message = "Integrand is not finite:"):
        super().__init__(error, traceback, message)

class MissingDerivatives(IRLFracError):
    """
    Exception raised when an operator needs derivatives that the function cannot supply.
    """
    def __init__(self, error = None, traceback = None, message = "Missing derivatives:"):
        super().__init__(error, traceback, message)

class DepthExceeded(IRLFracError):
    """
    Exception raised when a recurrence derivative would recurse too deeply.
    """
    def __init__(self, error = None, traceback = None, message = "Recurrence depth exceeded:"):
        super().__init__(error, traceback, message)

class AnalyticityRequired(IRLFracError):
    """
    Exception raised when a series expansion needs an analytic function on a large enough disk.
    """
    def __init__(self, error = None, traceback = None, message = "Analytic function required:"):
        super().__init__(error, traceback, message)

class ConfigError(IRLFracError):
    """
    Exception raised when the command-line or environment configuration is invalid.
    """
    def __init__(self, error = None, traceback = None, message = "Invalid configuration:"):
        super().__init__(error, traceback, message)

class VerificationError(IRLFracError):
    """
    Exception raised when a verification suite fails to run.
    """
    def __init__(self, error = None, traceback = None, message = "An error occurred while running a verification suite:"):
        super().__init__(error, traceback, message)

# Define the public interface of the module
__all__ = [
    "IRLFracError", "DomainError", "PoleError", "NumericOverflowError", "LimitError", "ArityError",
    "QuadratureFailure", "BudgetExceeded", "NonFiniteIntegrand", "MissingDerivatives", "DepthExceeded",
    "AnalyticityRequired", "ConfigError", "VerificationError",
]
