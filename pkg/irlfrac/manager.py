"""
irlfrac Manager module.

This module provides the VerificationManager class to manage named verification suites.
It includes functionalities for:

- Adding new suites to the manager.
- Removing suites from the manager.
- Retrieving a specific suite.
- Running one suite or every registered suite.
- Summarising the reports of a run.
- Listing all registered suites.
"""
import traceback, logging
from irlfrac.exceptions import VerificationError
from irlfrac.verify import SUITES

log = logging.getLogger("irlfrac.manager")

class VerificationManager:
    """
    A class to manage named verification suites.

    Attributes:
        _suites (dict): Suite callables keyed by name, in registration order.
        _threads (int): Worker threads passed to every suite.
    """

    def __init__(self, suites = None, threads = 1):
        """
        Initializes the manager.

        Args:
            suites (dict, optional): Suites to register. Defaults to the builtin suites.
            threads (int, optional): Worker threads passed to every suite. Defaults to 1.
        """
        self._suites = {}
        self._threads = threads
        for name, suite in (SUITES if suites is None else suites).items():
            self.add_suite(name, suite)

    def add_suite(self, name, suite):
        """
        Adds a new suite to the manager.

        Args:
            name (str): A unique name for the suite.
            suite (callable): Callable taking `threads` and returning a list of reports.

        Raises:
            VerificationError: If an error occurs while adding the suite.
        """
        try:
            if name in self._suites:
                raise ValueError(f"Suite with name '{name}' already exists.")
            if not callable(suite):
                raise TypeError(f"Suite '{name}' is not callable.")
            self._suites[name] = suite
            log.info(f"Suite '{name}' added to manager.")
        except Exception as e:
            raise VerificationError(e, traceback.format_exc(), f"An error occurred adding suite '{name}':") from e

    def remove_suite(self, name):
        """
        Removes a suite from the manager.

        Args:
            name (str): The unique name of the suite to remove.

        Raises:
            VerificationError: If an error occurs while removing the suite.
        """
        try:
            if name not in self._suites:
                raise ValueError(f"Suite with name '{name}' does not exist.")
            del self._suites[name]
            log.info(f"Suite '{name}' removed from manager.")
        except Exception as e:
            raise VerificationError(e, traceback.format_exc(), f"An error occurred removing suite '{name}':") from e

    def get_suite(self, name):
        """
        Retrieves a specific suite.

        Args:
            name (str): The unique name of the suite.

        Returns:
            callable: The suite.

        Raises:
            VerificationError: If the suite does not exist.
        """
        try:
            if name not in self._suites:
                raise ValueError(f"Suite with name '{name}' does not exist.")
            return self._suites[name]
        except Exception as e:
            raise VerificationError(e, traceback.format_exc(), f"An error occurred retrieving suite '{name}':") from e

    def run_suite(self, name):
        """
        Runs a single suite.

        Args:
            name (str): The unique name of the suite.

        Returns:
            list: The suite's reports.

        Raises:
            VerificationError: If the suite does not exist or raises while running.
        """
        suite = self.get_suite(name)
        try:
            reports = suite(threads=self._threads)
        except Exception as e:
            raise VerificationError(e, traceback.format_exc(), f"An error occurred running suite '{name}':") from e
        unexpected = sum(1 for report in reports if report.unexpected)
        if unexpected:
            log.warning(f"Suite '{name}' finished: {len(reports)} checks, {unexpected} unexpected.")
        else:
            log.info(f"Suite '{name}' finished: {len(reports)} checks, 0 unexpected.")
        return reports

    def run_all(self, names = None):
        """
        Runs several suites in registration order.

        Args:
            names (list, optional): Suites to run. Defaults to every registered suite.

        Returns:
            dict: Reports keyed by suite name.
        """
        return {name: self.run_suite(name) for name in (self.list_suites() if names is None else names)}

    @staticmethod
    def summary(results):
        """
        Counts suites, checks and unexpected polarities of a run.

        Args:
            results (dict): Reports keyed by suite name, as returned by run_all.

        Returns:
            dict: {"suites": n, "checks": m, "unexpected": k}.
        """
        reports = [report for suite_reports in results.values() for report in suite_reports]
        return {
            "suites": len(results),
            "checks": len(reports),
            "unexpected": sum(1 for report in reports if report.unexpected),
        }

    def list_suites(self):
        """
        Lists all registered suites.

        Returns:
            list: Suite names in registration order.
        """
        return list(self._suites.keys())

# Define the public interface of the module
__all__ = ["VerificationManager"]
