"""Acceptance suites for the Goeritz engines."""

from goeritz_ob.eval.models import SuiteReport, SuiteResult, SuiteVerdict
from goeritz_ob.eval.suites import SuiteRunner

__all__ = ["SuiteReport", "SuiteResult", "SuiteVerdict", "SuiteRunner"]
