"""Data models for the acceptance suites."""

from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum


class SuiteVerdict(str, Enum):
    """Outcome of one acceptance suite."""

    PASS = "pass"
    FAIL = "fail"  # at least one case contradicted the expected result
    INCONCLUSIVE = "inconclusive"  # a bounded search ran out before deciding


@dataclass
class SuiteResult:
    """Result of running a single acceptance suite.

    Attributes:
        name: Suite identifier, as accepted by ``goeritz-ob suite``
        description: What the suite checks
        cases: Number of cases run
        failures: Number of cases that contradicted the expected result
        inconclusive: Number of cases a bounded search could not settle
        findings: One line per failing or inconclusive case
        seconds: Wall-clock time of the run
        timestamp: When the suite was run
    """

    name: str
    description: str
    cases: int
    failures: int
    inconclusive: int = 0
    findings: list[str] = field(default_factory=list)
    seconds: float = 0.0
    timestamp: datetime = field(default_factory=datetime.now)

    @property
    def verdict(self) -> SuiteVerdict:
        if self.failures:
            return SuiteVerdict.FAIL
        if self.inconclusive:
            return SuiteVerdict.INCONCLUSIVE
        return SuiteVerdict.PASS


@dataclass
class SuiteReport:
    """Summary of a suite run.

    Attributes:
        results: Individual suite results, in run order
        total_suites: Number of suites run
        passed: Suites with verdict PASS
        failed: Suites with verdict FAIL
        inconclusive: Suites with verdict INCONCLUSIVE
        total_cases: Cases over all suites
        timestamp: When the report was generated
    """

    results: list[SuiteResult]
    total_suites: int
    passed: int
    failed: int
    inconclusive: int
    total_cases: int
    timestamp: datetime = field(default_factory=datetime.now)

    @property
    def verdict(self) -> SuiteVerdict:
        if self.failed:
            return SuiteVerdict.FAIL
        if self.inconclusive:
            return SuiteVerdict.INCONCLUSIVE
        return SuiteVerdict.PASS

    @classmethod
    def from_results(cls, results: list[SuiteResult]) -> "SuiteReport":
        """Create a report from a list of results."""
        verdicts = [r.verdict for r in results]
        return cls(
            results=results,
            total_suites=len(results),
            passed=verdicts.count(SuiteVerdict.PASS),
            failed=verdicts.count(SuiteVerdict.FAIL),
            inconclusive=verdicts.count(SuiteVerdict.INCONCLUSIVE),
            total_cases=sum(r.cases for r in results),
        )
