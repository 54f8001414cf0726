"""Tests for the acceptance suite runner."""

import pytest

from goeritz_ob.config import Settings
from goeritz_ob.eval import SuiteReport, SuiteResult, SuiteRunner, SuiteVerdict


@pytest.fixture
def runner(tmp_path, monkeypatch):
    """A runner with default settings, away from any local .env file."""
    monkeypatch.chdir(tmp_path)
    return SuiteRunner(Settings())


class TestSuiteResult:
    """Tests for suite verdicts."""

    def test_verdicts(self):
        """Test that failures dominate inconclusive cases."""
        assert SuiteResult("a", "", cases=3, failures=0).verdict == SuiteVerdict.PASS
        assert SuiteResult("a", "", 3, 0, inconclusive=1).verdict == SuiteVerdict.INCONCLUSIVE
        assert SuiteResult("a", "", 3, 1, inconclusive=1).verdict == SuiteVerdict.FAIL

    def test_report_counts(self):
        """Test the report summary of mixed results."""
        report = SuiteReport.from_results(
            [
                SuiteResult("a", "", 2, 0),
                SuiteResult("b", "", 3, 1),
                SuiteResult("c", "", 4, 0, inconclusive=2),
            ]
        )

        assert (report.total_suites, report.passed, report.failed, report.inconclusive) == (
            3,
            1,
            1,
            1,
        )
        assert report.total_cases == 9
        assert report.verdict == SuiteVerdict.FAIL

    def test_empty_report(self):
        """Test that an empty report passes."""
        assert SuiteReport.from_results([]).verdict == SuiteVerdict.PASS


class TestSuiteRunner:
    """Tests for SuiteRunner on the quick suites."""

    def test_names(self, runner):
        """Test the registered suites in run order."""
        assert runner.names == [
            "words",
            "candidates",
            "kernel",
            "reversal",
            "presentation",
            "facts",
            "rigidity",
            "twist-formula",
            "binding",
        ]

    def test_unknown_suite(self, runner):
        """Test that an unknown name raises KeyError."""
        with pytest.raises(KeyError):
            runner.run("nonexistent")

    def test_kernel(self, runner):
        """Test the kernel suite."""
        result = runner.run("kernel")

        assert result.cases == 20
        assert result.failures == 0
        assert result.verdict == SuiteVerdict.PASS

    def test_reversal(self, runner):
        """Test the reversal suite."""
        result = runner.run("reversal")

        assert result.cases == 8
        assert result.verdict == SuiteVerdict.PASS

    def test_run_all_selected(self, runner):
        """Test running a selection of suites."""
        report = runner.run_all(["binding", "kernel"])

        assert [r.name for r in report.results] == ["binding", "kernel"]
        assert report.verdict == SuiteVerdict.PASS
        assert report.failed == 0
