"""Verification suite tests."""

import pytest

from awdaha.errors import UnknownName
from awdaha.suites import SUITES, basis_suite, injectivity_suite, run_suite


class TestRunSuite:
    """Test suite dispatch."""

    def test_names(self) -> None:
        """Test the registered suites."""
        assert set(SUITES) == {
            "confluence",
            "psi",
            "braid",
            "squares",
            "matrices",
            "injectivity",
            "centralizer",
            "center",
            "identities",
            "basis",
        }

    def test_unknown(self) -> None:
        """Test an unknown suite name."""
        with pytest.raises(UnknownName, match="Unknown name 'everything'"):
            run_suite("everything")

    def test_basis(self) -> None:
        """Test the basis suite through the dispatcher."""
        report = run_suite("basis")
        assert report.name == "basis"
        assert report.passed, report.to_text()
        assert len(report) == 20

    def test_short_basis(self) -> None:
        """Test the basis suite with a smaller length bound."""
        report = basis_suite(max_length=2)
        assert report.passed, report.to_text()
        assert len(report) == 16

    def test_injectivity_bound_two(self) -> None:
        """Test one injectivity bound."""
        report = injectivity_suite(bounds=(2,))
        assert report.passed, report.to_text()
        (check,) = report.checks
        assert check.detail is not None
        assert check.detail.startswith("35 words, rank 35")


@pytest.mark.slow
class TestSlowSuites:
    """Run the expensive suites."""

    @pytest.mark.parametrize("name", ["confluence", "psi", "identities", "center"])
    def test_suite(self, name: str) -> None:
        """Test that the suite passes."""
        report = run_suite(name)
        assert report.passed, report.to_text()

    def test_all(self) -> None:
        """Test every suite together."""
        report = run_suite("all")
        assert report.name == "all"
        assert report.passed, report.to_text()
