"""Command-line interface tests."""

import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from awdaha.algebras import delta_q, hhat_q
from awdaha.cli import EXIT_FAILED, EXIT_FUEL, EXIT_USAGE, cli
from awdaha.spec_format import load_spec


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


class TestNormalize:
    """Test the normalize verb."""

    def test_delta(self, runner: CliRunner) -> None:
        """Test B*A in Delta_q."""
        result = runner.invoke(cli, ["normalize", "B*A"])
        assert result.exit_code == 0, result.output
        assert result.output.strip() == str(delta_q().element("B*A"))

    def test_hhat(self, runner: CliRunner) -> None:
        """Test inverse cancellation in Hhat_q."""
        result = runner.invoke(cli, ["normalize", "-a", "hhat", "X*X^-1"])
        assert result.exit_code == 0, result.output
        assert result.output.strip() == "1"

    def test_json(self, runner: CliRunner) -> None:
        """Test machine-readable output."""
        result = runner.invoke(cli, ["--format", "json", "normalize", "B*A"])
        assert result.exit_code == 0, result.output
        data = json.loads(result.output)
        assert data["algebra"] == "delta-q"
        assert data["input"] == "B*A"
        assert data["terms"] == delta_q().element("B*A").to_json()

    def test_format_from_environment(self, runner: CliRunner) -> None:
        """Test AWDAHA_FORMAT."""
        result = runner.invoke(
            cli, ["normalize", "A"], env={"AWDAHA_FORMAT": "json"}
        )
        assert result.exit_code == 0, result.output
        assert json.loads(result.output)["terms"] == [{"word": ["A"], "coeff": "1"}]

    def test_unknown_name(self, runner: CliRunner) -> None:
        """Test that an unknown generator exits with the usage code."""
        result = runner.invoke(cli, ["normalize", "A*X"])
        assert result.exit_code == EXIT_USAGE
        assert "Unknown name 'X'" in result.output

    def test_syntax_error(self, runner: CliRunner) -> None:
        """Test that a parse error exits with the usage code."""
        result = runner.invoke(cli, ["normalize", "A*(B"])
        assert result.exit_code == EXIT_USAGE
        assert "expected ')'" in result.output

    def test_out_of_fuel(self, runner: CliRunner) -> None:
        """Test that running out of fuel exits with its own code."""
        delta_q().system.clear_cache()
        result = runner.invoke(cli, ["--fuel", "1", "normalize", "B*B*B*A*A*A"])
        assert result.exit_code == EXIT_FUEL
        assert "did not terminate within fuel 1" in result.output

    def test_bad_fuel(self, runner: CliRunner) -> None:
        """Test that fuel must be positive."""
        result = runner.invoke(cli, ["--fuel", "0", "normalize", "A"])
        assert result.exit_code == 2


class TestMaps:
    """Test the psi and braid verbs."""

    def test_psi_all(self, runner: CliRunner) -> None:
        """Test the images of every generator."""
        result = runner.invoke(cli, ["psi"])
        assert result.exit_code == 0, result.output
        lines = result.output.strip().splitlines()
        assert len(lines) == 7
        assert lines[0] == f"psi(A) = {hhat_q().value('A')}"

    def test_psi_expression(self, runner: CliRunner) -> None:
        """Test the image of one expression."""
        result = runner.invoke(cli, ["psi", "B"])
        assert result.exit_code == 0, result.output
        assert result.output.strip() == f"psi(B) = {hhat_q().value('B')}"

    def test_rho(self, runner: CliRunner) -> None:
        """Test rho(A) = B."""
        result = runner.invoke(cli, ["braid", "rho", "A"])
        assert result.exit_code == 0, result.output
        assert result.output.strip() == "B"

    def test_xi_json(self, runner: CliRunner) -> None:
        """Test the target algebra of xi."""
        result = runner.invoke(cli, ["--format", "json", "braid", "xi", "A"])
        assert result.exit_code == 0, result.output
        data = json.loads(result.output)
        assert data["map"] == "xi"
        assert data["source"] == "delta-q"
        assert data["target"] == "delta-q^-1"

    def test_z4_needs_hhat(self, runner: CliRunner) -> None:
        """Test that z4 is rejected on Delta_q."""
        result = runner.invoke(cli, ["braid", "z4", "A"])
        assert result.exit_code == 2
        assert "z4 acts on hhat only" in result.output

    def test_z4(self, runner: CliRunner) -> None:
        """Test z4(X) = Y."""
        result = runner.invoke(cli, ["braid", "z4", "X", "-a", "hhat"])
        assert result.exit_code == 0, result.output
        assert result.output.strip() == "Y"


class TestCoeffMatrix:
    """Test the coeff-matrix verb."""

    def test_constant(self, runner: CliRunner) -> None:
        """Test the matrix of 1."""
        result = runner.invoke(cli, ["coeff-matrix", "1"])
        assert result.exit_code == 0, result.output
        assert result.output == "   1\n1  1\n"

    def test_projections(self, runner: CliRunner) -> None:
        """Test the four summands of Y*X."""
        result = runner.invoke(cli, ["coeff-matrix", "Y*X", "--projections"])
        assert result.exit_code == 0, result.output
        lines = result.output.splitlines()
        assert "pi_1 = 0" in lines
        assert "pi_YX = Y*X" in lines

    def test_projections_json(self, runner: CliRunner) -> None:
        """Test the machine-readable summands."""
        result = runner.invoke(
            cli, ["--format", "json", "coeff-matrix", "Y + Y^-1", "--projections"]
        )
        assert result.exit_code == 0, result.output
        data = json.loads(result.output)
        assert data["matrix"] == [
            {"i": -1, "j": 0, "entry": "1"},
            {"i": 1, "j": 0, "entry": "1"},
        ]
        assert data["projections"]["1"]["coefficients"] == [
            {"a": 1, "b": 0, "entry": "1"}
        ]
        assert data["projections"]["X"]["element"] == []


class TestBasis:
    """Test the basis verb."""

    @pytest.mark.parametrize(("algebra", "count"), [("delta", "27"), ("hhat", "42")])
    def test_count(self, runner: CliRunner, algebra: str, count: str) -> None:
        """Test the number of words of length two."""
        result = runner.invoke(cli, ["basis", "-a", algebra, "--len", "2", "--count"])
        assert result.exit_code == 0, result.output
        assert result.output.strip() == count

    def test_words(self, runner: CliRunner) -> None:
        """Test the listing at length zero and one."""
        result = runner.invoke(cli, ["basis", "--len", "0"])
        assert result.output.strip() == "1"
        result = runner.invoke(cli, ["basis", "--len", "1"])
        assert sorted(result.output.split()) == sorted(delta_q().alphabet.names)


class TestVerify:
    """Test the verify and confluence verbs."""

    def test_basis_suite(self, runner: CliRunner) -> None:
        """Test a passing suite."""
        result = runner.invoke(cli, ["verify", "basis"])
        assert result.exit_code == 0, result.output
        assert result.output.strip().endswith("basis: 20 checks, 0 failed")

    def test_unknown_suite(self, runner: CliRunner) -> None:
        """Test that click rejects unknown suites."""
        result = runner.invoke(cli, ["verify", "everything"])
        assert result.exit_code == 2

    def test_delta_confluence(self, runner: CliRunner) -> None:
        """Test that every Delta_q overlap resolves."""
        result = runner.invoke(cli, ["confluence"])
        assert result.exit_code != EXIT_FAILED, result.output
        assert result.exit_code == 0
        lines = result.output.strip().splitlines()
        assert lines[-1] == "delta-q: 42 overlaps, 0 unresolved"
        assert all(line.startswith("resolved ") for line in lines[:-1])


class TestExportSpec:
    """Test the export-spec verb."""

    def test_stdout(self, runner: CliRunner) -> None:
        """Test printing the delta-q system."""
        result = runner.invoke(cli, ["export-spec"])
        assert result.exit_code == 0, result.output
        assert result.output.startswith("# delta-q\nalphabet: A C B")

    def test_to_file(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test writing the hhat-q system and loading it back."""
        target = tmp_path / "hhat.spec"
        result = runner.invoke(cli, ["export-spec", "-a", "hhat", "-o", str(target)])
        assert result.exit_code == 0, result.output
        system = load_spec(target.read_text(encoding="utf-8"))
        assert len(system) == len(hhat_q().system)
