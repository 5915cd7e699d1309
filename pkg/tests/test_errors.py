"""Error handling and exception tests."""

import pytest

from awdaha.errors import (
    AlphabetMismatch,
    AwdahaError,
    AxisError,
    DivisionByZero,
    ExpressionSyntaxError,
    MissingImage,
    NonTermination,
    NotInT,
    SpecFormatError,
    UnknownName,
)


class TestNonTermination:
    """Test NonTermination functionality."""

    def test_fuel_message(self) -> None:
        """Test that the auto-generated message reports the fuel accounting."""
        error = NonTermination(fuel=10, spent=10, word="B*A")

        assert error.fuel == 10
        assert error.spent == 10
        assert error.cycle is False
        assert "fuel 10" in str(error)
        assert "B*A" in str(error)

    def test_cycle_message(self) -> None:
        """Test the message for a detected rewrite cycle."""
        error = NonTermination(fuel=100, spent=3, word="A*B", cycle=True)

        assert "cycle" in str(error)
        assert "after 3 rule applications" in str(error)

    def test_custom_message(self) -> None:
        """Test NonTermination with a custom message."""
        error = NonTermination(1, 1, "A", message="custom")
        assert str(error) == "custom"


class TestUnknownName:
    """Test UnknownName functionality."""

    def test_known_names_hint(self) -> None:
        """Test that known names are listed."""
        error = UnknownName("D", "delta-q", ("A", "B"))

        assert error.name == "D"
        assert error.known == ("A", "B")
        assert str(error) == "Unknown name 'D' in algebra delta-q (known: A, B)"

    def test_str_not_quoted(self) -> None:
        """Test that the KeyError base does not repr-quote the message."""
        error = UnknownName("D", "delta-q")
        assert str(error) == "Unknown name 'D' in algebra delta-q"
        assert isinstance(error, KeyError)


class TestExpressionSyntaxError:
    """Test ExpressionSyntaxError functionality."""

    def test_caret_marker(self) -> None:
        """Test that the message points at the offending offset."""
        error = ExpressionSyntaxError("A + $", 4, "unexpected character '$'")

        lines = str(error).splitlines()
        assert lines[0] == "Syntax error at offset 4: unexpected character '$'"
        assert lines[1] == "  A + $"
        assert lines[2] == "      ^"


class TestErrorContext:
    """Test context attributes of the remaining errors."""

    def test_division_by_zero(self) -> None:
        """Test DivisionByZero context."""
        error = DivisionByZero("q + 1")
        assert error.operand == "q + 1"
        assert "q + 1" in str(error)

    def test_alphabet_mismatch(self) -> None:
        """Test AlphabetMismatch context."""
        error = AlphabetMismatch(["A", "B"], ["X"])
        assert error.left == ("A", "B")
        assert str(error) == "Alphabet mismatch: [A B] vs [X]"

    def test_missing_image(self) -> None:
        """Test MissingImage context."""
        error = MissingImage("C", "psi")
        assert error.generator == "C"
        assert error.morphism == "psi"
        assert str(error) == "Morphism 'psi' has no image for generator 'C'"

    def test_axis_error(self) -> None:
        """Test AxisError context."""
        error = AxisError("Y", "Y*X")
        assert "Y*X" in str(error)
        assert "Y^-1" in str(error)

    def test_not_in_t(self) -> None:
        """Test NotInT context."""
        error = NotInT("Y*t0")
        assert error.word == "Y*t0"
        assert "outside t0, T0, T1, T2, T3" in str(error)

    def test_spec_format_error(self) -> None:
        """Test SpecFormatError context."""
        error = SpecFormatError(3, "  B*A => A*B  ", "expected '->'")
        assert error.line_number == 3
        assert str(error) == "Spec line 3: expected '->': 'B*A => A*B'"


class TestErrorHierarchy:
    """Test that every error derives from AwdahaError and a builtin."""

    @pytest.mark.parametrize(
        "error, builtin",
        [
            (DivisionByZero("1"), ZeroDivisionError),
            (AlphabetMismatch([], []), ValueError),
            (MissingImage("A"), KeyError),
            (NonTermination(1, 1, "A"), RuntimeError),
            (AxisError("X", "Y"), ValueError),
            (NotInT("Y"), ValueError),
            (UnknownName("A", "x"), KeyError),
            (ExpressionSyntaxError("", 0, "empty"), ValueError),
            (SpecFormatError(1, "", "bad"), ValueError),
        ],
    )
    def test_hierarchy(self, error: AwdahaError, builtin: type) -> None:
        """Test the base classes of one error."""
        assert isinstance(error, AwdahaError)
        assert isinstance(error, builtin)

    def test_catchable_as_base(self) -> None:
        """Test raising and catching through the base class."""
        with pytest.raises(AwdahaError, match="Unknown name"):
            raise UnknownName("A", "x")
