"""Expression parser tests."""

import pytest

from awdaha.algebras import delta_q, hhat_q
from awdaha.errors import ExpressionSyntaxError, UnknownName
from awdaha.free_algebra import Alphabet, NCPoly
from awdaha.parser import byte_offset, parse_expression, parse_rule, parse_word
from awdaha.scalars import q


class TestSyntaxErrors:
    """Test error positions and reasons from the grammar."""

    def test_bad_character(self) -> None:
        """Test that characters outside the grammar are rejected with an offset."""
        with pytest.raises(ExpressionSyntaxError) as excinfo:
            delta_q().parse("A + $B")
        assert excinfo.value.offset == 4
        assert "unexpected character '$'" in str(excinfo.value)

    def test_non_ascii_digit(self) -> None:
        """Test that only ASCII digits are numbers."""
        with pytest.raises(ExpressionSyntaxError) as excinfo:
            delta_q().parse("٣*A")
        assert excinfo.value.offset == 0
        assert excinfo.value.reason == "unexpected character '٣'"

    def test_offset_after_ascii_prefix(self) -> None:
        """Test the offset of a non-ASCII character after other tokens."""
        with pytest.raises(ExpressionSyntaxError) as excinfo:
            delta_q().parse("A + ٣")
        assert excinfo.value.offset == 4

    def test_byte_offset(self) -> None:
        """Test that offsets count UTF-8 bytes."""
        assert byte_offset("٣*A + $", 6) == 7
        assert byte_offset("A + $", 4) == 4

    def test_caret_column(self) -> None:
        """Test that the caret sits under the character at a byte offset."""
        error = ExpressionSyntaxError("٣*A + $", 7, "unexpected character '$'")
        assert error.message.splitlines()[-1] == "  " + " " * 6 + "^"

    def test_trailing_operator(self) -> None:
        """Test input that ends after a binary operator."""
        with pytest.raises(ExpressionSyntaxError) as excinfo:
            delta_q().parse("A +")
        assert excinfo.value.offset == 3
        assert excinfo.value.reason == "unexpected end of expression"

    def test_missing_exponent(self) -> None:
        """Test a power without an integer exponent."""
        with pytest.raises(ExpressionSyntaxError, match="integer exponent"):
            delta_q().parse("A^B")

    def test_stray_parenthesis(self) -> None:
        """Test a closing parenthesis with no opening one."""
        with pytest.raises(ExpressionSyntaxError) as excinfo:
            delta_q().parse("A + B)")
        assert excinfo.value.offset == 5
        assert excinfo.value.reason == "unexpected token ')'"


class TestParseExpression:
    """Test parsing into free algebra elements."""

    def test_juxtaposition_multiplies(self) -> None:
        """Test the documented example with implicit multiplication."""
        ab = Alphabet.from_names(["A", "B"])
        result = parse_expression("q^2*A*B - (q - q^-1) B A", ab)
        assert str(result) == "q^2*A*B + (-q + q^-1)*B*A"

    def test_precedence_and_unary_minus(self) -> None:
        """Test that powers bind tighter than products and signs."""
        ab = Alphabet.from_names(["A", "B"])
        a = NCPoly.letter(ab, "A")
        assert parse_expression("-A^2 + 3", ab) == 3 - a * a

    def test_scalar_division(self) -> None:
        """Test division by a scalar expression."""
        ab = Alphabet.from_names(["A"])
        a = NCPoly.letter(ab, "A")
        assert parse_expression("A/(q + q^-1)", ab) == a / (q + 1 / q)

    def test_inverse_letter(self) -> None:
        """Test that X^-2 resolves to the letter X^-1 squared."""
        hhat = hhat_q()
        inverse = hhat.letter("X^-1")
        assert hhat.parse("X^-2") == inverse * inverse

    def test_named_inverse(self) -> None:
        """Test that t0^-1 resolves to the derived element T0 - t0."""
        hhat = hhat_q()
        assert hhat.parse("t0^-1") == hhat.letter("T0") - hhat.letter("t0")

    def test_primed_name(self) -> None:
        """Test that C' is a single identifier."""
        delta = delta_q()
        assert delta.parse("C'") == delta.derived("C'").definition

    def test_division_by_non_scalar(self) -> None:
        """Test that division by an element is rejected."""
        with pytest.raises(ExpressionSyntaxError, match="division by a non-scalar"):
            delta_q().parse("A/B")

    def test_division_by_zero(self) -> None:
        """Test that division by zero is a syntax error."""
        with pytest.raises(ExpressionSyntaxError, match="division by zero"):
            delta_q().parse("A/(q - q)")

    def test_non_invertible_power(self) -> None:
        """Test that A^-1 is rejected in Delta_q."""
        with pytest.raises(ExpressionSyntaxError, match="non-invertible"):
            delta_q().parse("A^-1")

    def test_unbalanced_parenthesis(self) -> None:
        """Test a missing closing parenthesis."""
        with pytest.raises(ExpressionSyntaxError, match="expected '\\)'"):
            delta_q().parse("(A + B")

    def test_empty_expression(self) -> None:
        """Test that empty input is rejected."""
        with pytest.raises(ExpressionSyntaxError, match="empty expression"):
            delta_q().parse("   ")

    def test_unknown_identifier(self) -> None:
        """Test that unknown names raise UnknownName."""
        with pytest.raises(UnknownName, match="Unknown name 'Z'"):
            delta_q().parse("A*Z")


class TestParseWord:
    """Test parsing of rule left-hand sides."""

    def test_word(self) -> None:
        """Test a word with an inverse letter."""
        alphabet = hhat_q().alphabet
        assert parse_word("t0*X^-1", alphabet) == (4, 3)

    def test_identity_word(self) -> None:
        """Test that 1 is the empty word."""
        assert parse_word("1", delta_q().alphabet) == ()

    def test_empty_letter(self) -> None:
        """Test that a doubled separator is rejected."""
        with pytest.raises(ExpressionSyntaxError) as excinfo:
            parse_word("A**B", delta_q().alphabet)
        assert excinfo.value.offset == 2
        assert excinfo.value.reason == "unexpected token '*'"

    def test_other_number(self) -> None:
        """Test that 1 is the only numeric word."""
        with pytest.raises(ExpressionSyntaxError, match="joined by"):
            parse_word("2", delta_q().alphabet)

    def test_unknown_letter(self) -> None:
        """Test a name outside the alphabet."""
        with pytest.raises(UnknownName, match="Unknown name 'X'"):
            parse_word("A*X", delta_q().alphabet)


class TestParseRule:
    """Test rule lines."""

    def test_rule_with_kind(self) -> None:
        """Test a third-kind rule of Hhat_q."""
        hhat = hhat_q()
        lhs, rhs, kind = parse_rule("X*X^-1 -> 1 ; kind=third", hhat.alphabet)
        assert lhs == hhat.alphabet.word(["X", "X^-1"])
        assert rhs == 1
        assert kind == "third"

    def test_default_kind(self) -> None:
        """Test that the kind defaults to first."""
        ab = Alphabet.from_names(["A", "B"])
        lhs, rhs, kind = parse_rule("B*A -> q^2*A*B", ab)
        assert lhs == (1, 0)
        assert str(rhs) == "q^2*A*B"
        assert kind == "first"

    def test_missing_arrow(self) -> None:
        """Test a rule line without an arrow."""
        ab = Alphabet.from_names(["A", "B"])
        with pytest.raises(ExpressionSyntaxError, match="expected '->'"):
            parse_rule("B*A = A*B", ab)

    @pytest.mark.parametrize(
        "line", ["B*A -> A ; kind=fifth", "B*A -> A ; sort=first", "B*A -> A ;"]
    )
    def test_bad_kind(self, line: str) -> None:
        """Test malformed kind suffixes."""
        ab = Alphabet.from_names(["A", "B"])
        with pytest.raises(ExpressionSyntaxError) as excinfo:
            parse_rule(line, ab)
        assert excinfo.value.reason == "expected '; kind=first|second|third'"
