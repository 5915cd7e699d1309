"""Scalar field tests."""

import pytest

from awdaha.errors import DivisionByZero
from awdaha.scalars import (
    ONE,
    ZERO,
    combine,
    divide,
    format_scalar,
    invert_q,
    is_monomial,
    laurent,
    laurent_terms,
    make_scalar,
    q,
    to_scalar,
)


class TestConstruction:
    """Test building canonical scalars."""

    def test_integer_coercion(self) -> None:
        """Test that integers land in Q(q)."""
        assert to_scalar(3) == 3 * ONE
        assert to_scalar(0) == ZERO

    def test_laurent_mapping(self) -> None:
        """Test building q + q^-1 from exponent mapping."""
        assert laurent({1: 1, -1: 1}) == q + 1 / q

    def test_cancellation_is_structural(self) -> None:
        """Test that equal fractions compare equal after cancellation."""
        left = make_scalar({4: 1, 0: -1}, {2: 1, 0: -1})
        assert left == q**2 + 1
        assert hash(left) == hash(q**2 + 1)

    def test_make_scalar_quotient(self) -> None:
        """Test the (q^2 - q^-2)/(q + q^-1) example."""
        assert make_scalar({2: 1, -2: -1}, {1: 1, -1: 1}) == q - 1 / q


class TestArithmetic:
    """Test field operations and error paths."""

    def test_divide_by_zero(self) -> None:
        """Test that a zero divisor raises DivisionByZero."""
        with pytest.raises(DivisionByZero, match="Division by zero"):
            divide(q, 0)

    def test_divide_by_zero_is_zero_division_error(self) -> None:
        """Test that DivisionByZero is also a ZeroDivisionError."""
        with pytest.raises(ZeroDivisionError):
            make_scalar(1, {})

    def test_combine_operations(self) -> None:
        """Test the four named operations."""
        assert combine("add", q, 1) == q + 1
        assert combine("sub", q, q) == ZERO
        assert combine("mul", q, q) == q**2
        assert combine("div", q**3, q) == q**2

    def test_combine_unknown_operation(self) -> None:
        """Test that an unknown operation name is rejected."""
        with pytest.raises(ValueError, match="Unknown scalar operation 'pow'"):
            combine("pow", q, 2)

    def test_invert_q_monomial(self) -> None:
        """Test that q^2 maps to q^-2."""
        assert invert_q(q**2) == 1 / q**2

    def test_invert_q_rational(self) -> None:
        """Test q -> q^-1 on a non-Laurent fraction."""
        value = (q + 2) / (q - 1)
        assert invert_q(value) == (2 * q + 1) / (1 - q)

    def test_invert_q_is_involution(self) -> None:
        """Test that inverting twice is the identity."""
        value = (q**3 - 2 * q + 5) / (q**2 + q + 1)
        assert invert_q(invert_q(value)) == value
        assert invert_q(0) == ZERO


class TestFormatting:
    """Test the textual rendering of scalars."""

    def test_laurent_polynomial(self) -> None:
        """Test that monomial denominators print as Laurent polynomials."""
        assert format_scalar(q**2 - 1 / q**2) == "q^2 - q^-2"
        assert format_scalar(-q + 1 / q) == "-q + q^-1"

    def test_integers_and_zero(self) -> None:
        """Test constants."""
        assert format_scalar(0) == "0"
        assert format_scalar(-3) == "-3"
        assert format_scalar(ONE) == "1"

    def test_rational_coefficients(self) -> None:
        """Test fractional coefficients of a Laurent polynomial."""
        assert format_scalar(q / 2) == "1/2*q"

    def test_general_fraction(self) -> None:
        """Test that other denominators print as a quotient."""
        assert format_scalar((q**2 + 1) / (q + 1)) == "(q^2 + 1)/(q + 1)"

    def test_laurent_terms(self) -> None:
        """Test Laurent expansion and its absence."""
        terms = laurent_terms(q - 1 / q)
        assert terms == {1: 1, -1: -1}
        assert laurent_terms(1 / (q + 1)) is None

    def test_is_monomial(self) -> None:
        """Test single-term detection."""
        assert is_monomial(-q**3)
        assert is_monomial(ONE)
        assert not is_monomial(q + 1)
        assert not is_monomial(1 / (q + 1))
