"""Exact linear algebra tests."""

import pytest

from awdaha.linalg import (
    EVALUATION_POINT,
    clear_denominators,
    kernel,
    rank,
    rank_fraction_free,
    rank_modular,
    reduced_echelon,
)
from awdaha.scalars import ONE, QQ_q, q


class TestRank:
    """Test rank over Q(q)."""

    def test_full_rank_certified_modularly(self) -> None:
        """Test that a nonsingular matrix is certified by the modular rank."""
        rows = [{"a": ONE, "b": q}, {"a": q, "b": ONE}]
        assert rank(rows) == (2, "modular")

    def test_dependent_rows_fall_back(self) -> None:
        """Test that a rank deficit is confirmed by exact elimination."""
        rows = [{"a": ONE}, {"a": q}]
        assert rank(rows) == (1, "exact")

    def test_exact_method(self) -> None:
        """Test forcing exact elimination."""
        rows = [{"a": ONE, "b": q}, {"a": q, "b": ONE}]
        assert rank(rows, "exact") == (2, "exact")

    def test_zero_rows_ignored(self) -> None:
        """Test that empty rows do not count."""
        assert rank([{}, {"a": q}]) == (1, "modular")

    def test_unknown_method(self) -> None:
        """Test method validation."""
        with pytest.raises(ValueError, match="Unknown rank method 'fast'"):
            rank([], "fast")

    def test_modular_gives_up_on_vanishing_denominator(self) -> None:
        """Test that a pole at the evaluation point yields None."""
        rows = [{"a": 1 / (q - EVALUATION_POINT)}]
        assert rank_modular(rows) is None
        assert rank(rows) == (1, "exact")

    def test_fraction_free(self) -> None:
        """Test Bareiss elimination with rational entries."""
        rows = [{"a": 1 / (q + 1), "b": ONE}, {"a": ONE, "b": q + 1}]
        assert rank_fraction_free(rows) == 1


class TestKernel:
    """Test linear relations among vectors."""

    def test_single_relation(self) -> None:
        """Test that v1 = 2*v0 is found."""
        vectors = [{"a": ONE}, {"a": 2 * ONE}, {"b": ONE}]
        assert kernel(vectors) == [{0: -2 * ONE, 1: ONE}]

    def test_zero_vector(self) -> None:
        """Test that a zero vector is its own relation."""
        assert kernel([{"a": ONE}, {}]) == [{1: ONE}]

    def test_independent(self) -> None:
        """Test that independent vectors have no relations."""
        assert kernel([{"a": ONE, "b": q}, {"a": q, "b": ONE}]) == []

    def test_reduced_echelon(self) -> None:
        """Test pivots on the largest key."""
        rows = [{0: ONE, 1: ONE}, {0: ONE, 1: 2 * ONE}]
        assert reduced_echelon(rows) == [{0: ONE}, {1: ONE}]


class TestClearDenominators:
    """Test scaling rows into Z[q]."""

    def test_lcm(self) -> None:
        """Test scaling by q*(q + 1)."""
        (x,) = QQ_q.ring.gens
        row = clear_denominators({"a": 1 / q, "b": 1 / (q + 1)})
        assert row == {"a": x + 1, "b": x}
