"""Rewriting engine tests."""

import pytest

from awdaha.algebras import delta_q, hhat_q
from awdaha.errors import NonTermination
from awdaha.free_algebra import Alphabet, NCPoly
from awdaha.algebras.base import build_system
from awdaha.algebras.hhat import HHAT_RULES
from awdaha.rewriting import CACHE_LIMIT, RewriteRule, RewriteSystem
from awdaha.scalars import q
from awdaha.suites import HHAT_RESOLUTIONS


def _commuting_system() -> tuple[RewriteSystem, NCPoly, NCPoly]:
    alphabet = Alphabet.from_names(["A", "B"])
    a, b = NCPoly.letter(alphabet, "A"), NCPoly.letter(alphabet, "B")
    return RewriteSystem(alphabet, [RewriteRule((1, 0), a * b)], "ab"), a, b


class TestRewriteRule:
    """Test rule validation."""

    def test_lhs_length(self) -> None:
        """Test that left-hand sides must have two letters."""
        alphabet = Alphabet.from_names(["A"])
        with pytest.raises(ValueError, match="length 2"):
            RewriteRule((0,), NCPoly.one(alphabet))

    def test_kind(self) -> None:
        """Test that the rule kind is validated."""
        alphabet = Alphabet.from_names(["A"])
        with pytest.raises(ValueError, match="Unknown rule kind 'fourth'"):
            RewriteRule((0, 0), NCPoly.one(alphabet), "fourth")

    def test_duplicate_lhs(self) -> None:
        """Test that two rules may not share a left-hand side."""
        system, a, b = _commuting_system()
        rules = [*system.rules, RewriteRule((1, 0), b * a)]
        with pytest.raises(ValueError, match="Duplicate rule for B\\*A"):
            RewriteSystem(system.alphabet, rules)


class TestNormalize:
    """Test reduction to normal form."""

    def test_sorting_system(self) -> None:
        """Test that B*B*A sorts to A*B*B."""
        system, a, b = _commuting_system()
        assert str(system.normalize(b * b * a)) == "A*B*B"

    def test_linear(self) -> None:
        """Test that normalization is linear in the coefficients."""
        system, a, b = _commuting_system()
        result = system.normalize(b * a * q + a * b * 2)
        assert result == a * b * (q + 2)

    def test_fuel_exhausted(self) -> None:
        """Test that a small fuel budget raises NonTermination."""
        system, a, b = _commuting_system()
        system.clear_cache()
        with pytest.raises(NonTermination, match="did not terminate within fuel 2"):
            system.normalize(b * b * b * a, fuel=2)

    def test_cycle_detected(self) -> None:
        """Test that A*B -> B*A -> A*B is reported as a cycle."""
        alphabet = Alphabet.from_names(["A", "B"])
        a, b = NCPoly.letter(alphabet, "A"), NCPoly.letter(alphabet, "B")
        system = RewriteSystem(
            alphabet, [RewriteRule((0, 1), b * a), RewriteRule((1, 0), a * b)]
        )
        with pytest.raises(NonTermination) as excinfo:
            system.normalize(b * a)
        assert excinfo.value.cycle is True

    def test_long_word(self) -> None:
        """Test that a thousand rule applications in a chain succeed."""
        delta = delta_q()
        assert delta.element("Omega^1000*A") == delta.parse("A*Omega^1000")

    def test_long_word_fuel(self) -> None:
        """Test that fuel, not stack depth, bounds long reductions."""
        delta = delta_q()
        delta.system.clear_cache()
        with pytest.raises(NonTermination) as excinfo:
            delta.normalize(delta.parse("Omega^1500*A"), fuel=1200)
        assert excinfo.value.cycle is False
        assert excinfo.value.spent == 1200

    def test_message_is_truncated(self) -> None:
        """Test that a long word is cut short in the error message."""
        system, a, b = _commuting_system()
        system.clear_cache()
        with pytest.raises(NonTermination) as excinfo:
            system.normalize(b**300 * a, fuel=10)
        assert len(excinfo.value.word) > 500
        assert len(str(excinfo.value)) < 300
        assert "chars]" in str(excinfo.value)

    def test_delta_ba(self) -> None:
        """Test B*A in Delta_q."""
        delta = delta_q()
        expected = delta.parse(
            "q^2*A*B + q*(q^2 - q^-2)*C - q*(q - q^-1)*gamma"
        )
        assert delta.element("B*A") == expected

    def test_hhat_t0_x(self) -> None:
        """Test t0*X in Hhat_q."""
        hhat = hhat_q()
        assert hhat.element("t0*X") == hhat.parse("X^-1*t0 + X*T0 - T3")

    def test_normal_forms_are_irreducible(self) -> None:
        """Test that every word of a normal form is irreducible."""
        hhat = hhat_q()
        result = hhat.element("T3*X*Y*t0*Y^-1*t0")
        assert all(hhat.system.is_irreducible(word) for word, _ in result.items())

    def test_normal_form_is_idempotent(self) -> None:
        """Test that normalizing a normal form changes nothing."""
        delta = delta_q()
        once = delta.element("C*C*A*B*A")
        assert delta.normalize(once) == once

    def test_inverse_letters_cancel(self) -> None:
        """Test third-kind rules."""
        hhat = hhat_q()
        assert hhat.element("X*X^-1*Y^-1*Y") == 1


class TestCache:
    """Test the bounded reduction cache."""

    def test_limit(self) -> None:
        """Test that the cache never holds more than its limit."""
        alphabet = Alphabet.from_names(["A", "B"])
        a, b = NCPoly.letter(alphabet, "A"), NCPoly.letter(alphabet, "B")
        system = RewriteSystem(
            alphabet, [RewriteRule((1, 0), a * b)], cache_limit=2
        )
        assert str(system.normalize(b**5 * a)) == "A*B*B*B*B*B"
        assert system.cached_reductions == 2
        assert str(system.normalize(b**3 * a * a)) == "A*A*B*B*B"
        assert system.cached_reductions == 2

    def test_disabled(self) -> None:
        """Test that a zero limit keeps nothing."""
        alphabet = Alphabet.from_names(["A", "B"])
        a, b = NCPoly.letter(alphabet, "A"), NCPoly.letter(alphabet, "B")
        system = RewriteSystem(
            alphabet, [RewriteRule((1, 0), a * b)], cache_limit=0
        )
        assert str(system.normalize(b * b * a)) == "A*B*B"
        assert system.cached_reductions == 0

    def test_negative_limit(self) -> None:
        """Test that the limit must be non-negative."""
        with pytest.raises(ValueError, match="cache_limit"):
            RewriteSystem(Alphabet.from_names(["A"]), [], cache_limit=-1)

    def test_shared_system_is_bounded(self) -> None:
        """Test the default limit on a process-wide algebra."""
        hhat = hhat_q()
        hhat.element("(t0*X*Y)^3")
        assert hhat.system.cache_limit == CACHE_LIMIT
        assert hhat.system.cached_reductions <= CACHE_LIMIT

    def test_map_rules_keeps_limit(self) -> None:
        """Test that derived systems share the limit."""
        system, a, b = _commuting_system()
        assert system.map_rules(lambda rhs: rhs).cache_limit == CACHE_LIMIT


class TestConfluence:
    """Test overlap ambiguities."""

    def test_delta_overlaps(self) -> None:
        """Test that the three nontrivial Delta_q overlaps are enumerated."""
        delta = delta_q()
        shown = {delta.display(word) for word in delta.system.overlaps()}
        assert {"B*C*A", "B*C*C", "C*C*A"} <= shown
        assert "C*C*C" in shown
        assert len(shown) == 42

    def test_hhat_overlaps(self) -> None:
        """Test that the twenty nontrivial Hhat_q overlaps are enumerated."""
        hhat = hhat_q()
        shown = {hhat.display(word) for word in hhat.system.overlaps()}
        assert set(HHAT_RESOLUTIONS) <= shown

    def test_no_rules_no_overlaps(self) -> None:
        """Test the empty rule set."""
        system = RewriteSystem(Alphabet.from_names(["A"]), [])
        assert system.overlaps() == []
        assert system.check_confluence().resolved

    def test_delta_confluent(self) -> None:
        """Test that every Delta_q overlap resolves."""
        found = delta_q().system.check_confluence()
        assert found.resolved
        assert len(found) == 42
        assert found.unresolved == []

    @pytest.mark.slow
    def test_hhat_confluent(self) -> None:
        """Test that every Hhat_q overlap resolves."""
        found = hhat_q().system.check_confluence()
        assert found.resolved

    @pytest.mark.slow
    def test_mutated_hhat_not_confluent(self) -> None:
        """Test that q^3 in place of q^2 in the X*Y rule breaks confluence."""
        hhat = hhat_q()
        table = [
            (lhs, rhs.replace("q^2*Y*X", "q^3*Y*X") if lhs == "X*Y" else rhs, kind)
            for lhs, rhs, kind in HHAT_RULES
        ]
        assert table != list(HHAT_RULES)
        mutated = build_system("hhat-mutated", hhat.alphabet, table)
        found = mutated.check_confluence()
        assert not found.resolved
        assert len(found.unresolved) == 7
        shown = {hhat.display(entry.word) for entry in found.unresolved}
        assert "X*Y*Y^-1" in shown

    def test_unresolved_overlap(self) -> None:
        """Test that A*B -> C, B*C -> A leaves A*B*C unresolved."""
        alphabet = Alphabet.from_names(["A", "B", "C"])
        a, c = NCPoly.letter(alphabet, "A"), NCPoly.letter(alphabet, "C")
        system = RewriteSystem(
            alphabet, [RewriteRule((0, 1), c), RewriteRule((1, 2), a)]
        )
        found = system.check_confluence()
        assert not found.resolved
        (entry,) = found.unresolved
        assert entry.left == c * c
        assert entry.right == a * a
        assert entry.to_json()["residual"] == "-A*A + C*C"

    def test_resolve_rejects_non_overlap(self) -> None:
        """Test that resolve needs an overlap word."""
        delta = delta_q()
        with pytest.raises(ValueError, match="is not an overlap"):
            delta.system.resolve(delta.alphabet.word(["A", "B", "C"]))

    def test_resolution_json(self) -> None:
        """Test the machine-readable resolution."""
        delta = delta_q()
        entry = delta.system.resolve(delta.alphabet.word(["B", "C", "A"]))
        data = entry.to_json()
        assert data["word"] == "B*C*A"
        assert data["resolved"] is True
        assert data["residual"] is None


class TestIrreducibleWords:
    """Test basis enumeration."""

    def test_lengths(self) -> None:
        """Test counts against the basis parameterizations."""
        for algebra in (delta_q(), hhat_q()):
            for length in range(4):
                words = algebra.basis_words(length)
                assert len(words) == algebra.shape.count(length)

    def test_length_two(self) -> None:
        """Test the length-two counts."""
        assert len(delta_q().basis_words(2)) == 27
        assert len(hhat_q().basis_words(2)) == 42

    def test_negative_length(self) -> None:
        """Test that negative lengths are rejected."""
        with pytest.raises(ValueError, match="non-negative"):
            delta_q().system.irreducible_words(-1)

    def test_map_rules(self) -> None:
        """Test that map_rules transforms every right-hand side."""
        delta = delta_q()
        inverted = delta.system.map_rules(NCPoly.invert_q, "inverted")
        assert inverted.name == "inverted"
        assert len(inverted) == len(delta.system)
        rule = inverted.rule(delta.alphabet.word(["B", "A"]))
        assert rule is not None
        assert rule.rhs.coefficient(delta.alphabet.word(["A", "B"])) == 1 / q**2
