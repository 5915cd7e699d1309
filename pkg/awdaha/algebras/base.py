"""Shared machinery for the concrete algebras."""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Callable

from ..errors import UnknownName
from ..free_algebra import Alphabet, NCPoly, Word, word_order_key
from ..parser import parse_expression, parse_word
from ..rewriting import DEFAULT_FUEL, RewriteRule, RewriteSystem
from ..scalars import ScalarLike


@dataclass(frozen=True)
class BasisShape:
    """Exponent pattern of the irreducible words.

    Attributes:
        pattern: Human-readable form, e.g. ``A^i C^j B^k ... (j in {0,1})``
        count: Number of irreducible words of exactly the given length
    """

    pattern: str
    count: Callable[[int], int]


@dataclass(frozen=True)
class DerivedElement:
    """A named element: its defining expression and its normal form."""

    name: str
    definition: NCPoly
    value: NCPoly


RuleTable = Sequence[tuple[str, str, str]]
Definitions = Sequence[tuple[str, str]]


def build_system(
    name: str, alphabet: Alphabet, table: RuleTable
) -> RewriteSystem:
    """Build a rewrite system from ``(lhs, rhs, kind)`` expression triples."""
    rules = [
        RewriteRule(
            parse_word(lhs, alphabet),
            parse_expression(rhs, alphabet),
            kind,
        )
        for lhs, rhs, kind in table
    ]
    return RewriteSystem(alphabet, rules, name)


class AlgebraSpec:
    """An algebra given by an alphabet, a confluent rewrite system and named
    derived elements.

    Args:
        name: Algebra name such as ``delta-q``
        system: The rewrite system; its alphabet is the algebra's alphabet
        shape: Basis parameterization of the irreducible words
        definitions: ``(name, expression)`` pairs for derived elements; later
            expressions may use earlier names
        inverted_from: Set on the q-inverted sibling; derived elements are then
            the sibling's definitions with q -> q^-1 applied
    """

    def __init__(
        self,
        name: str,
        system: RewriteSystem,
        shape: BasisShape,
        definitions: Definitions = (),
        inverted_from: AlgebraSpec | None = None,
    ) -> None:
        self.name = name
        self.system = system
        self.shape = shape
        self._definitions = dict(definitions)
        self._inverted_from = inverted_from
        self._derived: dict[str, DerivedElement] = {}

    def __repr__(self) -> str:
        return f"AlgebraSpec({self.name!r})"

    @property
    def alphabet(self) -> Alphabet:
        return self.system.alphabet

    @property
    def derived_names(self) -> tuple[str, ...]:
        return tuple(self._definitions)

    def letter(self, name: str) -> NCPoly:
        return NCPoly.letter(self.alphabet, name)

    def constant(self, value: ScalarLike) -> NCPoly:
        return NCPoly.constant(self.alphabet, value)

    def word(self, word: Word) -> NCPoly:
        return NCPoly.monomial(self.alphabet, word)

    def normalize(self, p: NCPoly, fuel: int = DEFAULT_FUEL) -> NCPoly:
        return self.system.normalize(p, fuel)

    def multiply(self, *factors: NCPoly, fuel: int = DEFAULT_FUEL) -> NCPoly:
        """Normal form of a product, reduced after every factor."""
        result = self.constant(1)
        for factor in factors:
            result = self.system.normalize(result.multiply(factor), fuel)
        return result

    def derived(self, name: str) -> DerivedElement:
        """Look up a named element of this algebra.

        Raises:
            UnknownName: If the algebra has no element of that name
        """
        cached = self._derived.get(name)
        if cached is not None:
            return cached
        if name not in self._definitions:
            raise UnknownName(name, self.name, self.derived_names)
        if self._inverted_from is not None:
            definition = self._inverted_from.derived(name).definition.invert_q()
            definition = definition.with_alphabet(self.alphabet)
        else:
            definition = self.parse(self._definitions[name])
        element = DerivedElement(name, definition, self.normalize(definition))
        self._derived[name] = element
        return element

    def value(self, name: str) -> NCPoly:
        """Normal form of a letter or derived element."""
        if name in self.alphabet:
            return self.letter(name)
        return self.derived(name).value

    def parse(
        self, text: str, overrides: Mapping[str, NCPoly] | None = None
    ) -> NCPoly:
        """Parse expression text; names resolve to letters, then ``overrides``,
        then derived definitions. The result is not normalized."""

        def lookup(name: str) -> NCPoly | None:
            if overrides and name in overrides:
                return overrides[name]
            if name in self._definitions:
                return self.derived(name).definition
            return None

        return parse_expression(text, self.alphabet, lookup)

    def element(self, text: str, fuel: int = DEFAULT_FUEL) -> NCPoly:
        """Parse and normalize."""
        return self.normalize(self.parse(text), fuel)

    def commutator(self, g: NCPoly, h: NCPoly, fuel: int = DEFAULT_FUEL) -> NCPoly:
        """Normal form of ``g*h - h*g``."""
        return self.normalize(g.multiply(h) - h.multiply(g), fuel)

    def is_central(self, h: NCPoly, fuel: int = DEFAULT_FUEL) -> bool:
        """True iff ``h`` commutes with every balanced generator."""
        return all(
            self.commutator(self.letter(g.name), h, fuel).is_zero()
            for g in self.alphabet
        )

    def basis_words(self, length: int) -> list[Word]:
        """Irreducible words of exactly ``length`` letters."""
        return self.system.irreducible_words(length)

    def enumerate_basis(self, max_length: int) -> list[Word]:
        """All irreducible words of length at most ``max_length``, graded order."""
        if max_length < 0:
            raise ValueError("max_length must be non-negative")
        words: list[Word] = []
        for length in range(max_length + 1):
            words.extend(self.basis_words(length))
        return sorted(words, key=word_order_key)

    @cached_property
    def q_inverted(self) -> AlgebraSpec:
        """The sibling algebra with q replaced by q^-1 in every rule."""
        if self._inverted_from is not None:
            return self._inverted_from
        name = f"{self.name}^-1"
        system = self.system.map_rules(NCPoly.invert_q, name)
        return AlgebraSpec(
            name,
            system,
            self.shape,
            tuple(self._definitions.items()),
            inverted_from=self,
        )

    def display(self, word: Word) -> str:
        return self.alphabet.display(word)


def monomial_words(letters: Iterable[int], degree: int) -> list[Word]:
    """Non-decreasing words of exactly ``degree`` letters drawn from ``letters``."""
    pool = sorted(letters)
    words: list[Word] = [()]
    for _ in range(degree):
        words = [w + (g,) for w in words for g in pool if not w or g >= w[-1]]
    return words
