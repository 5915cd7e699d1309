"""Words and noncommutative polynomials over a finite alphabet.

An ``NCPoly`` is a finitely supported mapping from words (tuples of generator
ids) to scalars of Q(q). It is the free algebra element that every rewrite
system reduces; it never stores a zero coefficient.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Any, Callable, Tuple, Union

from .errors import AlphabetMismatch, MissingImage, UnknownName
from .scalars import (
    ONE,
    QScalar,
    ScalarLike,
    divide,
    format_scalar,
    invert_q,
    is_monomial,
    to_scalar,
)

Word = Tuple[int, ...]


@dataclass(frozen=True)
class Generator:
    """A balanced generator: a small integer id and a display name."""

    id: int
    name: str


@dataclass(frozen=True)
class Alphabet:
    """An ordered generator sequence; the order is the basis order.

    Attributes:
        generators: Generators in basis order, ``generators[i].id == i``
    """

    generators: tuple[Generator, ...]
    _by_name: Mapping[str, int] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise ValueError(f"Duplicate generator names in alphabet: {names}")
        for position, generator in enumerate(self.generators):
            if generator.id != position:
                raise ValueError(
                    f"Generator {generator.name} has id {generator.id}, "
                    f"expected {position}"
                )
        object.__setattr__(
            self, "_by_name", MappingProxyType({n: i for i, n in enumerate(names)})
        )

    @classmethod
    def from_names(cls, names: Iterable[str]) -> Alphabet:
        """Build an alphabet whose ids follow the given name order."""
        return cls(tuple(Generator(i, name) for i, name in enumerate(names)))

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.generators)

    def __contains__(self, name: object) -> bool:
        return name in self._by_name

    def index(self, name: str) -> int:
        """Return the id of a generator by display name.

        Raises:
            UnknownName: If no generator has that name
        """
        try:
            return self._by_name[name]
        except KeyError:
            raise UnknownName(
                name, f"[{' '.join(self.names)}]", self.names
            ) from None

    def word(self, names: Iterable[str]) -> Word:
        """Translate a sequence of display names into a word."""
        return tuple(self.index(n) for n in names)

    def display(self, word: Word) -> str:
        """Render a word as ``*``-joined display names; the empty word is ``1``."""
        if not word:
            return "1"
        return "*".join(self.generators[i].name for i in word)


def word_order_key(word: Word) -> tuple[int, Word]:
    """Graded order: shorter words first, then lexicographic by basis order."""
    return (len(word), word)


PolyLike = Union["NCPoly", int, QScalar]


class NCPoly:
    """An element of the free algebra over an alphabet with Q(q) coefficients.

    Instances are treated as immutable values.

    Examples:
        >>> ab = Alphabet.from_names("AB")
        >>> a, b = NCPoly.letter(ab, "A"), NCPoly.letter(ab, "B")
        >>> str((a + b) * (a - b))
        'A*A - A*B + B*A - B*B'
    """

    __slots__ = ("alphabet", "_terms")

    def __init__(
        self,
        alphabet: Alphabet,
        terms: Mapping[Word, ScalarLike] | None = None,
    ) -> None:
        self.alphabet = alphabet
        cleaned: dict[Word, QScalar] = {}
        for word, coeff in (terms or {}).items():
            value = to_scalar(coeff)
            if value:
                cleaned[tuple(word)] = value
        self._terms = cleaned

    @classmethod
    def _from_clean(cls, alphabet: Alphabet, terms: dict[Word, QScalar]) -> NCPoly:
        poly = cls.__new__(cls)
        poly.alphabet = alphabet
        poly._terms = terms
        return poly

    @classmethod
    def zero(cls, alphabet: Alphabet) -> NCPoly:
        return cls._from_clean(alphabet, {})

    @classmethod
    def one(cls, alphabet: Alphabet) -> NCPoly:
        return cls._from_clean(alphabet, {(): ONE})

    @classmethod
    def constant(cls, alphabet: Alphabet, value: ScalarLike) -> NCPoly:
        return cls(alphabet, {(): value})

    @classmethod
    def monomial(
        cls, alphabet: Alphabet, word: Word, coeff: ScalarLike = 1
    ) -> NCPoly:
        return cls(alphabet, {tuple(word): coeff})

    @classmethod
    def letter(cls, alphabet: Alphabet, name: str) -> NCPoly:
        return cls._from_clean(alphabet, {(alphabet.index(name),): ONE})

    @property
    def terms(self) -> Mapping[Word, QScalar]:
        return MappingProxyType(self._terms)

    def items(self) -> Iterable[tuple[Word, QScalar]]:
        return self._terms.items()

    def sorted_items(self) -> list[tuple[Word, QScalar]]:
        """Terms in graded order by the alphabet sequence."""
        return sorted(self._terms.items(), key=lambda item: word_order_key(item[0]))

    def coefficient(self, word: Word) -> QScalar:
        return self._terms.get(tuple(word), to_scalar(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_scalar(self) -> bool:
        return all(not word for word in self._terms)

    def scalar_value(self) -> QScalar:
        """The constant term; only meaningful when ``is_scalar()``."""
        return self.coefficient(())

    def degree(self) -> int:
        return max((len(w) for w in self._terms), default=0)

    def letters(self) -> set[int]:
        return {letter for word in self._terms for letter in word}

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _coerce(self, other: PolyLike) -> NCPoly:
        if isinstance(other, NCPoly):
            if other.alphabet != self.alphabet:
                raise AlphabetMismatch(self.alphabet.names, other.alphabet.names)
            return other
        return NCPoly.constant(self.alphabet, other)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, NCPoly):
            return self.alphabet == other.alphabet and self._terms == other._terms
        if isinstance(other, int) or hasattr(other, "numer"):
            constant = NCPoly.constant(self.alphabet, other)  # type: ignore[arg-type]
            return self._terms == constant._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.alphabet.names, frozenset(self._terms.items())))

    def __add__(self, other: PolyLike) -> NCPoly:
        other = self._coerce(other)
        result = dict(self._terms)
        for word, coeff in other._terms.items():
            value = result.get(word)
            value = coeff if value is None else value + coeff
            if value:
                result[word] = value
            else:
                result.pop(word, None)
        return NCPoly._from_clean(self.alphabet, result)

    __radd__ = __add__

    def __neg__(self) -> NCPoly:
        return NCPoly._from_clean(
            self.alphabet, {w: -c for w, c in self._terms.items()}
        )

    def __sub__(self, other: PolyLike) -> NCPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other: PolyLike) -> NCPoly:
        return self._coerce(other) - self

    def scale(self, factor: ScalarLike) -> NCPoly:
        factor = to_scalar(factor)
        if not factor:
            return NCPoly.zero(self.alphabet)
        return NCPoly._from_clean(
            self.alphabet, {w: c * factor for w, c in self._terms.items()}
        )

    def multiply(self, other: NCPoly) -> NCPoly:
        """Bilinear extension of word concatenation.

        Raises:
            AlphabetMismatch: If the operands live over different alphabets
        """
        other = self._coerce(other)
        result: dict[Word, QScalar] = {}
        for left, a in self._terms.items():
            for right, b in other._terms.items():
                word = left + right
                value = result.get(word)
                value = a * b if value is None else value + a * b
                if value:
                    result[word] = value
                else:
                    result.pop(word, None)
        return NCPoly._from_clean(self.alphabet, result)

    def __mul__(self, other: PolyLike) -> NCPoly:
        if isinstance(other, NCPoly):
            return self.multiply(other)
        return self.scale(other)

    def __rmul__(self, other: PolyLike) -> NCPoly:
        if isinstance(other, NCPoly):
            return other.multiply(self)
        return self.scale(other)

    def __truediv__(self, other: ScalarLike) -> NCPoly:
        return self.scale(divide(1, other))

    def __pow__(self, exponent: int) -> NCPoly:
        if exponent < 0:
            raise ValueError("NCPoly powers must be non-negative")
        result = NCPoly.one(self.alphabet)
        for _ in range(exponent):
            result = result.multiply(self)
        return result

    def reverse(self) -> NCPoly:
        """Reverse the letters of every word; coefficients are unchanged."""
        return NCPoly._from_clean(
            self.alphabet, {w[::-1]: c for w, c in self._terms.items()}
        )

    def map_coefficients(self, function: Callable[[QScalar], QScalar]) -> NCPoly:
        return NCPoly(self.alphabet, {w: function(c) for w, c in self._terms.items()})

    def invert_q(self) -> NCPoly:
        """Apply q -> q^-1 to every coefficient."""
        return self.map_coefficients(invert_q)

    def with_alphabet(self, alphabet: Alphabet) -> NCPoly:
        """Reinterpret the same words over an alphabet with identical names."""
        if alphabet.names != self.alphabet.names:
            raise AlphabetMismatch(self.alphabet.names, alphabet.names)
        return NCPoly._from_clean(alphabet, dict(self._terms))

    def substitute(
        self,
        images: Mapping[str, NCPoly],
        target: Alphabet,
        twist: bool = False,
        morphism: str = "substitute",
    ) -> NCPoly:
        """Replace every letter by its image and expand.

        Args:
            images: Mapping generator name -> element over ``target``
            target: Alphabet of the result
            twist: Apply q -> q^-1 to this element's coefficients first
            morphism: Name reported in ``MissingImage``

        Returns:
            The expanded (not normalized) image

        Raises:
            MissingImage: If a letter in use has no image
        """
        result = NCPoly.zero(target)
        letter_images: dict[int, NCPoly] = {}
        for letter in self.letters():
            name = self.alphabet.generators[letter].name
            if name not in images:
                raise MissingImage(name, morphism)
            image = images[name]
            if image.alphabet != target:
                raise AlphabetMismatch(target.names, image.alphabet.names)
            letter_images[letter] = image
        for word, coeff in self._terms.items():
            term = NCPoly.constant(target, invert_q(coeff) if twist else coeff)
            for letter in word:
                term = term.multiply(letter_images[letter])
            result = result + term
        return result

    def to_str(self) -> str:
        return format_terms(
            (self.alphabet.display(word) if word else "", coeff)
            for word, coeff in self.sorted_items()
        )

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"NCPoly({self.to_str()!r})"

    def to_json(self) -> list[dict[str, Any]]:
        """Machine-readable terms in display order."""
        return [
            {
                "word": [self.alphabet.generators[i].name for i in word],
                "coeff": format_scalar(coeff),
            }
            for word, coeff in self.sorted_items()
        ]


def format_terms(terms: Iterable[tuple[str, QScalar]]) -> str:
    """Join ``(body, coefficient)`` pairs in the canonical display syntax.

    An empty body is the constant term. Coefficients that are not a single
    Laurent monomial are parenthesized.
    """
    pieces: list[str] = []
    for body, coeff in terms:
        text = format_scalar(coeff)
        negative = False
        if is_monomial(coeff) and text.startswith("-"):
            negative, text = True, text[1:]
        if not body:
            term = text if is_monomial(coeff) else f"({text})"
        elif text == "1":
            term = body
        elif is_monomial(coeff):
            term = f"{text}*{body}"
        else:
            term = f"({text})*{body}"
        pieces.append(("- " if negative else "+ ") + term)
    if not pieces:
        return "0"
    joined = " ".join(pieces)
    return joined[2:] if joined.startswith("+ ") else "-" + joined[2:]
