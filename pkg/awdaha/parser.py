"""Lark grammar for expressions, words and rewrite-rule lines.

Expressions::

    q^2*A*B - (q - q^-1) B A      # juxtaposition multiplies
    X^-2 + t0^-1/(q + 1)          # division only by scalars

Identifiers resolve to alphabet letters first, then ``q``, then to named
elements supplied by a lookup callable. ``name^-n`` uses the letter
``name^-1`` or a named inverse when one exists; any other negative power of a
non-scalar is an error. Error offsets are byte offsets into the UTF-8 text.
"""

from __future__ import annotations

from collections.abc import Callable
from functools import lru_cache
from typing import Optional

from lark import Lark, Token, v_args
from lark.exceptions import (
    UnexpectedCharacters,
    UnexpectedInput,
    UnexpectedToken,
    VisitError,
)
from lark.tree import Meta
from lark.visitors import Transformer_NonRecursive

from .errors import ExpressionSyntaxError, UnknownName
from .free_algebra import Alphabet, NCPoly, Word
from .scalars import divide, q

Lookup = Callable[[str], Optional[NCPoly]]

GRAMMAR = r"""
?expression: sum

?sum: product
    | sum "+" product -> add
    | sum "-" product -> sub

?product: signed
    | product "*" signed -> mul
    | product SLASH signed -> div
    | product power -> mul

?signed: power
    | "+" signed
    | "-" signed -> neg

?power: atom
    | NAME "^" exponent -> name_power
    | number "^" exponent -> raised
    | group "^" exponent -> raised

?atom: number
    | NAME -> name
    | group

?group: "(" sum ")"
number: INT

exponent: INT
    | "+" INT
    | "-" INT -> negative_exponent

word: letter ("*" letter)*
    | INT -> unit_word
letter: NAME
    | NAME "^" "-" INT -> inverse_letter

rewrite_rule: word _ARROW sum kind?
kind: ";" "kind" "=" RULE_KIND

_ARROW: "->"
RULE_KIND: "first" | "second" | "third"
SLASH: "/"
INT: /[0-9]+/
NAME: /[A-Za-z_][A-Za-z0-9_]*'?/
WS: /[ \t\f\r\n]+/
%ignore WS
"""

_KIND_TERMINALS = frozenset({"KIND", "EQUAL", "RULE_KIND", "SEMICOLON"})
_EXPONENT_TERMINALS = frozenset({"INT", "PLUS", "MINUS"})


@lru_cache(maxsize=None)
def grammar_parser() -> Lark:
    """The LALR parser for every start symbol of ``GRAMMAR``."""
    return Lark(
        GRAMMAR,
        parser="lalr",
        start=["expression", "word", "rewrite_rule"],
        propagate_positions=True,
    )


def byte_offset(text: str, position: int) -> int:
    return len(text[:position].encode())


@v_args(inline=True)
class _ElementBuilder(Transformer_NonRecursive):
    """Build free algebra elements, words and rule triples from parse trees."""

    def __init__(
        self, text: str, alphabet: Alphabet, lookup: Lookup | None
    ) -> None:
        super().__init__()
        self.text = text
        self.alphabet = alphabet
        self.lookup = lookup

    def add(self, left: NCPoly, right: NCPoly) -> NCPoly:
        return left + right

    def sub(self, left: NCPoly, right: NCPoly) -> NCPoly:
        return left - right

    def mul(self, left: NCPoly, right: NCPoly) -> NCPoly:
        return left * right

    def neg(self, operand: NCPoly) -> NCPoly:
        return -operand

    def div(self, left: NCPoly, slash: Token, right: NCPoly) -> NCPoly:
        if not right.is_scalar():
            raise self._error("division by a non-scalar", slash.start_pos)
        if right.is_zero():
            raise self._error("division by zero", slash.start_pos)
        return left.scale(divide(1, right.scalar_value()))

    def number(self, token: Token) -> NCPoly:
        return NCPoly.constant(self.alphabet, int(token))

    def name(self, token: Token) -> NCPoly:
        return self._resolve(str(token))

    def exponent(self, token: Token) -> int:
        return int(token)

    def negative_exponent(self, token: Token) -> int:
        return -int(token)

    def name_power(self, token: Token, exponent: int) -> NCPoly:
        base = self._resolve(str(token))
        if exponent >= 0:
            return base**exponent
        if base.is_scalar():
            return self._invert_scalar(base, token.start_pos) ** (-exponent)
        inverse_name = f"{token}^-1"
        if inverse_name in self.alphabet:
            return NCPoly.letter(self.alphabet, inverse_name) ** (-exponent)
        if self.lookup is not None:
            found = self.lookup(inverse_name)
            if found is not None:
                return found ** (-exponent)
        raise self._error(
            "negative power of a non-invertible element", token.start_pos
        )

    @v_args(inline=True, meta=True)
    def raised(self, meta: Meta, base: NCPoly, exponent: int) -> NCPoly:
        if exponent >= 0:
            return base**exponent
        start = meta.start_pos
        if not base.is_scalar():
            raise self._error("negative power of a non-invertible element", start)
        return self._invert_scalar(base, start) ** (-exponent)

    def letter(self, token: Token) -> int:
        return self.alphabet.index(str(token))

    def inverse_letter(self, token: Token, power: Token) -> int:
        return self.alphabet.index(f"{token}^-{power}")

    def word(self, *letters: int) -> Word:
        return tuple(letters)

    def unit_word(self, token: Token) -> Word:
        if str(token) != "1":
            raise self._error("a word is letters joined by '*' or 1", token.start_pos)
        return ()

    def kind(self, token: Token) -> str:
        return str(token)

    def rewrite_rule(
        self, lhs: Word, rhs: NCPoly, kind: str = "first"
    ) -> tuple[Word, NCPoly, str]:
        return lhs, rhs, kind

    def _resolve(self, name: str) -> NCPoly:
        if name in self.alphabet:
            return NCPoly.letter(self.alphabet, name)
        if name == "q":
            return NCPoly.constant(self.alphabet, q)
        if self.lookup is not None:
            found = self.lookup(name)
            if found is not None:
                return found
        raise UnknownName(name, f"[{' '.join(self.alphabet.names)}]")

    def _invert_scalar(self, base: NCPoly, position: int) -> NCPoly:
        if base.is_zero():
            raise self._error("negative power of zero", position)
        return NCPoly.constant(self.alphabet, divide(1, base.scalar_value()))

    def _error(self, reason: str, position: int) -> ExpressionSyntaxError:
        return ExpressionSyntaxError(
            self.text, byte_offset(self.text, position), reason
        )


def _syntax_error(text: str, exc: UnexpectedInput) -> ExpressionSyntaxError:
    if isinstance(exc, UnexpectedCharacters):
        return ExpressionSyntaxError(
            text,
            byte_offset(text, exc.pos_in_stream),
            f"unexpected character {exc.char!r}",
        )
    position = len(text)
    reason = "unexpected end of expression"
    if isinstance(exc, UnexpectedToken):
        token = exc.token
        expected = set(exc.expected) - {"WS"}
        if token.type != "$END":
            position = token.start_pos
            reason = f"unexpected token {token.value!r}"
        if "RPAR" in expected:
            reason = "expected ')'"
        elif "_ARROW" in expected:
            reason = "expected '->'"
        elif expected and expected <= _EXPONENT_TERMINALS:
            reason = "expected an integer exponent"
        elif expected and expected <= _KIND_TERMINALS:
            reason = "expected '; kind=first|second|third'"
    return ExpressionSyntaxError(text, byte_offset(text, position), reason)


def _parse(text: str, start: str, builder: _ElementBuilder) -> object:
    try:
        tree = grammar_parser().parse(text, start=start)
    except UnexpectedInput as exc:
        raise _syntax_error(text, exc) from None
    try:
        return builder.transform(tree)
    except VisitError as exc:
        raise exc.orig_exc from None


def parse_expression(
    text: str, alphabet: Alphabet, lookup: Lookup | None = None
) -> NCPoly:
    """Parse expression text into an element of the free algebra.

    The result is not normalized.

    Args:
        text: Source text in the expression grammar
        alphabet: Alphabet of the result
        lookup: Resolves names that are not letters; returns None when unknown

    Returns:
        The parsed element

    Raises:
        ExpressionSyntaxError: On malformed input, with the byte offset
        UnknownName: On an identifier that is neither a letter nor known

    Examples:
        >>> ab = Alphabet.from_names("AB")
        >>> str(parse_expression("q^2*A*B - (q - q^-1) B A", ab))
        'q^2*A*B + (-q + q^-1)*B*A'
    """
    if not text.strip():
        offset = byte_offset(text, len(text))
        raise ExpressionSyntaxError(text, offset, "empty expression")
    result = _parse(text, "expression", _ElementBuilder(text, alphabet, lookup))
    assert isinstance(result, NCPoly)
    return result


def parse_word(text: str, alphabet: Alphabet) -> Word:
    """Parse a ``*``-joined word of display names such as ``t0*X^-1``."""
    result = _parse(text, "word", _ElementBuilder(text, alphabet, None))
    assert isinstance(result, tuple)
    return result


def parse_rule(text: str, alphabet: Alphabet) -> tuple[Word, NCPoly, str]:
    """Parse ``lhs -> rhs ; kind=k``; the kind defaults to ``first``.

    Raises:
        ExpressionSyntaxError: On malformed input
        UnknownName: On a name outside ``alphabet``
    """
    result = _parse(text, "rewrite_rule", _ElementBuilder(text, alphabet, None))
    assert isinstance(result, tuple)
    return result
