"""Exact arithmetic in the rational function field Q(q).

Scalars are sympy ``FracElement`` values of the field ``Q(q)`` built over
``ZZ``. sympy keeps every fraction cancelled with a positive leading
denominator coefficient, so structural equality is mathematical equality and
scalars can be used as dictionary keys.
"""

from __future__ import annotations

from collections.abc import Mapping
from fractions import Fraction
from typing import Callable, Union

from sympy import ZZ
from sympy.polys.fields import FracElement, field
from sympy.polys.rings import PolyElement

from .errors import DivisionByZero

QQ_q, q = field("q", ZZ)
QScalar = FracElement
ScalarLike = Union[int, FracElement]

ZERO: QScalar = QQ_q.zero
ONE: QScalar = QQ_q.one


def to_scalar(value: ScalarLike) -> QScalar:
    """Coerce an integer or field element into Q(q).

    Args:
        value: An ``int`` or an element of ``QQ_q``

    Returns:
        The value as a canonical element of Q(q)
    """
    if isinstance(value, FracElement) and value.field == QQ_q:
        return value
    return QQ_q(value)


def laurent(terms: Mapping[int, int]) -> QScalar:
    """Build a scalar from a finite Laurent expression in q.

    Args:
        terms: Mapping from exponent to integer coefficient

    Returns:
        The canonical fraction; negative powers are cleared into the
        denominator.

    Examples:
        >>> format_scalar(laurent({1: 1, -1: 1}))
        'q + q^-1'
    """
    total = ZERO
    for exponent, coeff in terms.items():
        if coeff:
            total += coeff * q**exponent
    return total


def make_scalar(
    numerator: ScalarLike | Mapping[int, int],
    denominator: ScalarLike | Mapping[int, int] | None = None,
) -> QScalar:
    """Build a canonical scalar from a Laurent expression or a quotient of two.

    Args:
        numerator: Integer, field element or Laurent mapping
        denominator: Optional divisor, same accepted forms

    Returns:
        Canonical element of Q(q)

    Raises:
        DivisionByZero: If the denominator is zero

    Examples:
        >>> make_scalar({2: 1, -2: -1}, {1: 1, -1: 1}) == q - 1 / q
        True
    """
    num = laurent(numerator) if isinstance(numerator, Mapping) else to_scalar(numerator)
    if denominator is None:
        return num
    den = (
        laurent(denominator)
        if isinstance(denominator, Mapping)
        else to_scalar(denominator)
    )
    return divide(num, den)


def divide(a: ScalarLike, b: ScalarLike) -> QScalar:
    """Divide two scalars, raising ``DivisionByZero`` on a zero divisor."""
    a, b = to_scalar(a), to_scalar(b)
    if not b:
        raise DivisionByZero(format_scalar(a))
    return a / b


_OPERATIONS: dict[str, Callable[[QScalar, QScalar], QScalar]] = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": divide,
}


def combine(op: str, a: ScalarLike, b: ScalarLike) -> QScalar:
    """Apply one of the field operations ``add``, ``sub``, ``mul``, ``div``.

    Args:
        op: Operation name
        a: Left operand
        b: Right operand

    Returns:
        The canonical result

    Raises:
        DivisionByZero: For ``div`` with a zero right operand
        ValueError: For an unknown operation name
    """
    try:
        operation = _OPERATIONS[op]
    except KeyError:
        raise ValueError(
            f"Unknown scalar operation '{op}'; expected one of {sorted(_OPERATIONS)}"
        ) from None
    return operation(to_scalar(a), to_scalar(b))


def _reversed_poly(poly: PolyElement) -> tuple[PolyElement, int]:
    """Return ``(r, d)`` such that ``poly(1/q) == r(q) / q**d``."""
    d = poly.degree()
    reversed_terms = {(d - monom[0],): coeff for monom, coeff in poly.terms()}
    return poly.ring.from_dict(reversed_terms), d


def invert_q(a: ScalarLike) -> QScalar:
    """Substitute q -> q^-1 and renormalize.

    The map is a field automorphism of Q(q) and an involution.

    Examples:
        >>> format_scalar(invert_q(q**2))
        'q^-2'
    """
    a = to_scalar(a)
    if not a:
        return ZERO
    num, num_degree = _reversed_poly(a.numer)
    den, den_degree = _reversed_poly(a.denom)
    return QQ_q(num) * q ** (den_degree - num_degree) / QQ_q(den)


def laurent_terms(a: ScalarLike) -> dict[int, Fraction] | None:
    """Expand a scalar as a Laurent polynomial when its denominator is a monomial.

    Returns:
        Mapping exponent -> rational coefficient, or None when the denominator
        has more than one term.
    """
    a = to_scalar(a)
    den_terms = a.denom.terms()
    if len(den_terms) != 1:
        return None
    (den_monom, den_coeff), = den_terms
    shift = den_monom[0]
    return {
        monom[0] - shift: Fraction(int(coeff), int(den_coeff))
        for monom, coeff in a.numer.terms()
    }


def _format_number(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _format_laurent(terms: Mapping[int, Fraction]) -> str:
    pieces: list[str] = []
    for exponent in sorted(terms, reverse=True):
        coeff = terms[exponent]
        sign = "-" if coeff < 0 else "+"
        magnitude = abs(coeff)
        if exponent == 0:
            body = _format_number(magnitude)
        else:
            power = "q" if exponent == 1 else f"q^{exponent}"
            body = power if magnitude == 1 else f"{_format_number(magnitude)}*{power}"
        pieces.append(f"{sign} {body}")
    text = " ".join(pieces)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def format_scalar(a: ScalarLike) -> str:
    """Render a scalar in the textual scalar grammar.

    Scalars with a monomial denominator print as Laurent polynomials
    (``q^2 - q^-2``); others print as ``(numerator)/(denominator)``.
    """
    a = to_scalar(a)
    if not a:
        return "0"
    terms = laurent_terms(a)
    if terms is not None:
        return _format_laurent(terms)
    numer = {m[0]: Fraction(int(c)) for m, c in a.numer.terms()}
    denom = {m[0]: Fraction(int(c)) for m, c in a.denom.terms()}
    return f"({_format_laurent(numer)})/({_format_laurent(denom)})"


def is_monomial(a: ScalarLike) -> bool:
    """True when the scalar is a single signed Laurent monomial c*q^e."""
    terms = laurent_terms(a)
    return terms is not None and len(terms) == 1
