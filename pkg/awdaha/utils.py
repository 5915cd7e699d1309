"""Utility functions shared by the engine, the suites and the CLI."""

from __future__ import annotations

from typing import TYPE_CHECKING, Union

from .free_algebra import NCPoly
from .scalars import QScalar, to_scalar

if TYPE_CHECKING:
    from .algebras.base import AlgebraSpec
    from .algebras.tbasis import TElement

ElementLike = Union[NCPoly, str, int, QScalar]


def coerce_element(value: ElementLike, algebra: AlgebraSpec) -> NCPoly:
    """Coerce expression text, a scalar or an element into an element of
    ``algebra``.

    Strings are parsed (not normalized), scalars become constants and
    elements are checked against the algebra's alphabet.

    Args:
        value: Expression text, ``int``, field element or NCPoly
        algebra: The algebra the result belongs to

    Returns:
        An NCPoly over ``algebra.alphabet``

    Examples:
        >>> from awdaha.algebras import delta_q
        >>> str(coerce_element("B*A", delta_q()))
        'B*A'
    """
    if isinstance(value, NCPoly):
        if value.alphabet == algebra.alphabet:
            return value
        return value.with_alphabet(algebra.alphabet)
    if isinstance(value, str):
        return algebra.parse(value)
    return algebra.constant(to_scalar(value))


def summarize_element(element: NCPoly | TElement, max_length: int = 400) -> str:
    """Create a brief string summary of an element for reports and logs.

    Args:
        element: An NCPoly or TElement
        max_length: Maximum length of the summary string

    Returns:
        The display form, truncated with a term count when too long

    Examples:
        >>> from awdaha.algebras import delta_q
        >>> summarize_element(delta_q().letter("A"), max_length=10)
        'A'
    """
    text = str(element)
    if len(text) <= max_length:
        return text
    suffix = f"... [{len(element)} terms]"
    return text[: max(0, max_length - len(suffix))] + suffix
