"""Folding Laurent polynomials in X or Y onto polynomials in B or A.

Every element of the subalgebra generated by Y^(+-1) is uniquely f(A) + Y g(A)
with A = Y + Y^-1, and likewise for X with B = X + X^-1. Powers are folded by
the recurrence Y^(n+1) = A Y^n - Y^(n-1).
"""

from __future__ import annotations

from functools import lru_cache

from sympy import ZZ
from sympy.polys.rings import PolyElement, ring

from ..errors import AxisError
from ..free_algebra import NCPoly
from ..scalars import QScalar, to_scalar
from .base import AlgebraSpec

AxisPoly = dict[int, QScalar]

# axis letter -> (inverse letter, folded name)
AXES = {"Y": ("Y^-1", "A"), "X": ("X^-1", "B")}

_FOLD_RING, _a = ring("a", ZZ)


@lru_cache(maxsize=None)
def _power(n: int) -> tuple[PolyElement, PolyElement]:
    if n == 0:
        return _FOLD_RING.one, _FOLD_RING.zero
    if n > 0:
        f, g = _power(n - 1)
        return -g, f + _a * g
    f, g = _power(n + 1)
    return _a * f + g, -f


def axis_power(n: int) -> tuple[dict[int, int], dict[int, int]]:
    """Integer coefficients of ``(f, g)`` with Y^n = f(A) + Y g(A).

    Examples:
        >>> axis_power(-2)
        ({0: -1, 2: 1}, {1: -1})
    """
    return tuple(  # type: ignore[return-value]
        {monom[0]: int(c) for monom, c in sorted(part.terms())} for part in _power(n)
    )


def axis_exponent(axis: str, p: NCPoly, word: tuple[int, ...]) -> int:
    """Net exponent of an axis word; raises AxisError off the axis."""
    if axis not in AXES:
        raise ValueError(f"Unknown axis '{axis}'; expected X or Y")
    inverse = AXES[axis][0]
    exponent = 0
    for letter in word:
        name = p.alphabet.generators[letter].name
        if name == axis:
            exponent += 1
        elif name == inverse:
            exponent -= 1
        else:
            raise AxisError(axis, p.alphabet.display(word))
    return exponent


def fold_laurent(axis: str, p: NCPoly) -> tuple[AxisPoly, AxisPoly]:
    """Split a Laurent polynomial in one axis letter into even and odd parts.

    Args:
        axis: ``"Y"`` (folded onto A) or ``"X"`` (folded onto B)
        p: Element supported on words in the axis letter and its inverse

    Returns:
        ``(f, g)`` as mappings power -> coefficient with p = f(A) + Y g(A)

    Raises:
        AxisError: If a word involves another letter
    """
    even: AxisPoly = {}
    odd: AxisPoly = {}
    for word, coeff in p.items():
        f, g = _power(axis_exponent(axis, p, word))
        for target, part in ((even, f), (odd, g)):
            for (power,), c in part.terms():
                value = target.get(power, to_scalar(0)) + coeff * int(c)
                if value:
                    target[power] = value
                else:
                    target.pop(power, None)
    return even, odd


def unfold(
    algebra: AlgebraSpec, axis: str, even: AxisPoly, odd: AxisPoly
) -> NCPoly:
    """Rebuild ``f(A) + Y g(A)`` (or the X version) as a normal form."""
    folded = algebra.value(AXES[axis][1])
    letter = algebra.letter(axis)
    result = NCPoly.zero(algebra.alphabet)
    for part, prefix in ((even, algebra.constant(1)), (odd, letter)):
        for power, coeff in part.items():
            result = result + algebra.multiply(prefix, folded**power).scale(coeff)
    return result
