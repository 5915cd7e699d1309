"""The universal double affine Hecke algebra of type (C1v, C1).

Generators, in basis order: Y, Y^-1, X, X^-1, t0, T0, T1, T2, T3. The letter
t0^-1 does not exist; the named element ``t0^-1`` is ``T0 - t0``.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from ..free_algebra import Alphabet
from .base import AlgebraSpec, BasisShape, build_system

HHAT_NAMES = ("Y", "Y^-1", "X", "X^-1", "t0", "T0", "T1", "T2", "T3")
T_LETTERS = ("t0", "T0", "T1", "T2", "T3")
CENTRAL = ("T0", "T1", "T2", "T3")

FIRST_KIND = (
    (
        "X*Y",
        "q^2*Y*X - q*t0*T2 + q^-1*T0*T2 + Y^-1*t0*T3 - q^-2*Y^-1*T0*T3"
        " + q^-2*Y^-1*X*T0^2 - q^-2*Y^-1*X*t0*T0 - X*T0*T1 + X*t0*T1",
    ),
    (
        "X^-1*Y",
        "q^-2*Y*X^-1 + (q - q^-1)*q^-1*T1*T3 - q^-1*T0*T2 + q^-1*t0*T2"
        " - Y^-1*t0*T3 + q^-2*X*T0*T1 - q^-2*X*t0*T1 + q^-2*Y^-1*T0*T3"
        " - q^-2*Y^-1*X*T0^2 + q^-2*Y^-1*X*t0*T0",
    ),
    (
        "X^-1*Y^-1",
        "q^2*Y^-1*X^-1 - q^2*Y^-1*T0*T3 + q^2*Y^-1*t0*T3 + q*T0*T2 - q*t0*T2"
        " - q^2*X*T0*T1 + q^2*X*t0*T1 + q^2*Y^-1*X*T0^2 - q^2*Y^-1*X*t0*T0",
    ),
    (
        "X*Y^-1",
        "q^-2*Y^-1*X + X*T0*T1 - X*t0*T1 - q^-2*Y^-1*X*T0^2"
        " + q^-2*Y^-1*X*t0*T0 + q^-2*Y^-1*T0*T3 - q^-2*Y^-1*t0*T3"
        " - q^-1*T0*T2 + q^-1*t0*T2",
    ),
)

SECOND_KIND = (
    ("t0*t0", "t0*T0 - 1"),
    ("t0*X", "X^-1*t0 + X*T0 - T3"),
    ("t0*X^-1", "X*t0 - X*T0 + T3"),
    ("t0*Y", "Y^-1*t0 + Y*T0 - T1"),
    ("t0*Y^-1", "Y*t0 - Y*T0 + T1"),
)


def _third_kind() -> list[tuple[str, str]]:
    rules = [
        ("X*X^-1", "1"),
        ("X^-1*X", "1"),
        ("Y*Y^-1", "1"),
        ("Y^-1*Y", "1"),
    ]
    for central in CENTRAL:
        for g in ("Y", "Y^-1", "X", "X^-1", "t0"):
            rules.append((f"{central}*{g}", f"{g}*{central}"))
    for i, later in enumerate(CENTRAL):
        for earlier in CENTRAL[:i]:
            rules.append((f"{later}*{earlier}", f"{earlier}*{later}"))
    return rules


HHAT_RULES = (
    tuple((lhs, rhs, "first") for lhs, rhs in FIRST_KIND)
    + tuple((lhs, rhs, "second") for lhs, rhs in SECOND_KIND)
    + tuple((lhs, rhs, "third") for lhs, rhs in _third_kind())
)

HHAT_DEFINITIONS = (
    ("t0^-1", "T0 - t0"),
    ("t1", "t0^-1*Y"),
    ("t1^-1", "Y^-1*t0"),
    ("t2", "q^-1*Y^-1*t0*X^-1"),
    ("t2^-1", "q*X*t0^-1*Y"),
    ("t3", "X*t0^-1"),
    ("t3^-1", "t0*X^-1"),
    ("A", "Y + Y^-1"),
    ("B", "X + X^-1"),
    ("C", "t0*t2 + t2^-1*t0^-1"),
    ("C'", "q*t1*t3 + q^-1*t3^-1*t1^-1"),
    ("alpha", "q*T0*T1 - (q - q^-1)*t0*T1 + T2*T3"),
    ("beta", "q*T0*T3 - (q - q^-1)*t0*T3 + T1*T2"),
    ("gamma", "q*T0*T2 - (q - q^-1)*t0*T2 + T3*T1"),
    (
        "Omega",
        "(q + q^-1)^2 - (q^-1*t0 + q*t0^-1)^2 - T1^2 - T2^2 - T3^2"
        " - (q^-1*t0 + q*t0^-1)*T1*T2*T3",
    ),
    ("theta", "Y*X^-1*t0 - Y^-1*X*t0^-1 + Y^-1*T3 + X*T1 + q^-1*t0^2*T2"),
    ("C0", "q*(q*Y*X - q^-1*X*Y)"),
    ("C1", "-(q^-1*Y*X^-1 - q*X^-1*Y)"),
    ("C2", "q^-1*(q*Y^-1*X^-1 - q^-1*X^-1*Y^-1)"),
    ("C3", "-(q^-1*Y^-1*X - q*X*Y^-1)"),
)


def hhat_basis_count(length: int) -> int:
    """Y^i X^j t0^k T0^l T1^r T2^s T3^t with i, j in Z and k in {0, 1}."""
    total = 0
    for axis_length in range(length + 1):
        axis_words = 1 if axis_length == 0 else 4 * axis_length
        for k in (0, 1):
            rest = length - axis_length - k
            if rest >= 0:
                total += axis_words * comb(rest + 3, 3)
    return total


@lru_cache(maxsize=None)
def hhat_q() -> AlgebraSpec:
    """The algebra with its 39 reduction rules."""
    alphabet = Alphabet.from_names(HHAT_NAMES)
    return AlgebraSpec(
        "hhat-q",
        build_system("hhat-q", alphabet, HHAT_RULES),
        BasisShape(
            "Y^i X^j t0^k T0^l T1^r T2^s T3^t, i,j in Z, k in {0,1}",
            hhat_basis_count,
        ),
        HHAT_DEFINITIONS,
    )
