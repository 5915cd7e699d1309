"""The universal Askey-Wilson algebra, in its balanced presentation.

Generators, in basis order: A, C, B, Omega, alpha, beta, gamma. The four
first-kind rules are denominator free; the second-kind rules move the
central letters Omega, alpha, beta, gamma to the right.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from ..free_algebra import Alphabet
from .base import AlgebraSpec, BasisShape, build_system

DELTA_NAMES = ("A", "C", "B", "Omega", "alpha", "beta", "gamma")
CENTRAL = ("Omega", "alpha", "beta", "gamma")

FIRST_KIND = (
    ("B*A", "q^2*A*B + q*(q^2 - q^-2)*C - q*(q - q^-1)*gamma"),
    ("B*C", "q^-2*C*B - q^-1*(q^2 - q^-2)*A + q^-1*(q - q^-1)*alpha"),
    ("C*A", "q^-2*A*C - q^-1*(q^2 - q^-2)*B + q^-1*(q - q^-1)*beta"),
    (
        "C*C",
        "q^-2*Omega - q^-3*A*C*B - q^-4*A^2 - q^-4*B^2"
        " + q^-3*A*alpha + q^-3*B*beta + q^-1*C*gamma",
    ),
)


def _second_kind() -> list[tuple[str, str]]:
    rules = [(f"{z}*{g}", f"{g}*{z}") for z in CENTRAL for g in ("A", "B", "C")]
    rules += [(f"{z}*Omega", f"Omega*{z}") for z in ("alpha", "beta", "gamma")]
    rules += [("beta*alpha", "alpha*beta"), ("gamma*alpha", "alpha*gamma")]
    rules += [("gamma*beta", "beta*gamma")]
    return rules


DELTA_RULES = tuple((lhs, rhs, "first") for lhs, rhs in FIRST_KIND) + tuple(
    (lhs, rhs, "second") for lhs, rhs in _second_kind()
)

# Names that are letters here resolve to their defining expressions only
# through AlgebraSpec.derived; in parsed text the letter wins.
DELTA_DEFINITIONS = (
    (
        "Omega",
        "q^-1*A*C*B + q^-2*A^2 + q^-2*B^2 + q^2*C^2"
        " - q^-1*A*alpha - q^-1*B*beta - q*C*gamma",
    ),
    ("alpha", "(q + q^-1)*(A + (q*B*C - q^-1*C*B)/(q^2 - q^-2))"),
    ("beta", "(q + q^-1)*(B + (q*C*A - q^-1*A*C)/(q^2 - q^-2))"),
    ("gamma", "(q + q^-1)*(C + (q*A*B - q^-1*B*A)/(q^2 - q^-2))"),
    ("C'", "C + (A*B - B*A)/(q - q^-1)"),
)


def delta_basis_count(length: int) -> int:
    """A^i C^j B^k Omega^l alpha^r beta^s gamma^t with j in {0, 1}."""
    total = comb(length + 5, 5)
    if length >= 1:
        total += comb(length + 4, 5)
    return total


@lru_cache(maxsize=None)
def delta_q() -> AlgebraSpec:
    """The algebra with its 22 reduction rules (4 first kind, 18 second kind)."""
    alphabet = Alphabet.from_names(DELTA_NAMES)
    return AlgebraSpec(
        "delta-q",
        build_system("delta-q", alphabet, DELTA_RULES),
        BasisShape(
            "A^i C^j B^k Omega^l alpha^r beta^s gamma^t, j in {0,1}",
            delta_basis_count,
        ),
        DELTA_DEFINITIONS,
    )
