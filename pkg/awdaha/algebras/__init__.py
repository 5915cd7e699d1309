"""The two shipped algebras and their basis conversions."""

from ..errors import UnknownName
from .base import AlgebraSpec, BasisShape, DerivedElement, monomial_words
from .delta import delta_basis_count, delta_q
from .hhat import hhat_basis_count, hhat_q
from .laurent import axis_power, fold_laurent, unfold
from .tbasis import TElement, convert_t_basis

ALGEBRA_NAMES = ("delta", "hhat")


def get_algebra(name: str) -> AlgebraSpec:
    """Look up a shipped algebra by ``delta``/``delta-q`` or ``hhat``/``hhat-q``."""
    key = name.lower().removesuffix("-q")
    if key == "delta":
        return delta_q()
    if key == "hhat":
        return hhat_q()
    raise UnknownName(name, "algebras", ALGEBRA_NAMES)


__all__ = [
    # Algebras
    "AlgebraSpec",
    "BasisShape",
    "DerivedElement",
    "delta_q",
    "hhat_q",
    "get_algebra",
    "delta_basis_count",
    "hhat_basis_count",
    "monomial_words",
    # Basis conversions
    "TElement",
    "convert_t_basis",
    "fold_laurent",
    "unfold",
    "axis_power",
]
