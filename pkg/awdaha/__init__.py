"""awdaha: exact normal forms for the universal Askey-Wilson algebra and the
universal DAHA of type (C1v, C1).

The package provides a terminating, confluent rewriting engine over the
field Q(q), the two algebras as rewrite systems, the homomorphism psi between
them with its braid-group symmetries, coefficient matrices in Hhat_q and
named verification suites.
"""

from .algebras import AlgebraSpec, TElement, delta_q, get_algebra, hhat_q
from .coeff_matrix import CoeffMatrix, coefficient_matrix, decompose, project_pi
from .errors import (
    AlphabetMismatch,
    AwdahaError,
    AxisError,
    DivisionByZero,
    ExpressionSyntaxError,
    MissingImage,
    NonTermination,
    NotInT,
    SpecFormatError,
    UnknownName,
)
from .free_algebra import Alphabet, NCPoly
from .morphisms import Morphism, braid, dagger, psi, xi, z4
from .reports import Report
from .rewriting import DEFAULT_FUEL, RewriteRule, RewriteSystem
from .scalars import QQ_q, q
from .suites import SUITES, run_suite

__version__ = "0.1.0"
__all__ = [
    # Core
    "QQ_q",
    "q",
    "Alphabet",
    "NCPoly",
    "RewriteRule",
    "RewriteSystem",
    "DEFAULT_FUEL",
    # Algebras and maps
    "AlgebraSpec",
    "TElement",
    "delta_q",
    "hhat_q",
    "get_algebra",
    "Morphism",
    "psi",
    "braid",
    "z4",
    "dagger",
    "xi",
    # Coefficient matrices
    "CoeffMatrix",
    "coefficient_matrix",
    "decompose",
    "project_pi",
    # Verification
    "Report",
    "SUITES",
    "run_suite",
    # Errors
    "AwdahaError",
    "AlphabetMismatch",
    "AxisError",
    "DivisionByZero",
    "ExpressionSyntaxError",
    "MissingImage",
    "NonTermination",
    "NotInT",
    "SpecFormatError",
    "UnknownName",
]
