"""Coefficient matrices of Hhat_q elements and what is computed from them.

Every Hhat_q element is uniquely ``sum Y^i X^j t_ij`` with each ``t_ij`` in
the T-subalgebra. The matrix ``(i, j) -> t_ij`` is displayed with rows
indexed by powers of Y (increasing downward) and columns by powers of X
(increasing rightward); entries are written in the t0^k, k in Z, basis.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass
from typing import Any

from .algebras import (
    AlgebraSpec,
    TElement,
    axis_power,
    delta_q,
    hhat_q,
    monomial_words,
)
from .errors import UnknownName
from .free_algebra import Alphabet, NCPoly, Word, word_order_key
from .linalg import kernel
from .morphisms import psi_images
from .reports import Report
from .rewriting import DEFAULT_FUEL
from .scalars import ScalarLike, to_scalar
from .utils import summarize_element

logger = logging.getLogger(__name__)

Cell = tuple[int, int]

PROJECTIONS = ("1", "X", "Y", "YX")

_AXIS_LETTERS = {"Y": 1, "Y^-1": -1}, {"X": 1, "X^-1": -1}


def split_word(algebra: AlgebraSpec, word: Word) -> tuple[int, int, Word]:
    """Split a normal-form word into ``(i, j, rest)`` for ``Y^i X^j rest``."""
    names = algebra.alphabet.names
    exponents = [0, 0]
    position = 0
    for axis, letters in enumerate(_AXIS_LETTERS):
        while position < len(word) and names[word[position]] in letters:
            exponents[axis] += letters[names[word[position]]]
            position += 1
    return exponents[0], exponents[1], word[position:]


def _axis_label(letter: str, power: int) -> str:
    if power == 0:
        return "1"
    return letter if power == 1 else f"{letter}^{power}"


def _axis_word(alphabet: Alphabet, letter: str, power: int) -> Word:
    name = letter if power > 0 else f"{letter}^-1"
    return alphabet.word([name] * abs(power))


def _accumulate(target: dict[Any, TElement], key: Any, value: TElement) -> None:
    total = target[key] + value if key in target else value
    if total.is_zero():
        target.pop(key, None)
    else:
        target[key] = total


def t_element(text: str) -> TElement:
    """Parse an expression in t0, t0^-1 and the T_i into a TElement."""
    return TElement.from_ncpoly(hhat_q().element(text))


class CoeffMatrix:
    """A finitely supported matrix ``(i, j) -> TElement``.

    Examples:
        >>> m = CoeffMatrix.from_element(hhat_q().value("A"))
        >>> sorted(m.cells())
        [(-1, 0), (1, 0)]
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[Cell, TElement] | None = None) -> None:
        self._entries = {
            cell: entry for cell, entry in (entries or {}).items() if entry
        }

    @classmethod
    def from_element(cls, h: NCPoly, fuel: int = DEFAULT_FUEL) -> CoeffMatrix:
        """Coefficient matrix of an Hhat_q element (normalized first)."""
        algebra = hhat_q()
        normal = algebra.normalize(h, fuel)
        grouped: dict[Cell, dict[Word, Any]] = {}
        for word, coeff in normal.items():
            i, j, rest = split_word(algebra, word)
            grouped.setdefault((i, j), {})[rest] = coeff
        entries = {
            cell: TElement.from_ncpoly(NCPoly(algebra.alphabet, terms))
            for cell, terms in grouped.items()
        }
        return cls(entries)

    @classmethod
    def from_table(cls, table: Mapping[Cell, str]) -> CoeffMatrix:
        """Build from entry expressions, e.g. ``{(1, -1): "-q^-1"}``."""
        return cls({cell: t_element(text) for cell, text in table.items()})

    def cells(self) -> list[Cell]:
        return sorted(self._entries)

    def items(self) -> Iterator[tuple[Cell, TElement]]:
        for cell in self.cells():
            yield cell, self._entries[cell]

    def __getitem__(self, cell: Cell) -> TElement:
        return self._entries.get(cell, TElement())

    def __len__(self) -> int:
        return len(self._entries)

    def is_zero(self) -> bool:
        return not self._entries

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CoeffMatrix):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(frozenset(self._entries.items()))

    def __add__(self, other: CoeffMatrix) -> CoeffMatrix:
        entries = dict(self._entries)
        for cell, entry in other._entries.items():
            _accumulate(entries, cell, entry)
        return CoeffMatrix(entries)

    def __neg__(self) -> CoeffMatrix:
        return CoeffMatrix({cell: -entry for cell, entry in self._entries.items()})

    def __sub__(self, other: CoeffMatrix) -> CoeffMatrix:
        return self + (-other)

    def times(self, factor: TElement | ScalarLike) -> CoeffMatrix:
        """Right multiplication of every entry; the matrix of ``h * factor``."""
        if not isinstance(factor, TElement):
            factor = TElement.constant(to_scalar(factor))
        return CoeffMatrix(
            {cell: entry * factor for cell, entry in self._entries.items()}
        )

    def shift_rows(self, n: int) -> CoeffMatrix:
        """The matrix of ``Y^n * h``."""
        return CoeffMatrix({(i + n, j): e for (i, j), e in self._entries.items()})

    def to_ncpoly(self, fuel: int = DEFAULT_FUEL) -> NCPoly:
        """Reassemble ``sum Y^i X^j t_ij`` as a normal form."""
        algebra = hhat_q()
        result = NCPoly.zero(algebra.alphabet)
        for (i, j), entry in self._entries.items():
            axis = _axis_word(algebra.alphabet, "Y", i)
            prefix = algebra.word(axis + _axis_word(algebra.alphabet, "X", j))
            result = result + prefix.multiply(entry.to_ncpoly(algebra.alphabet))
        return algebra.normalize(result, fuel)

    def to_text(self) -> str:
        """Table with Y-power rows and X-power columns."""
        if not self._entries:
            return "0"
        ys = [i for i, _ in self._entries]
        xs = [j for _, j in self._entries]
        rows, columns = range(min(ys), max(ys) + 1), range(min(xs), max(xs) + 1)
        table = [[""] + [_axis_label("X", j) for j in columns]]
        for i in rows:
            table.append([_axis_label("Y", i)] + [str(self[(i, j)]) for j in columns])
        widths = [max(len(row[c]) for row in table) for c in range(len(table[0]))]
        return "\n".join(
            "  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip()
            for row in table
        )

    def to_json(self) -> list[dict[str, Any]]:
        return [{"i": i, "j": j, "entry": str(entry)} for (i, j), entry in self.items()]

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"CoeffMatrix({len(self._entries)} entries)"


def coefficient_matrix(h: NCPoly, fuel: int = DEFAULT_FUEL) -> CoeffMatrix:
    """The coefficient matrix of an Hhat_q element.

    Examples:
        >>> str(coefficient_matrix(hhat_q().constant(1)))
        '   1\\n1  1'
    """
    return CoeffMatrix.from_element(h, fuel)


def decompose(
    h: NCPoly, fuel: int = DEFAULT_FUEL
) -> dict[str, dict[Cell, TElement]]:
    """Write ``h = sum over nu of sum A^a nu B^b t_(nu,a,b)``.

    Each ``Y^i`` is folded to ``f(A) + Y g(A)`` and each ``X^j`` to
    ``f(B) + X g(B)``; Y commutes with A and X with B.

    Returns:
        nu in ``PROJECTIONS`` -> ``{(a, b): t}``
    """
    parts: dict[str, dict[Cell, TElement]] = {nu: {} for nu in PROJECTIONS}
    for (i, j), entry in coefficient_matrix(h, fuel).items():
        even_y, odd_y = axis_power(i)
        even_x, odd_x = axis_power(j)
        pieces = (
            ("1", even_y, even_x),
            ("X", even_y, odd_x),
            ("Y", odd_y, even_x),
            ("YX", odd_y, odd_x),
        )
        for nu, left, right in pieces:
            for a, left_coeff in left.items():
                for b, right_coeff in right.items():
                    _accumulate(parts[nu], (a, b), entry * (left_coeff * right_coeff))
    return parts


def _projection_letter(algebra: AlgebraSpec, nu: str) -> NCPoly:
    if nu not in PROJECTIONS:
        raise UnknownName(nu, "projections", PROJECTIONS)
    if nu == "1":
        return algebra.constant(1)
    return algebra.word(algebra.alphabet.word(list(nu)))


def project_pi(nu: str, h: NCPoly, fuel: int = DEFAULT_FUEL) -> NCPoly:
    """The summand of ``h`` in ``<A> nu <B> T``.

    Raises:
        UnknownName: If ``nu`` is not one of ``1``, ``X``, ``Y``, ``YX``
    """
    algebra = hhat_q()
    middle = _projection_letter(algebra, nu)
    a, b = algebra.value("A"), algebra.value("B")
    result = NCPoly.zero(algebra.alphabet)
    for (i, j), entry in sorted(decompose(h, fuel)[nu].items()):
        result = result + algebra.multiply(
            a**i, middle, b**j, entry.to_ncpoly(algebra.alphabet), fuel=fuel
        )
    return result


def t0_residual(h: NCPoly, fuel: int = DEFAULT_FUEL) -> NCPoly:
    """Normal form of ``t0*h - h*t0``."""
    algebra = hhat_q()
    return algebra.commutator(algebra.letter("t0"), h, fuel)


def commutes_with_t0(h: NCPoly, fuel: int = DEFAULT_FUEL) -> bool:
    return t0_residual(h, fuel).is_zero()


_T0_SUM = "(q^-1*t0 + q*t0^-1)"
_CENTRAL_T = {
    "alpha": f"{_T0_SUM}*T1 + T2*T3",
    "beta": f"{_T0_SUM}*T3 + T1*T2",
    "gamma": f"{_T0_SUM}*T2 + T3*T1",
}


def _centralizer_relations() -> tuple[tuple[str, str], ...]:
    relations = []
    for name, (x, y, z) in zip(_CENTRAL_T, ("ABC", "BCA", "CAB")):
        relations.append(
            (
                name,
                f"{x} + (q*{y}*{z} - q^-1*{z}*{y})/(q^2 - q^-2)"
                f" - ({_CENTRAL_T[name]})/(q + q^-1)",
            )
        )
    casimir = (
        "q^-1*A*C*B + q^-2*A^2 + q^-2*B^2 + q^2*C^2"
        f" - q^-1*A*({_CENTRAL_T['alpha']}) - q^-1*B*({_CENTRAL_T['beta']})"
        f" - q*C*({_CENTRAL_T['gamma']})"
        f" - (q + q^-1)^2 + {_T0_SUM}^2 + T1^2 + T2^2 + T3^2"
        f" + {_T0_SUM}*T1*T2*T3"
    )
    relations.append(("Omega", casimir))
    return tuple(relations)


CENTRALIZER_RELATIONS = _centralizer_relations()


def verify_centralizer_presentation(
    overrides: Mapping[str, NCPoly] | None = None, fuel: int = DEFAULT_FUEL
) -> Report:
    """Check the defining relations of the centralizer of t0.

    A, B, C are realized in Hhat_q unless ``overrides`` supplies other
    elements for them; t0, T1, T2, T3 must commute with all three.
    """
    algebra = hhat_q()
    report = Report("centralizer")
    for name, text in CENTRALIZER_RELATIONS:
        residual = algebra.normalize(algebra.parse(text, overrides), fuel)
        report.zero(f"relation {name}", residual)
    generators = {
        name: algebra.parse(name, overrides) for name in ("A", "B", "C")
    }
    for central in ("t0", "T1", "T2", "T3"):
        for name, element in generators.items():
            residual = algebra.commutator(algebra.letter(central), element, fuel)
            report.zero(f"{central} commutes with {name}", residual)
    logger.info("%s: %d failed", report.name, len(report.failures))
    return report


NON_CENTRALIZING = (
    ("X", "X^-1*t0 + X*T0 - T3 - X*t0"),
    ("Y", "Y^-1*t0 + Y*T0 - T1 - Y*t0"),
    ("Y*X", None),
)


def verify_t0_centralizer(bound: int = 3, fuel: int = DEFAULT_FUEL) -> Report:
    """psi-images of Delta_q basis words commute with t0; X, Y, YX do not."""
    algebra = hhat_q()
    delta = delta_q()
    report = Report("centralizer")
    for word, image in psi_images(bound, fuel):
        label = delta.display(word) if word else "1"
        report.zero(f"t0 commutes with psi({label})", t0_residual(image, fuel))
    for text, expected in NON_CENTRALIZING:
        residual = t0_residual(algebra.parse(text), fuel)
        passed = not residual.is_zero()
        if expected is not None:
            passed = passed and residual == algebra.element(expected, fuel)
        report.record(
            f"t0 does not commute with {text}",
            passed,
            residual,
            detail=f"residual {summarize_element(residual, 80)}",
        )
    logger.info("t0 centralizer at bound %d: %d failed", bound, len(report.failures))
    return report


@dataclass(frozen=True)
class CenterKernel:
    """Central elements found in a bounded window of the Hhat_q basis.

    Attributes:
        bound: Maximum ``|i|`` and ``|j|`` of ``Y^i X^j``
        t_degree: Maximum total degree in T0..T3
        domain: The window's basis words
        kernel: A basis of the central elements in the window
    """

    bound: int
    t_degree: int
    domain: tuple[Word, ...]
    kernel: tuple[NCPoly, ...]

    @property
    def rank(self) -> int:
        """Rank of the commutator map on the window."""
        return len(self.domain) - len(self.kernel)


def window_words(bound: int, t_degree: int) -> list[Word]:
    """Words ``Y^i X^j t0^k T0^l T1^r T2^s T3^t`` with ``|i|, |j| <= bound``,
    ``k`` in {0, 1} and ``l + r + s + t <= t_degree``."""
    if bound < 0 or t_degree < 0:
        raise ValueError("Window bounds must be non-negative")
    alphabet = hhat_q().alphabet
    central = [alphabet.index(name) for name in ("T0", "T1", "T2", "T3")]
    t_parts = [
        part
        for degree in range(t_degree + 1)
        for part in monomial_words(central, degree)
    ]
    words = []
    for i in range(-bound, bound + 1):
        for j in range(-bound, bound + 1):
            prefix = _axis_word(alphabet, "Y", i) + _axis_word(alphabet, "X", j)
            for k in (0, 1):
                t0 = (alphabet.index("t0"),) * k
                words.extend(prefix + t0 + part for part in t_parts)
    return sorted(words, key=word_order_key)


def center_kernel(
    bound: int = 2, t_degree: int = 1, fuel: int = DEFAULT_FUEL
) -> CenterKernel:
    """Central elements spanned by a bounded window of basis words.

    Commutators with X, Y and t0 are compared in the full normal-form basis,
    so no truncation of the codomain takes place.

    Args:
        bound: Maximum ``|i|``, ``|j|``
        t_degree: Maximum degree in T0..T3
        fuel: Normalization fuel

    Returns:
        The window and a kernel basis in reduced echelon form
    """
    algebra = hhat_q()
    domain = window_words(bound, t_degree)
    probes = [algebra.letter(name) for name in ("X", "Y", "t0")]
    vectors = []
    for word in domain:
        element = algebra.word(word)
        vector: dict[tuple[int, Word], Any] = {}
        for which, probe in enumerate(probes):
            for image_word, coeff in algebra.commutator(probe, element, fuel).items():
                vector[(which, image_word)] = coeff
        vectors.append(vector)
    relations = kernel(vectors)
    central = tuple(
        NCPoly(algebra.alphabet, {domain[index]: c for index, c in relation.items()})
        for relation in relations
    )
    logger.info(
        "center window (%d, %d): %d words, %d central",
        bound,
        t_degree,
        len(domain),
        len(central),
    )
    return CenterKernel(bound, t_degree, tuple(domain), central)


def _shifted(table: Mapping[Cell, str], rows: int) -> dict[Cell, str]:
    return {(i + rows, j): text for (i, j), text in table.items()}


C_TABLE = {
    (-1, 0): "-q^-1*t0^-1*T3",
    (-1, 1): "q^-1*t0^-2",
    (0, 0): "t0^-1*T2 + q^-1*T1*T3",
    (0, 1): "-q^-1*t0^-1*T1",
    (1, -1): "-q^-1",
}

XC_TABLE = {
    (-1, -1): "q^-3*t0*T3",
    (-1, 0): "-q^-1*T3^2 - q^-3*t0^2 - q^-3",
    (-1, 1): "q^-2*(q^-1*t0 + q*t0^-1)*T3",
    (-1, 2): "-q^-3",
    (0, -1): "-q^-2*t0*T2",
    (0, 0): "q^-1*t0*T1 + T2*T3",
    (1, 0): "-q",
}

# Named matrices: (element expression in Hhat_q, displayed entries)
DISPLAYED_MATRICES: dict[str, tuple[str, dict[Cell, str]]] = {
    "A": ("A", {(-1, 0): "1", (1, 0): "1"}),
    "B": ("B", {(0, -1): "1", (0, 1): "1"}),
    "C": ("C", C_TABLE),
    "theta": (
        "theta",
        {
            (-1, 0): "T3",
            (-1, 1): "-t0^-1",
            (0, 0): "q^-1*t0^2*T2",
            (0, 1): "T1",
            (1, -1): "t0",
        },
    ),
    "XC": ("X*C", XC_TABLE),
    "Y^-1C": ("Y^-1*C", _shifted(C_TABLE, -1)),
    "Y^-1C(X+X^-1)": (
        "Y^-1*C*(X + X^-1)",
        {
            (-2, -1): "-q^-1*t0^-1*T3",
            (-2, 0): "q^-1*t0^-2",
            (-2, 1): "-q^-1*t0^-1*T3",
            (-2, 2): "q^-1*t0^-2",
            (-1, -1): "t0^-1*T2 + q^-1*T1*T3",
            (-1, 0): "-q^-1*t0^-1*T1",
            (-1, 1): "t0^-1*T2 + q^-1*T1*T3",
            (-1, 2): "-q^-1*t0^-1*T1",
            (0, -2): "-q^-1",
            (0, 0): "-q^-1",
        },
    ),
    "YXC": ("Y*X*C", _shifted(XC_TABLE, 1)),
    "Y^-1XC": ("Y^-1*X*C", _shifted(XC_TABLE, -1)),
    "G": (
        "q^2*Y^2 + q^-2*Y^-2 - q*Y*alpha - q^-1*Y^-1*alpha + q^-2*X^2 + q^-2*X^-2"
        " - q^-1*X*beta - q^-1*X^-1*beta + q^2 + 3*q^-2 - Omega",
        {
            (-2, 0): "q^-2",
            (-1, 0): "-q^-1*alpha",
            (0, -2): "q^-2",
            (0, -1): "-q^-1*beta",
            (0, 0): "q^2 + 3*q^-2 - Omega",
            (0, 1): "-q^-1*beta",
            (0, 2): "q^-2",
            (1, 0): "-q*alpha",
            (2, 0): "q^2",
        },
    ),
}

# psi(Omega) - Omega' = sum of (matrix name, right factor); its matrix vanishes
CASIMIR_COMBINATION = (
    ("C", "q*(T1*T3 - gamma + q*t0^-1*T2)"),
    ("Y^-1C", "-q*t0^-1*T3"),
    ("Y^-1C(X+X^-1)", "q^-1"),
    ("XC", "-q*t0^-1*T1"),
    ("YXC", "q"),
    ("Y^-1XC", "q*t0^-2"),
    ("G", "1"),
)


def displayed_matrix(name: str) -> CoeffMatrix:
    if name not in DISPLAYED_MATRICES:
        raise UnknownName(name, "matrices", tuple(DISPLAYED_MATRICES))
    return CoeffMatrix.from_table(DISPLAYED_MATRICES[name][1])


def casimir_combination(
    matrices: Mapping[str, CoeffMatrix] | None = None,
) -> CoeffMatrix:
    """The combination of displayed matrices that expresses the Casimir
    identity; zero when the identity holds."""
    if matrices is None:
        matrices = {name: displayed_matrix(name) for name, _ in CASIMIR_COMBINATION}
    total = CoeffMatrix()
    for name, factor in CASIMIR_COMBINATION:
        total = total + matrices[name].times(t_element(factor))
    return total


def verify_matrices(
    names: Sequence[str] | None = None, fuel: int = DEFAULT_FUEL
) -> Report:
    """Compare computed coefficient matrices with the displayed tables and
    check that the Casimir combination vanishes."""
    algebra = hhat_q()
    report = Report("matrices")
    computed = {}
    for name in names or DISPLAYED_MATRICES:
        text, _ = DISPLAYED_MATRICES[name]
        computed[name] = coefficient_matrix(algebra.parse(text), fuel)
        difference = computed[name] - displayed_matrix(name)
        report.zero(f"matrix {name}", difference.to_ncpoly(fuel))
    if names is None:
        report.zero("Casimir combination", casimir_combination().to_ncpoly(fuel))
    logger.info("%s: %d failed", report.name, len(report.failures))
    return report
