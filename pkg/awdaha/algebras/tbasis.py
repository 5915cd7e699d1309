"""The commutative subalgebra generated by t0^(+-1), T1, T2, T3.

Elements are stored in the Laurent basis t0^k T1^r T2^s T3^t (k in Z), the
basis used to display coefficient matrices. The other basis,
t0^k T0^l T1^r T2^s T3^t with k in {0, 1}, is the one the Hhat_q normal form
produces; ``T0 = t0 + t0^-1`` links the two.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from functools import lru_cache
from math import comb
from typing import Any, Tuple

from ..errors import NotInT
from ..free_algebra import Alphabet, NCPoly, format_terms
from ..scalars import ONE, QScalar, ScalarLike, to_scalar

LaurentKey = Tuple[int, int, int, int]
HeckeKey = Tuple[int, int, int, int, int]
HeckeForm = dict[tuple[int, int], int]

T_NAMES = ("t0", "T0", "T1", "T2", "T3")
TARGETS = ("hecke", "laurent")


def _add(target: dict[Any, QScalar], key: Any, value: QScalar) -> None:
    total = target.get(key)
    total = value if total is None else total + value
    if total:
        target[key] = total
    else:
        target.pop(key, None)


@lru_cache(maxsize=None)
def _t0_power_hecke(n: int) -> tuple[tuple[tuple[int, int], int], ...]:
    """t0^n as integer combination of t0^k T0^l, k in {0, 1}."""
    if n == 0:
        return (((0, 0), 1),)
    if n == 1:
        return (((1, 0), 1),)
    if n == -1:
        return (((0, 1), 1), ((1, 0), -1))
    step, back = (n - 1, n - 2) if n > 0 else (n + 1, n + 2)
    result: HeckeForm = {}
    for (k, l), c in _t0_power_hecke(step):
        result[(k, l + 1)] = result.get((k, l + 1), 0) + c
    for key, c in _t0_power_hecke(back):
        result[key] = result.get(key, 0) - c
    return tuple(sorted((key, c) for key, c in result.items() if c))


class TElement:
    """An element of the T-subalgebra.

    Instances are immutable values; arithmetic is commutative.

    Examples:
        >>> str(TElement.generator("T0"))
        't0^-1 + t0'
        >>> TElement.generator("t0^-1").hecke_terms() == {
        ...     (0, 1, 0, 0, 0): ONE, (1, 0, 0, 0, 0): -ONE}
        True
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[LaurentKey, ScalarLike] | None = None) -> None:
        cleaned: dict[LaurentKey, QScalar] = {}
        for key, coeff in (terms or {}).items():
            _add(cleaned, tuple(key), to_scalar(coeff))
        self._terms = cleaned

    @classmethod
    def constant(cls, value: ScalarLike) -> TElement:
        return cls({(0, 0, 0, 0): value})

    @classmethod
    def t0_power(cls, n: int, coeff: ScalarLike = 1) -> TElement:
        return cls({(n, 0, 0, 0): coeff})

    @classmethod
    def generator(cls, name: str) -> TElement:
        """One of ``t0``, ``t0^-1``, ``T0``, ``T1``, ``T2``, ``T3``."""
        if name == "t0":
            return cls.t0_power(1)
        if name == "t0^-1":
            return cls.t0_power(-1)
        if name == "T0":
            return cls({(1, 0, 0, 0): 1, (-1, 0, 0, 0): 1})
        if name in ("T1", "T2", "T3"):
            key = [0, 0, 0, 0]
            key[int(name[1])] = 1
            return cls({tuple(key): 1})  # type: ignore[dict-item]
        raise NotInT(name)

    @classmethod
    def from_hecke(cls, terms: Mapping[HeckeKey, ScalarLike]) -> TElement:
        """Build from t0^k T0^l T1^r T2^s T3^t coefficients (any k >= 0)."""
        result: dict[LaurentKey, QScalar] = {}
        for (k, l, r, s, t), coeff in terms.items():
            value = to_scalar(coeff)
            for m in range(l + 1):
                _add(result, (k + l - 2 * m, r, s, t), value * comb(l, m))
        element = cls.__new__(cls)
        element._terms = result
        return element

    @classmethod
    def from_ncpoly(cls, p: NCPoly) -> TElement:
        """Read an element whose words use only t0, T0, T1, T2, T3.

        Raises:
            NotInT: If a word involves any other letter
        """
        names = p.alphabet.names
        hecke: dict[HeckeKey, QScalar] = {}
        for word, coeff in p.items():
            exponents = [0, 0, 0, 0, 0]
            for letter in word:
                name = names[letter]
                if name not in T_NAMES:
                    raise NotInT(p.alphabet.display(word))
                exponents[T_NAMES.index(name)] += 1
            _add(hecke, tuple(exponents), coeff)  # type: ignore[arg-type]
        return cls.from_hecke(hecke)

    @property
    def terms(self) -> Mapping[LaurentKey, QScalar]:
        return dict(self._terms)

    def hecke_terms(self) -> dict[HeckeKey, QScalar]:
        """Coefficients in the t0^k T0^l T1^r T2^s T3^t, k in {0, 1} basis."""
        result: dict[HeckeKey, QScalar] = {}
        for (n, r, s, t), coeff in self._terms.items():
            for (k, l), c in _t0_power_hecke(n):
                _add(result, (k, l, r, s, t), coeff * c)
        return result

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TElement):
            return self._terms == other._terms
        if isinstance(other, int) or hasattr(other, "numer"):
            constant = TElement.constant(other)  # type: ignore[arg-type]
            return self._terms == constant._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def _coerce(self, other: TElement | ScalarLike) -> TElement:
        return other if isinstance(other, TElement) else TElement.constant(other)

    def __add__(self, other: TElement | ScalarLike) -> TElement:
        result = dict(self._terms)
        for key, coeff in self._coerce(other)._terms.items():
            _add(result, key, coeff)
        return TElement(result)

    __radd__ = __add__

    def __neg__(self) -> TElement:
        return TElement({key: -c for key, c in self._terms.items()})

    def __sub__(self, other: TElement | ScalarLike) -> TElement:
        return self + (-self._coerce(other))

    def __rsub__(self, other: TElement | ScalarLike) -> TElement:
        return self._coerce(other) - self

    def __mul__(self, other: TElement | ScalarLike) -> TElement:
        other = self._coerce(other)
        result: dict[LaurentKey, QScalar] = {}
        for (k1, r1, s1, t1), a in self._terms.items():
            for (k2, r2, s2, t2), b in other._terms.items():
                _add(result, (k1 + k2, r1 + r2, s1 + s2, t1 + t2), a * b)
        return TElement(result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> TElement:
        if exponent < 0:
            raise ValueError("TElement powers must be non-negative")
        result = TElement.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def to_ncpoly(self, alphabet: Alphabet) -> NCPoly:
        """The element as normal-form words over an alphabet containing
        t0, T0, T1, T2, T3."""
        ids = [alphabet.index(name) for name in T_NAMES]
        terms: dict[tuple[int, ...], QScalar] = {}
        for key, coeff in self.hecke_terms().items():
            word = tuple(
                letter for letter, power in zip(ids, key) for _ in range(power)
            )
            terms[word] = coeff
        return NCPoly(alphabet, terms)

    def to_str(self, basis: str = "laurent") -> str:
        if basis == "hecke":
            items: Iterable[tuple[tuple[int, ...], QScalar]] = sorted(
                self.hecke_terms().items(), key=lambda item: _hecke_order(item[0])
            )
            names = T_NAMES
        else:
            items = sorted(
                self._terms.items(), key=lambda item: _laurent_order(item[0])
            )
            names = ("t0", "T1", "T2", "T3")
        return format_terms((_monomial(names, key), c) for key, c in items)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"TElement({self.to_str()!r})"


def _laurent_order(key: LaurentKey) -> tuple[int, ...]:
    k, r, s, t = key
    return (-(abs(k) + r + s + t), k, -r, -s, -t)


def _hecke_order(key: HeckeKey) -> tuple[int, ...]:
    return (-sum(key),) + tuple(-e for e in key)


def _monomial(names: tuple[str, ...], key: tuple[int, ...]) -> str:
    factors = []
    for name, power in zip(names, key):
        if power == 1:
            factors.append(name)
        elif power:
            factors.append(f"{name}^{power}")
    return "*".join(factors)


def convert_t_basis(
    element: TElement | NCPoly, target: str = "laurent"
) -> dict[tuple[int, ...], QScalar]:
    """Express a T-element in one of its two bases.

    Args:
        element: A TElement, or an Hhat_q element supported on T letters
        target: ``"hecke"`` for keys (k, l, r, s, t) of t0^k T0^l T1^r T2^s T3^t
            with k in {0, 1}; ``"laurent"`` for keys (k, r, s, t) of
            t0^k T1^r T2^s T3^t with k in Z

    Returns:
        Mapping basis key -> coefficient

    Raises:
        NotInT: If an NCPoly argument uses letters other than t0, T0..T3
        ValueError: For an unknown target

    Examples:
        >>> convert_t_basis(TElement.t0_power(-1), "hecke") == {
        ...     (0, 1, 0, 0, 0): ONE, (1, 0, 0, 0, 0): -ONE}
        True
    """
    if isinstance(element, NCPoly):
        element = TElement.from_ncpoly(element)
    if target == "hecke":
        return dict(element.hecke_terms())
    if target == "laurent":
        return dict(element.terms)
    raise ValueError(f"Unknown T-basis '{target}'; expected one of {TARGETS}")


ZERO_T = TElement()
ONE_T = TElement({(0, 0, 0, 0): ONE})
