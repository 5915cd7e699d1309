"""Homomorphisms and antihomomorphisms between and on the two algebras.

A ``Morphism`` stores the image of every balanced generator, including the
inverse letters of Hhat_q. Applying it reverses words first for an
antihomomorphism, substitutes the images (inverting q in the coefficients
when ``twist`` is set), conjugates by ``conjugator`` when one is given and
finally normalizes in the target algebra.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Union

from .algebras import AlgebraSpec, delta_q, get_algebra, hhat_q
from .errors import AlphabetMismatch, UnknownName
from .free_algebra import NCPoly, Word
from .linalg import rank
from .reports import Report
from .rewriting import DEFAULT_FUEL

logger = logging.getLogger(__name__)

BRAID_GENERATORS = ("rho", "sigma", "tau")
SQUARES = ("rho", "sigma", "tau", "dagger", "xi")

AlgebraLike = Union[AlgebraSpec, str]


@dataclass(frozen=True, eq=False)
class Morphism:
    """A map from ``source`` to ``target`` given on balanced generators.

    Attributes:
        name: Label used in reports and errors
        source: The domain algebra
        target: The codomain algebra
        images: Generator name -> image over the target alphabet
        anti: True for an antihomomorphism
        twist: Apply q -> q^-1 to coefficients (a semilinear map)
        conjugator: Pair ``(u_inv, u)``; every image becomes ``u_inv * h * u``
    """

    name: str
    source: AlgebraSpec
    target: AlgebraSpec
    images: Mapping[str, NCPoly]
    anti: bool = False
    twist: bool = False
    conjugator: tuple[NCPoly, NCPoly] | None = None

    def __post_init__(self) -> None:
        for generator, image in self.images.items():
            if generator not in self.source.alphabet:
                raise UnknownName(
                    generator, self.source.name, self.source.alphabet.names
                )
            if image.alphabet != self.target.alphabet:
                raise AlphabetMismatch(self.target.alphabet.names, image.alphabet.names)

    def __repr__(self) -> str:
        return (
            f"Morphism({self.name!r}, {self.source.name} -> {self.target.name}, "
            f"{self.direction})"
        )

    @property
    def direction(self) -> str:
        return "antihomomorphism" if self.anti else "homomorphism"

    def apply_raw(self, p: NCPoly) -> NCPoly:
        """The expanded image of ``p`` before normalization."""
        if p.alphabet != self.source.alphabet:
            p = p.with_alphabet(self.source.alphabet)
        if self.anti:
            p = p.reverse()
        image = p.substitute(self.images, self.target.alphabet, self.twist, self.name)
        if self.conjugator is not None:
            left, right = self.conjugator
            image = left.multiply(image).multiply(right)
        return image

    def apply(self, p: NCPoly, fuel: int = DEFAULT_FUEL) -> NCPoly:
        """Normal form of the image of ``p`` in the target."""
        return self.target.normalize(self.apply_raw(p), fuel)

    def image(self, generator: str, fuel: int = DEFAULT_FUEL) -> NCPoly:
        return self.apply(self.source.letter(generator), fuel)

    def with_image(self, generator: str, image: NCPoly) -> Morphism:
        """A copy with one generator image replaced."""
        images = dict(self.images)
        images[generator] = image
        return replace(self, name=f"{self.name}'", images=images)

    def verify_hom(self, fuel: int = DEFAULT_FUEL) -> Report:
        """Check that every source relation maps to zero.

        For each rule ``lhs -> rhs`` the residual is the normal form of
        ``apply_raw(lhs) - apply_raw(rhs)``; inverse pairs ``g*g^-1`` and
        ``g^-1*g`` must map to 1.
        """
        report = Report(f"hom {self.name}")
        alphabet = self.source.alphabet
        for rule in self.source.system.rules:
            lhs = NCPoly.monomial(alphabet, rule.lhs)
            residual = self.target.normalize(
                self.apply_raw(lhs) - self.apply_raw(rule.rhs), fuel
            )
            report.zero(f"rule {alphabet.display(rule.lhs)}", residual)
        for letter, inverse in inverse_pairs(self.source):
            for word in ((letter, inverse), (inverse, letter)):
                product = NCPoly.monomial(alphabet, alphabet.word(word))
                report.zero(
                    f"inverse {'*'.join(word)}", self.apply(product, fuel) - 1
                )
        logger.info(
            "%s: %d checks, %d failed", report.name, len(report), len(report.failures)
        )
        return report


def inverse_pairs(algebra: AlgebraSpec) -> list[tuple[str, str]]:
    """Generator pairs ``(g, g^-1)`` that are both letters."""
    names = algebra.alphabet.names
    return [(n, f"{n}^-1") for n in names if f"{n}^-1" in algebra.alphabet]


def compose(outer: Morphism, inner: Morphism, fuel: int = DEFAULT_FUEL) -> Morphism:
    """The morphism ``outer after inner`` with materialized images.

    Raises:
        ValueError: If ``inner.target`` is not ``outer.source``
    """
    if inner.target is not outer.source:
        raise ValueError(
            f"Cannot compose {outer.name} after {inner.name}: "
            f"{inner.target.name} is not {outer.source.name}"
        )
    images = {
        name: outer.apply(inner.apply_raw(inner.source.letter(name)), fuel)
        for name in inner.images
    }
    return Morphism(
        f"{outer.name}.{inner.name}",
        inner.source,
        outer.target,
        images,
        anti=outer.anti != inner.anti,
        twist=outer.twist != inner.twist,
    )


def power(m: Morphism, n: int, fuel: int = DEFAULT_FUEL) -> Morphism:
    """``m`` composed with itself ``n >= 1`` times."""
    result = m
    for _ in range(n - 1):
        result = compose(m, result, fuel)
    return replace(result, name=f"{m.name}^{n}")


def _resolve(algebra: AlgebraLike) -> AlgebraSpec:
    return get_algebra(algebra) if isinstance(algebra, str) else algebra


def _family(algebra: AlgebraSpec) -> str:
    return algebra.name.removesuffix("^-1")


def _from_table(
    name: str,
    source: AlgebraSpec,
    target: AlgebraSpec,
    table: Mapping[str, str],
    **options: object,
) -> Morphism:
    images = {generator: target.element(text) for generator, text in table.items()}
    return Morphism(name, source, target, images, **options)  # type: ignore[arg-type]


def identity(algebra: AlgebraLike) -> Morphism:
    spec = _resolve(algebra)
    images = {g: spec.letter(g) for g in spec.alphabet.names}
    return Morphism("id", spec, spec, images)


_DELTA_SWAP = {
    "A": "B",
    "B": "A",
    "C": "C",
    "Omega": "Omega",
    "alpha": "beta",
    "beta": "alpha",
    "gamma": "gamma",
}

DELTA_TABLES: dict[str, dict[str, str]] = {
    "rho": {
        "A": "B",
        "B": "C",
        "C": "A",
        "Omega": "Omega",
        "alpha": "beta",
        "beta": "gamma",
        "gamma": "alpha",
    },
    "sigma": {**_DELTA_SWAP, "C": "C'"},
    "dagger": _DELTA_SWAP,
    "xi": _DELTA_SWAP,
}

_HHAT_FIXED = {"t0": "t0", "T0": "T0", "T1": "T1", "T2": "T2", "T3": "T3"}
_HHAT_T_SWAP = {"T1": "T3", "T3": "T1"}

HHAT_TABLES: dict[str, dict[str, str]] = {
    "rho": {
        "X": "q^-1*Y^-1*t0*X^-1*t0",
        "X^-1": "q*t0^-1*X*t0^-1*Y",
        "Y": "X",
        "Y^-1": "X^-1",
        **_HHAT_FIXED,
        "T1": "T3",
        "T2": "T1",
        "T3": "T2",
    },
    "sigma": {
        "X": "t0^-1*Y*t0",
        "X^-1": "t0^-1*Y^-1*t0",
        "Y": "X",
        "Y^-1": "X^-1",
        **_HHAT_FIXED,
        **_HHAT_T_SWAP,
    },
    "z4": {
        "X": "Y",
        "X^-1": "Y^-1",
        "Y": "q^-1*X^-1",
        "Y^-1": "q*X",
        "t0": "t0^-1*Y",
        "T0": "T1",
        "T1": "T2",
        "T2": "T3",
        "T3": "T0",
    },
    "dagger": {
        "X": "Y",
        "X^-1": "Y^-1",
        "Y": "X",
        "Y^-1": "X^-1",
        **_HHAT_FIXED,
        **_HHAT_T_SWAP,
    },
    "xi": {
        "X": "Y^-1",
        "X^-1": "Y",
        "Y": "X^-1",
        "Y^-1": "X",
        **_HHAT_FIXED,
        "t0": "t0^-1",
        **_HHAT_T_SWAP,
    },
}


def _table(kind: str, algebra: AlgebraSpec) -> dict[str, str]:
    tables = DELTA_TABLES if _family(algebra) == "delta-q" else HHAT_TABLES
    if kind not in tables:
        raise UnknownName(kind, algebra.name, tuple(tables))
    return tables[kind]


@lru_cache(maxsize=None)
def _braid(kind: str, spec: AlgebraSpec) -> Morphism:
    if kind not in BRAID_GENERATORS:
        raise UnknownName(kind, spec.name, BRAID_GENERATORS)
    if kind == "tau":
        if _family(spec) == "delta-q":
            return replace(identity(spec), name="tau")
        images = {g: spec.letter(g) for g in spec.alphabet.names}
        conjugator = (spec.parse("t0^-1"), spec.letter("t0"))
        return Morphism("tau", spec, spec, images, conjugator=conjugator)
    return _from_table(kind, spec, spec, _table(kind, spec))


def braid(kind: str, algebra: AlgebraLike) -> Morphism:
    """One of the braid group generators ``rho``, ``sigma``, ``tau``.

    On Delta_q, tau is the identity. On Hhat_q it is conjugation
    ``h -> t0^-1 h t0``.

    Examples:
        >>> str(braid("rho", "delta").image("A"))
        'B'
    """
    return _braid(kind, _resolve(algebra))


@lru_cache(maxsize=None)
def z4() -> Morphism:
    """The order-four automorphism of Hhat_q with t0 -> t1 -> t2 -> t3 -> t0."""
    spec = hhat_q()
    return _from_table("z4", spec, spec, HHAT_TABLES["z4"])


@lru_cache(maxsize=None)
def _dagger(spec: AlgebraSpec) -> Morphism:
    return _from_table("dagger", spec, spec, _table("dagger", spec), anti=True)


def dagger(algebra: AlgebraLike) -> Morphism:
    """The antiautomorphism swapping A and B (X and Y on Hhat_q)."""
    return _dagger(_resolve(algebra))


@lru_cache(maxsize=None)
def _xi(spec: AlgebraSpec) -> Morphism:
    target = spec.q_inverted
    return _from_table("xi", spec, target, _table("xi", spec))


def xi(algebra: AlgebraLike) -> Morphism:
    """The isomorphism onto the q-inverted algebra.

    The map is linear over Q(q); the q-inversion lives in the target's rules.
    """
    return _xi(_resolve(algebra))


@lru_cache(maxsize=None)
def _bar(spec: AlgebraSpec) -> Morphism:
    images = {g: spec.q_inverted.letter(g) for g in spec.alphabet.names}
    return Morphism("bar", spec, spec.q_inverted, images, twist=True)


def bar(algebra: AlgebraLike) -> Morphism:
    """The semilinear map fixing every generator and sending q to q^-1."""
    return _bar(_resolve(algebra))


PSI_IMAGES = ("A", "B", "C", "Omega", "alpha", "beta", "gamma")


@lru_cache(maxsize=None)
def psi() -> Morphism:
    """The injection of Delta_q into Hhat_q.

    A -> Y + Y^-1, B -> X + X^-1, C -> t0 t2 + (t0 t2)^-1 and the central
    letters to their realizations in the T-subalgebra.
    """
    delta, hhat = delta_q(), hhat_q()
    images = {name: hhat.value(name) for name in PSI_IMAGES}
    return Morphism("psi", delta, hhat, images)


@lru_cache(maxsize=None)
def psi_inverted() -> Morphism:
    """The injection of Delta_{q^-1} into Hhat_{q^-1}."""
    base = psi()
    target = base.target.q_inverted
    images = {
        name: image.invert_q().with_alphabet(target.alphabet)
        for name, image in base.images.items()
    }
    return Morphism("psi'", base.source.q_inverted, target, images)


def _square_maps(kind: str) -> tuple[Morphism, Morphism, Morphism]:
    delta, hhat = delta_q(), hhat_q()
    if kind == "xi":
        return xi(delta), xi(hhat), psi_inverted()
    if kind == "dagger":
        return dagger(delta), dagger(hhat), psi()
    if kind in BRAID_GENERATORS:
        return braid(kind, delta), braid(kind, hhat), psi()
    raise UnknownName(kind, "squares", SQUARES)


def verify_square(kind: str, fuel: int = DEFAULT_FUEL) -> Report:
    """Check that psi intertwines a map on Delta_q with its Hhat_q partner.

    For each Delta_q generator u the residual is
    ``g_H(psi(u)) - psi'(g_D(u))``, with psi' the q-inverted psi for ``xi``.
    """
    on_delta, on_hhat, psi_after = _square_maps(kind)
    base = psi()
    report = Report(f"square {kind}")
    for name in base.source.alphabet.names:
        letter = base.source.letter(name)
        left = on_hhat.apply(base.apply(letter, fuel), fuel)
        right = psi_after.apply(on_delta.apply(letter, fuel), fuel)
        report.zero(name, on_hhat.target.normalize(left - right, fuel))
    logger.info("%s: %d failed", report.name, len(report.failures))
    return report


def _iterate(m: Morphism, p: NCPoly, times: int, fuel: int) -> NCPoly:
    for _ in range(times):
        p = m.apply(p, fuel)
    return p


def verify_braid_relation(fuel: int = DEFAULT_FUEL) -> Report:
    """rho^3 = sigma^2 = tau on both algebras, z4 of order four and the z4
    cycles C0 -> C1 -> C2 -> C3 -> C0, t0 -> t1 -> t2 -> t3 -> t0."""
    report = Report("braid")
    for spec in (delta_q(), hhat_q()):
        rho, sigma, tau = (braid(kind, spec) for kind in BRAID_GENERATORS)
        for name in spec.alphabet.names:
            letter = spec.letter(name)
            expected = tau.apply(letter, fuel)
            report.zero(
                f"{spec.name}: rho^3 = tau on {name}",
                spec.normalize(_iterate(rho, letter, 3, fuel) - expected, fuel),
            )
            report.zero(
                f"{spec.name}: sigma^2 = tau on {name}",
                spec.normalize(_iterate(sigma, letter, 2, fuel) - expected, fuel),
            )
    spec = hhat_q()
    order_four = z4()
    for name in spec.alphabet.names:
        letter = spec.letter(name)
        report.zero(
            f"z4^4 = id on {name}", _iterate(order_four, letter, 4, fuel) - letter
        )
    for cycle in (("C0", "C1", "C2", "C3"), ("t0", "t1", "t2", "t3")):
        for current, following in zip(cycle, cycle[1:] + cycle[:1]):
            residual = order_four.apply(spec.value(current), fuel) - spec.value(
                following
            )
            report.zero(f"z4: {current} -> {following}", residual)
    logger.info(
        "%s: %d checks, %d failed", report.name, len(report), len(report.failures)
    )
    return report


def verify_involutions(fuel: int = DEFAULT_FUEL) -> Report:
    """dagger twice and xi twice are the identity on both algebras."""
    report = Report("involutions")
    for spec in (delta_q(), hhat_q()):
        twice = {
            "dagger": compose(dagger(spec), dagger(spec), fuel),
            "xi": compose(xi(spec.q_inverted), xi(spec), fuel),
        }
        for label, composite in twice.items():
            for name, image in composite.images.items():
                report.zero(
                    f"{spec.name}: {label}^2 on {name}", image - spec.letter(name)
                )
    return report


@dataclass(frozen=True)
class InjectivityResult:
    """Outcome of the bounded-degree rank check for psi."""

    bound: int
    word_count: int
    rank: int
    method: str

    @property
    def injective(self) -> bool:
        return self.rank == self.word_count


def injectivity_rank(
    bound: int, method: str = "auto", fuel: int = DEFAULT_FUEL
) -> InjectivityResult:
    """Rank of psi on the Delta_q basis words of length at most ``bound``.

    Args:
        bound: Maximum word length
        method: Rank method passed to ``linalg.rank``
        fuel: Normalization fuel

    Returns:
        The word count and the rank of their images in the Hhat_q basis

    Raises:
        ValueError: For a negative bound or an unknown method
    """
    words = psi_images(bound, fuel)
    found, used = rank([dict(image.items()) for _, image in words], method)
    logger.info(
        "psi injectivity at bound %d: %d words, rank %d (%s)",
        bound,
        len(words),
        found,
        used,
    )
    return InjectivityResult(bound, len(words), found, used)


def psi_images(bound: int, fuel: int = DEFAULT_FUEL) -> list[tuple[Word, NCPoly]]:
    """psi-images of the Delta_q basis words of length at most ``bound``.

    Each image is the normal form of the image of its prefix times one letter
    image.
    """
    base = psi()
    delta, hhat = base.source, base.target
    letters = {g.id: base.image(g.name, fuel) for g in delta.alphabet}
    images: dict[Word, NCPoly] = {(): hhat.constant(1)}
    result = []
    for word in delta.enumerate_basis(bound):
        if word not in images:
            prefix = images[word[:-1]]
            images[word] = hhat.multiply(prefix, letters[word[-1]], fuel=fuel)
        result.append((word, images[word]))
    return result
