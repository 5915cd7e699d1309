"""Named verification suites, run by ``awdaha verify <suite>``.

Each suite returns a ``Report``; ``all`` merges every suite in order.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from itertools import product

from .algebras import AlgebraSpec, delta_q, hhat_q
from .coeff_matrix import (
    center_kernel,
    verify_centralizer_presentation,
    verify_matrices,
    verify_t0_centralizer,
)
from .errors import UnknownName
from .free_algebra import Word
from .identities import verify_identities, verify_t0_map
from .morphisms import (
    SQUARES,
    braid,
    dagger,
    injectivity_rank,
    psi,
    verify_braid_relation,
    verify_involutions,
    verify_square,
    xi,
    z4,
)
from .reports import Report, merge
from .rewriting import DEFAULT_FUEL

logger = logging.getLogger(__name__)

DELTA_RESOLUTIONS = {
    "B*C*A": "q^-3*(q^2 - q^-2)*Omega + q^-6*A*C*B - q^-3*(q^4 - q^-4)*A^2"
    " - q^-3*(q^4 - q^-4)*B^2 + q^-3*(q^3 - q^-3)*A*alpha"
    " + q^-3*(q^3 - q^-3)*B*beta + q^-3*(q - q^-1)*C*gamma",
    "B*C*C": "q^-6*B*Omega - q^-7*A*C*B^2 - q^-8*A^2*B - q^-8*B^3"
    " + q^-7*A*B*alpha + q^-7*B^2*beta + q^-5*C*B*gamma"
    " - q^-3*(q^4 - q^-4)*A*C + q^-2*(q^2 - q^-2)*C*alpha"
    " + q^-4*(q^2 - q^-2)^2*B - q^-4*(q - q^-1)*(q^2 - q^-2)*beta",
    "C*C*A": "q^-6*A*Omega - q^-7*A^2*C*B - q^-8*A*B^2 - q^-8*A^3"
    " + q^-7*A^2*alpha + q^-7*A*B*beta + q^-5*A*C*gamma"
    " - q^-3*(q^4 - q^-4)*C*B + q^-2*(q^2 - q^-2)*C*beta"
    " + q^-4*(q^2 - q^-2)^2*A - q^-4*(q - q^-1)*(q^2 - q^-2)*alpha",
}

HHAT_RESOLUTIONS = {
    "t0*X*Y": "q^2*Y*X*T0 + q^-2*Y*X^-1*T0 + q^2*Y^-1*X^-1*t0 + q^2*Y^-1*X*T0"
    " - q^2*X*T1 + (q^-2 - 1)*X*T0^2*T1 + (1 - q^-2)*X*t0*T0*T1 - X^-1*T1"
    " - Y*T3 - q^2*Y^-1*T3 - (q - q^-1)*t0*T0*T2 + (1 - q^-2)*T0*T1*T3 + q*T2",
    "t0*X^-1*Y": "q^-2*Y^-1*X*t0 - q^-2*Y^-1*X*T0 + Y*T3 + q^-2*Y^-1*T3"
    " - q^-1*T2",
    "t0*X*Y^-1": "q^-2*Y*X^-1*t0 - q^-2*Y*X^-1*T0 + (q^-2 - 1)*X*t0*T0*T1"
    " + (1 - q^-2)*X*T0^2*T1 + q^-2*X*T1 + X^-1*T1 + (1 - q^-2)*t0*T1*T3"
    " + (q^-2 - 1)*T0*T1*T3 - q^-1*T2",
    "t0*X^-1*Y^-1": "q^2*Y*X*t0 - q^2*Y*X*T0 + q*T2",
    "t0*t0*X": "X^-1*t0*T0 + X*T0^2 - X - T0*T3",
    "t0*t0*X^-1": "X*t0*T0 - X*T0^2 - X^-1 + T0*T3",
    "t0*t0*Y": "Y^-1*t0*T0 + Y*T0^2 - Y - T0*T1",
    "t0*t0*Y^-1": "Y*t0*T0 - Y*T0^2 - Y^-1 + T0*T1",
    "X*X^-1*Y": "Y",
    "X*X^-1*Y^-1": "Y^-1",
    "X^-1*X*Y": "Y",
    "X^-1*X*Y^-1": "Y^-1",
    "X*Y*Y^-1": "X",
    "X*Y^-1*Y": "X",
    "X^-1*Y*Y^-1": "X^-1",
    "X^-1*Y^-1*Y": "X^-1",
    "t0*X*X^-1": "t0",
    "t0*X^-1*X": "t0",
    "t0*Y*Y^-1": "t0",
    "t0*Y^-1*Y": "t0",
}

BASIS_COUNTS = {"delta-q": 27, "hhat-q": 42}
INJECTIVITY_COUNTS = {2: 35, 3: 112}
DELTA_CENTRAL = ("Omega", "alpha", "beta", "gamma")


def _word(algebra: AlgebraSpec, text: str) -> Word:
    return algebra.alphabet.word(name.strip() for name in text.split("*"))


def confluence_suite(fuel: int = DEFAULT_FUEL) -> Report:
    """Every overlap of both algebras and their q-inverted siblings resolves;
    the displayed resolutions match exactly."""
    report = Report("confluence")
    for algebra in (delta_q(), hhat_q()):
        for spec in (algebra, algebra.q_inverted):
            for entry in spec.system.check_confluence(fuel):
                report.record(
                    f"{spec.name}: {spec.display(entry.word)}",
                    entry.resolved,
                    entry.residual,
                )
    for algebra, expected in (
        (delta_q(), DELTA_RESOLUTIONS),
        (hhat_q(), HHAT_RESOLUTIONS),
    ):
        overlaps = set(algebra.system.overlaps())
        for text, resolution in expected.items():
            word = _word(algebra, text)
            label = f"{algebra.name}: resolution of {algebra.display(word)}"
            if word not in overlaps:
                report.record(label, False, detail="not an overlap")
                continue
            left = algebra.system.resolve(word, fuel).left
            report.zero(label, left - algebra.element(resolution, fuel))
    return report


def psi_suite(fuel: int = DEFAULT_FUEL) -> Report:
    """psi maps every Delta_q relation to zero; the C^2 rule is the Casimir
    identity."""
    return merge("psi", [psi().verify_hom(fuel)])


def braid_suite(fuel: int = DEFAULT_FUEL) -> Report:
    """The braid generators, z4, dagger and xi respect the relations of their
    source algebras; rho^3 = sigma^2 = tau; dagger and xi are involutions."""
    reports = []
    for spec in (delta_q(), hhat_q()):
        for kind in ("rho", "sigma", "tau"):
            reports.append(braid(kind, spec).verify_hom(fuel))
        reports.append(dagger(spec).verify_hom(fuel))
        reports.append(xi(spec).verify_hom(fuel))
    reports.append(z4().verify_hom(fuel))
    reports.append(verify_braid_relation(fuel))
    reports.append(verify_involutions(fuel))
    return merge("braid", reports)


def squares_suite(fuel: int = DEFAULT_FUEL) -> Report:
    """psi intertwines rho, sigma, tau, dagger and xi."""
    return merge("squares", [verify_square(kind, fuel) for kind in SQUARES])


def matrices_suite(fuel: int = DEFAULT_FUEL) -> Report:
    return verify_matrices(fuel=fuel)


def injectivity_suite(
    fuel: int = DEFAULT_FUEL, bounds: tuple[int, ...] = (2, 3)
) -> Report:
    """psi has full rank on the Delta_q basis words up to each bound."""
    report = Report("injectivity")
    for bound in bounds:
        result = injectivity_rank(bound, fuel=fuel)
        expected = INJECTIVITY_COUNTS.get(bound, result.word_count)
        report.record(
            f"bound {bound}",
            result.injective and result.word_count == expected,
            detail=f"{result.word_count} words, rank {result.rank} ({result.method})",
        )
    return report


def centralizer_suite(fuel: int = DEFAULT_FUEL) -> Report:
    return merge(
        "centralizer",
        [verify_t0_centralizer(3, fuel), verify_centralizer_presentation(fuel=fuel)],
    )


def center_suite(fuel: int = DEFAULT_FUEL) -> Report:
    """The bounded window of Hhat_q has central part spanned by 1, T0..T3;
    central letters of Delta_q are central and A, B, C are not."""
    report = Report("center")
    hhat = hhat_q()
    found = center_kernel(2, 1, fuel)
    expected = {hhat.constant(1)} | {hhat.letter(f"T{i}") for i in range(4)}
    report.record(
        "window |i|, |j| <= 2, T-degree <= 1",
        set(found.kernel) == expected and len(found.kernel) == len(expected),
        detail=f"{len(found.domain)} words, rank {found.rank}",
    )
    delta = delta_q()
    for name in DELTA_CENTRAL:
        report.record(
            f"{name} is central in delta-q", delta.is_central(delta.letter(name), fuel)
        )
    for name in ("A", "B", "C"):
        report.record(
            f"{name} is not central in delta-q",
            not delta.is_central(delta.letter(name), fuel),
        )
    for name in ("T0", "T1", "T2", "T3"):
        report.record(
            f"{name} is central in hhat-q", hhat.is_central(hhat.letter(name), fuel)
        )
    return report


def identities_suite(fuel: int = DEFAULT_FUEL) -> Report:
    reports = [verify_identities(fuel=fuel), verify_t0_map(1, fuel)]
    return merge("identities", reports)


def basis_suite(fuel: int = DEFAULT_FUEL, max_length: int = 4) -> Report:
    """Irreducible-word counts agree with the basis parameterizations and with
    brute-force filtering."""
    report = Report("basis")
    for algebra in (delta_q(), hhat_q()):
        for length in range(max_length + 1):
            words = algebra.basis_words(length)
            expected = algebra.shape.count(length)
            report.record(
                f"{algebra.name}: length {length}",
                len(words) == expected,
                detail=f"{len(words)} words, expected {expected}",
            )
        count = len(algebra.basis_words(2))
        report.record(
            f"{algebra.name}: {BASIS_COUNTS[algebra.name]} words of length 2",
            count == BASIS_COUNTS[algebra.name],
        )
        letters = range(len(algebra.alphabet))
        for length in range(4):
            brute = {
                word
                for word in product(letters, repeat=length)
                if algebra.system.is_irreducible(word)
            }
            report.record(
                f"{algebra.name}: brute force at length {length}",
                brute == set(algebra.basis_words(length)),
            )
    return report


SUITES: dict[str, Callable[[int], Report]] = {
    "confluence": confluence_suite,
    "psi": psi_suite,
    "braid": braid_suite,
    "squares": squares_suite,
    "matrices": matrices_suite,
    "injectivity": injectivity_suite,
    "centralizer": centralizer_suite,
    "center": center_suite,
    "identities": identities_suite,
    "basis": basis_suite,
}


def run_suite(name: str, fuel: int = DEFAULT_FUEL) -> Report:
    """Run one suite by name, or every suite for ``all``.

    Raises:
        UnknownName: For a name that is neither a suite nor ``all``
    """
    if name == "all":
        return merge("all", [run_suite(suite, fuel) for suite in SUITES])
    if name not in SUITES:
        raise UnknownName(name, "suites", (*SUITES, "all"))
    logger.info("running suite %s", name)
    report = SUITES[name](fuel)
    logger.info(
        "suite %s: %d checks, %d failed", name, len(report), len(report.failures)
    )
    return report
