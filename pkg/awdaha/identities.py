"""Named identities of the two algebras, checked by normalizing ``lhs - rhs``.

Hhat_q identities use the derived names t0^-1, t1, t1^-1, ..., A, B, C, C',
alpha, beta, gamma, Omega, theta and C0..C3.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations

from .algebras import get_algebra, hhat_q
from .coeff_matrix import window_words
from .free_algebra import NCPoly
from .morphisms import braid
from .reports import Report
from .rewriting import DEFAULT_FUEL

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Identity:
    """``lhs = rhs`` in ``algebra``; with ``morphism`` set, the left side is
    the image of ``lhs`` under that braid generator."""

    name: str
    algebra: str
    lhs: str
    rhs: str
    morphism: str | None = None

    def residual(self, fuel: int = DEFAULT_FUEL) -> NCPoly:
        spec = get_algebra(self.algebra)
        left = spec.parse(self.lhs)
        if self.morphism is not None:
            left = braid(self.morphism, spec).apply_raw(left)
        return spec.normalize(left - spec.parse(self.rhs), fuel)


def _hhat(name: str, lhs: str, rhs: str) -> Identity:
    return Identity(name, "hhat", lhs, rhs)


_T0_SUM = "(q^-1*t0 + q*t0^-1)"

T_EXPRESSIONS = (
    _hhat("T0 = t0 + t0^-1", "T0", "t0 + t0^-1"),
    _hhat("T1 = t0^-1 Y + Y^-1 t0", "T1", "t0^-1*Y + Y^-1*t0"),
    _hhat("T1 = Y t0^-1 + t0 Y^-1", "T1", "Y*t0^-1 + t0*Y^-1"),
    _hhat("T2 = q t0^-1 YX + ...", "T2", "q*t0^-1*Y*X + q^-1*X^-1*Y^-1*t0"),
    _hhat("T2 = q X t0^-1 Y + ...", "T2", "q*X*t0^-1*Y + q^-1*Y^-1*t0*X^-1"),
    _hhat("T2 = q YX t0^-1 + ...", "T2", "q*Y*X*t0^-1 + q^-1*t0*X^-1*Y^-1"),
    _hhat("T3 = t0^-1 X + X^-1 t0", "T3", "t0^-1*X + X^-1*t0"),
    _hhat("T3 = X t0^-1 + t0 X^-1", "T3", "X*t0^-1 + t0*X^-1"),
    _hhat("T1 = t1 + t1^-1", "T1", "t1 + t1^-1"),
    _hhat("T2 = t2 + t2^-1", "T2", "t2 + t2^-1"),
    _hhat("T3 = t3 + t3^-1", "T3", "t3 + t3^-1"),
)

COMMUTATION = (
    _hhat("t0 X", "t0*X", "X^-1*t0 + X*T0 - T3"),
    _hhat("t0 X^-1", "t0*X^-1", "X*t0 - X*T0 + T3"),
    _hhat("t0 Y", "t0*Y", "Y^-1*t0 + Y*T0 - T1"),
    _hhat("t0 Y^-1", "t0*Y^-1", "Y*t0 - Y*T0 + T1"),
)

PRODUCTS = (
    _hhat("t0 t2", "t0*t2", "q^-1*t3^-1*T1 - q^-1*Y*X^-1"),
    _hhat("t0^-1 t2^-1", "t0^-1*t2^-1", "q*t1*T3 - q*X^-1*Y"),
    _hhat("t1 t3", "t1*t3", "q^-1*t0^-1*T2 - q^-2*X^-1*Y^-1"),
    _hhat("t1^-1 t3^-1", "t1^-1*t3^-1", "q*t2*T0 - Y^-1*X^-1"),
    _hhat("t2 t0", "t2*t0", "q^-1*t1^-1*T3 - q^-1*Y^-1*X"),
    _hhat("t2^-1 t0^-1", "t2^-1*t0^-1", "q*t3*T1 - q*X*Y^-1"),
    _hhat("t3 t1", "t3*t1", "q^-1*t2^-1*T0 - X*Y"),
    _hhat("t3^-1 t1^-1", "t3^-1*t1^-1", "q*t0*T2 - q^2*Y*X"),
    _hhat("t0 t1 t2 t3", "t0*t1*t2*t3", "q^-1"),
    _hhat("t1 t2 t3 t0", "t1*t2*t3*t0", "q^-1"),
    _hhat("t2 t3 t0 t1", "t2*t3*t0*t1", "q^-1"),
    _hhat("t3 t0 t1 t2", "t3*t0*t1*t2", "q^-1"),
)

C_FORMS = (
    _hhat(
        "C0",
        "C0",
        "q*T2*t0 + T3*t1 + q^-1*T0*t2 + T1*t3 - q^-1*T0*T2 - T1*T3",
    ),
    _hhat("C1", "C1", "T2*t0 + q*T3*t1 + T0*t2 + q^-1*T1*t3 - T0*T2 - q^-1*T1*T3"),
    _hhat(
        "C2",
        "C2",
        "q^-1*T2*t0 + T3*t1 + q*T0*t2 + T1*t3 - q^-1*T0*T2 - T1*T3",
    ),
    _hhat("C3", "C3", "T2*t0 + q^-1*T3*t1 + T0*t2 + q*T1*t3 - T0*T2 - q^-1*T1*T3"),
)


def _symmetric_products() -> tuple[Identity, ...]:
    identities = []
    for i, j in combinations(range(4), 2):
        forward = f"t{i}*t{j} + t{j}^-1*t{i}^-1"
        backward = f"t{j}*t{i} + t{i}^-1*t{j}^-1"
        identities.append(_hhat(f"t{i}t{j} symmetric", forward, backward))
        for k in (i, j):
            identities.append(
                _hhat(
                    f"t{k} commutes with t{i}t{j} + (t{i}t{j})^-1",
                    f"t{k}*({forward})",
                    f"({forward})*t{k}",
                )
            )
    return tuple(identities)


SYMMETRIC_PRODUCTS = _symmetric_products()

ABC_FORMS = (
    _hhat("A = t1 t0 + (t1 t0)^-1", "A", "t1*t0 + t0^-1*t1^-1"),
    _hhat("A = t0 t1 + (t0 t1)^-1", "A", "t0*t1 + t1^-1*t0^-1"),
    _hhat("B = t3 t0 + (t3 t0)^-1", "B", "t3*t0 + t0^-1*t3^-1"),
    _hhat("B = t0 t3 + (t0 t3)^-1", "B", "t0*t3 + t3^-1*t0^-1"),
    _hhat("B = X + X^-1", "B", "X + X^-1"),
    _hhat("C = t2 t0 + (t2 t0)^-1", "C", "t2*t0 + t0^-1*t2^-1"),
    _hhat("C expanded", "C", "(q*t3 + q^-1*t3^-1)*T1 - q*X*Y^-1 - q^-1*Y*X^-1"),
    _hhat("C' expanded", "C'", "T0*T2 - q*Y*X - q^-1*X^-1*Y^-1"),
    _hhat("qC + q^-1C' + AB", "q*C + q^-1*C' + A*B", f"{_T0_SUM}*T2 + T1*T3"),
    _hhat("q^-1C + qC' + BA", "q^-1*C + q*C' + B*A", f"{_T0_SUM}*T2 + T1*T3"),
    _hhat("alpha", "alpha", f"{_T0_SUM}*T1 + T2*T3"),
    _hhat("beta", "beta", f"{_T0_SUM}*T3 + T1*T2"),
    _hhat("gamma", "gamma", f"{_T0_SUM}*T2 + T1*T3"),
    _hhat(
        "X^-1 C",
        "X^-1*C",
        "q^-2*C*(X + X^-1) - X*C - q^-1*(q^2 - q^-2)*(Y + Y^-1)"
        " + q^-1*(q - q^-1)*alpha",
    ),
    _hhat("qC = gamma - theta t0^-1", "q*C", "gamma - theta*t0^-1"),
    _hhat(
        "Casimir image",
        "q^-1*A*C*B + q^-2*A^2 + q^-2*B^2 + q^2*C^2"
        " - q^-1*A*alpha - q^-1*B*beta - q*C*gamma",
        "Omega",
    ),
)

T0_MAP = (
    _hhat("t0 h - h t0^-1 at 1", "t0 - t0^-1", "t0 - t0^-1"),
    _hhat("t0 h - h t0^-1 at X", "t0*X - X*t0^-1", "B*t0 - T3"),
    _hhat("t0 h - h t0^-1 at Y", "t0*Y - Y*t0^-1", "A*t0 - T1"),
    _hhat(
        "t0 h - h t0^-1 at YX",
        "t0*Y*X - Y*X*t0^-1",
        "q*(C*t0 - T2) + (A*B - T1*T3)*t0",
    ),
    _hhat(
        "(AB - T1 T3) t0 expanded",
        "(A*B - T1*T3)*t0",
        "A*(B*t0 - T3) + (A*t0 - T1)*t0*T3 - A*t0*(t0 - t0^-1)*T3",
    ),
)

SIGMA_IMAGES = (
    Identity("sigma(C) = C'", "hhat", "C", "C'", "sigma"),
    Identity("sigma(t1 t3)", "hhat", "t1*t3", "q^-1*t0^-1*t2^-1", "sigma"),
    Identity("sigma(t3^-1 t1^-1)", "hhat", "t3^-1*t1^-1", "q*t2*t0", "sigma"),
    Identity("sigma(t0 t2)", "hhat", "t0*t2", "q^-1*t3^-1*t1^-1", "sigma"),
    Identity("sigma(t2^-1 t0^-1)", "hhat", "t2^-1*t0^-1", "q*t1*t3", "sigma"),
    Identity("sigma(C) = C' in delta", "delta", "C", "C'", "sigma"),
)

DELTA_RELATIONS = (
    Identity(
        "alpha relation",
        "delta",
        "A + (q*B*C - q^-1*C*B)/(q^2 - q^-2)",
        "alpha/(q + q^-1)",
    ),
    Identity(
        "beta relation",
        "delta",
        "B + (q*C*A - q^-1*A*C)/(q^2 - q^-2)",
        "beta/(q + q^-1)",
    ),
    Identity(
        "gamma relation",
        "delta",
        "C + (q*A*B - q^-1*B*A)/(q^2 - q^-2)",
        "gamma/(q + q^-1)",
    ),
    Identity(
        "Casimir",
        "delta",
        "q^-1*A*C*B + q^-2*A^2 + q^-2*B^2 + q^2*C^2"
        " - q^-1*A*alpha - q^-1*B*beta - q*C*gamma",
        "Omega",
    ),
)

IDENTITY_GROUPS: dict[str, tuple[Identity, ...]] = {
    "T expressions": T_EXPRESSIONS,
    "t0 commutation": COMMUTATION,
    "products": PRODUCTS,
    "C_i": C_FORMS,
    "symmetric products": SYMMETRIC_PRODUCTS,
    "A, B, C": ABC_FORMS,
    "t0 h - h t0^-1": T0_MAP,
    "sigma images": SIGMA_IMAGES,
    "delta relations": DELTA_RELATIONS,
}


def all_identities() -> list[Identity]:
    return [identity for group in IDENTITY_GROUPS.values() for identity in group]


def verify_identities(
    groups: tuple[str, ...] | None = None, fuel: int = DEFAULT_FUEL
) -> Report:
    """Normalize every identity of the selected groups (all by default)."""
    report = Report("identities")
    for group in groups or tuple(IDENTITY_GROUPS):
        for identity in IDENTITY_GROUPS[group]:
            report.zero(identity.name, identity.residual(fuel), detail=group)
    logger.info(
        "%s: %d checks, %d failed", report.name, len(report), len(report.failures)
    )
    return report


def verify_t0_map(bound: int = 1, fuel: int = DEFAULT_FUEL) -> Report:
    """``t0 h - h t0^-1`` commutes with t0 for every window word h."""
    algebra = hhat_q()
    t0, t0_inverse = algebra.letter("t0"), algebra.value("t0^-1")
    report = Report("identities")
    for word in window_words(bound, 0):
        h = algebra.word(word)
        image = algebra.normalize(t0.multiply(h) - h.multiply(t0_inverse), fuel)
        label = algebra.display(word) or "1"
        report.zero(
            f"t0 h - h t0^-1 centralizes t0 at {label}",
            algebra.commutator(t0, image, fuel),
        )
    return report
