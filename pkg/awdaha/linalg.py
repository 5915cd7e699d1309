"""Exact linear algebra over Q(q) on sparse rows.

Rows are mappings column key -> scalar. ``rank`` first tries a modular
certificate (evaluate at a point modulo a prime; a full modular rank proves
full rank over Q(q)) and falls back to fraction-free elimination over Z[q].
"""

from __future__ import annotations

import logging
from collections.abc import Hashable, Mapping, Sequence
from typing import Any, TypeVar

from sympy.polys.rings import PolyElement

from .scalars import QQ_q, QScalar, divide

logger = logging.getLogger(__name__)

K = TypeVar("K", bound=Hashable)

MODULUS = 2_147_483_647
EVALUATION_POINT = 1_000_003
RANK_METHODS = ("auto", "exact", "modular")

_POLY_RING = QQ_q.ring


def clear_denominators(row: Mapping[K, QScalar]) -> dict[K, PolyElement]:
    """Scale a row by the lcm of its denominators; entries land in Z[q]."""
    common = _POLY_RING.one
    for value in row.values():
        common = common.lcm(value.denom)
    return {
        key: value.numer * common.exquo(value.denom) for key, value in row.items()
    }


def _evaluate(poly: PolyElement, point: int, modulus: int) -> int:
    return sum(int(c) * pow(point, m[0], modulus) for m, c in poly.terms()) % modulus


def rank_modular(
    rows: Sequence[Mapping[K, QScalar]],
    point: int = EVALUATION_POINT,
    modulus: int = MODULUS,
) -> int | None:
    """Rank of the rows specialized at ``q = point`` in GF(modulus).

    The result never exceeds the rank over Q(q).

    Returns:
        The modular rank, or None when a denominator vanishes at the point
    """
    reduced: dict[K, dict[K, int]] = {}
    for row in rows:
        current: dict[K, int] = {}
        for key, value in row.items():
            den = _evaluate(value.denom, point, modulus)
            if not den:
                return None
            entry = _evaluate(value.numer, point, modulus) * pow(den, -1, modulus)
            if entry % modulus:
                current[key] = entry % modulus
        while current:
            pivot = min(current, key=repr)
            basis = reduced.get(pivot)
            if basis is None:
                scale = pow(current[pivot], -1, modulus)
                reduced[pivot] = {k: v * scale % modulus for k, v in current.items()}
                break
            factor = current[pivot]
            for key, value in basis.items():
                entry = (current.get(key, 0) - factor * value) % modulus
                if entry:
                    current[key] = entry
                else:
                    current.pop(key, None)
    return len(reduced)


def rank_fraction_free(rows: Sequence[Mapping[K, QScalar]]) -> int:
    """Exact rank by Bareiss fraction-free elimination over Z[q].

    Each step replaces ``M[i][j]`` by
    ``(M[r][c] * M[i][j] - M[i][c] * M[r][j]) / previous_pivot``; the
    division is exact.
    """
    matrix = [clear_denominators(row) for row in rows if row]
    columns = sorted({key for row in matrix for key in row}, key=repr)
    previous = _POLY_RING.one
    rank = 0
    for column in columns:
        pivot_index = next(
            (i for i in range(rank, len(matrix)) if matrix[i].get(column)), None
        )
        if pivot_index is None:
            continue
        matrix[rank], matrix[pivot_index] = matrix[pivot_index], matrix[rank]
        pivot_row = matrix[rank]
        pivot = pivot_row[column]
        for i in range(rank + 1, len(matrix)):
            row = matrix[i]
            below = row.pop(column, None)
            updated: dict[K, PolyElement] = {}
            for key in set(row) | set(pivot_row):
                if key == column:
                    continue
                entry = pivot * row.get(key, _POLY_RING.zero)
                if below is not None:
                    entry -= below * pivot_row.get(key, _POLY_RING.zero)
                if entry:
                    updated[key] = entry.exquo(previous)
            matrix[i] = updated
        previous = pivot
        rank += 1
        logger.debug("fraction-free elimination: rank %d after column %r", rank, column)
    return rank


def rank(
    rows: Sequence[Mapping[K, QScalar]], method: str = "auto"
) -> tuple[int, str]:
    """Rank over Q(q).

    Args:
        rows: Sparse rows
        method: ``auto`` (modular certificate, exact fallback), ``exact`` or
            ``modular`` (a lower bound only)

    Returns:
        ``(rank, method actually used)``

    Raises:
        ValueError: For an unknown method
    """
    if method not in RANK_METHODS:
        raise ValueError(
            f"Unknown rank method '{method}'; expected one of {RANK_METHODS}"
        )
    if method in ("auto", "modular"):
        modular = rank_modular(rows)
        nonzero = sum(1 for row in rows if row)
        if method == "modular" and modular is not None:
            return modular, "modular"
        if modular is not None and modular == nonzero:
            return modular, "modular"
        logger.info(
            "modular rank %s of %d rows not conclusive, eliminating exactly",
            modular,
            nonzero,
        )
    return rank_fraction_free(rows), "exact"


def kernel(vectors: Sequence[Mapping[K, QScalar]]) -> list[dict[int, QScalar]]:
    """Basis of the linear relations among ``vectors``.

    Returns:
        Combinations ``{index: coefficient}`` with
        ``sum(c * vectors[index]) == 0``, in reduced row echelon form keyed by
        the largest index of each relation
    """
    # pivot column -> (row with 1 at pivot and 0 at other pivots, combination)
    basis: dict[K, tuple[dict[K, QScalar], dict[int, QScalar]]] = {}
    relations: list[dict[int, QScalar]] = []
    for index, vector in enumerate(vectors):
        row = {k: v for k, v in vector.items() if v}
        combination: dict[int, QScalar] = {index: QQ_q.one}
        for pivot, (pivot_row, pivot_combination) in basis.items():
            factor = row.get(pivot)
            if factor:
                _axpy(row, pivot_row, -factor)
                _axpy(combination, pivot_combination, -factor)
        if not row:
            relations.append(combination)
            continue
        pivot = min(row, key=repr)
        scale = divide(1, row[pivot])
        row = {k: v * scale for k, v in row.items()}
        combination = {k: v * scale for k, v in combination.items()}
        for other_row, other_combination in basis.values():
            factor = other_row.get(pivot)
            if factor:
                _axpy(other_row, row, -factor)
                _axpy(other_combination, combination, -factor)
        basis[pivot] = (row, combination)
    logger.debug("kernel: %d vectors, rank %d", len(vectors), len(basis))
    return reduced_echelon(relations)


def reduced_echelon(
    rows: Sequence[Mapping[int, QScalar]],
) -> list[dict[int, QScalar]]:
    """Reduced row echelon form with integer keys, pivot = largest key."""
    echelon: dict[int, dict[int, QScalar]] = {}
    for source in rows:
        row = {k: v for k, v in source.items() if v}
        for pivot, pivot_row in echelon.items():
            factor = row.get(pivot)
            if factor:
                _axpy(row, pivot_row, -factor)
        if not row:
            continue
        pivot = max(row)
        scale = divide(1, row[pivot])
        row = {k: v * scale for k, v in row.items()}
        for other_row in echelon.values():
            factor = other_row.get(pivot)
            if factor:
                _axpy(other_row, row, -factor)
        echelon[pivot] = row
    return [echelon[pivot] for pivot in sorted(echelon)]


def _axpy(
    target: dict[Any, QScalar], source: Mapping[Any, QScalar], factor: QScalar
) -> None:
    """target += factor * source, dropping zeros."""
    for key, value in source.items():
        entry = target.get(key, QQ_q.zero) + factor * value
        if entry:
            target[key] = entry
        else:
            target.pop(key, None)
