"""Shared fixtures."""

import pytest

from awdaha.algebras import AlgebraSpec, delta_q, hhat_q
from awdaha.morphisms import Morphism, psi


@pytest.fixture(scope="session")
def delta() -> AlgebraSpec:
    return delta_q()


@pytest.fixture(scope="session")
def hhat() -> AlgebraSpec:
    return hhat_q()


@pytest.fixture(scope="session")
def psi_map() -> Morphism:
    return psi()
