"""Shared fixtures: algebra contexts and centre bases are expensive, build once."""

import pytest

from hecke import as_context, gamma_basis


@pytest.fixture(scope="session")
def ctx3():
    return as_context(3)


@pytest.fixture(scope="session")
def ctx4():
    return as_context(4)


@pytest.fixture(scope="session")
def gb3(ctx3):
    return gamma_basis(ctx3)


@pytest.fixture(scope="session")
def gb4(ctx4):
    return gamma_basis(ctx4)
