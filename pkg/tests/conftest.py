"""Shared fixtures: commonly used root data and small weight factories."""

import pytest

from superhw import build_root_datum


@pytest.fixture(scope="session")
def d21():
    """su(1,1|1): p = q = n = 1."""
    return build_root_datum(1, 1, 1)


@pytest.fixture(scope="session")
def d22():
    """su(1,1|2): p = q = 1, n = 2."""
    return build_root_datum(1, 1, 2)


@pytest.fixture(scope="session")
def d32():
    """su(2,1|2)."""
    return build_root_datum(2, 1, 2)


@pytest.fixture(scope="session")
def d33():
    """su(2,1|3): m = n = 3, maximal defect 3."""
    return build_root_datum(2, 1, 3)
