import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from semicat.gallery import m3, mat2, walking_idempotent, z2, z2xz2  # noqa: E402
from semicat.kernel import product_category, terminal_category  # noqa: E402

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
FIXTURES = os.path.join(ROOT, "fixtures")


@pytest.fixture(scope="session")
def M3():
    return m3()


@pytest.fixture(scope="session")
def W():
    return walking_idempotent()


@pytest.fixture(scope="session")
def ONE():
    return terminal_category()


@pytest.fixture(scope="session")
def Z2():
    return z2()


@pytest.fixture(scope="session")
def MAT2():
    return mat2()


@pytest.fixture(scope="session")
def Z2Z2():
    return z2xz2()


@pytest.fixture(scope="session")
def M3M3(M3):
    return product_category(M3, M3)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
