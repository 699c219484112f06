import random
import sys

import pytest

from qflag.ncalg import algebra


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture(scope="session")
def A2():
    return algebra(2)


@pytest.fixture(scope="session")
def A3():
    return algebra(3)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num])
