import numpy as np
import pytest

from cgmy_atm import CgmyParams

BENCH = dict(C=0.5, G=2.0, M=3.6, Y=1.5)


@pytest.fixture
def pure():
    return CgmyParams(sigma=0.0, **BENCH)


@pytest.fixture
def mixed():
    return CgmyParams(sigma=0.4, **BENCH)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


_ACCEPTANCE = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line: ``criterion(passed, detail)``."""

    def report(passed, detail):
        _ACCEPTANCE.append((request.node.name, bool(passed), detail))
        return passed

    return report


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}: {detail}")
