import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

from ominus_duality import OminusAlgebra, boolean_difference, mv_chain, nm4
from ominus_duality.order import DistLattice

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def l3():
    return mv_chain(3)


@pytest.fixture
def nm():
    return nm4()


@pytest.fixture
def bool2():
    return boolean_difference(2)


@pytest.fixture
def chain2():
    return mv_chain(2)


@pytest.fixture
def weird3():
    """3-chain with 1 - h = h and h - h = h: a (-)-algebra that is not co-residuated."""
    return OminusAlgebra(DistLattice.chain(3, ["0", "h", "1"]), [[0, 0, 0], [1, 1, 0], [2, 1, 0]], "weird3")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
