import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from specinv import OscBarrier, PotentialShape, Power, default_coupling_grid, sample_trajectory


@pytest.fixture(scope="session")
def osc():
    return PotentialShape(Power(1))


@pytest.fixture(scope="session")
def barrier():
    return PotentialShape(OscBarrier(1, 1, 1))


@pytest.fixture(scope="session")
def osc_traj(osc):
    return sample_trajectory(osc, default_coupling_grid())


@pytest.fixture(scope="session")
def barrier_traj(barrier):
    return sample_trajectory(barrier, default_coupling_grid())


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(acceptance.RESULTS):
        terminalreporter.write_line(acceptance.RESULTS[number])
