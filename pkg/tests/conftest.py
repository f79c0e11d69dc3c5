import sys

import pytest

from hatlab import make_game, omega_game
from hatlab.game import ColorSpace

CHAIN = [[1, 2, 3, 4], [2, 3, 4], [3, 4], [4], []]


@pytest.fixture
def g22():
    return make_game(2, 2)


@pytest.fixture
def g33():
    return make_game(3, 3)


@pytest.fixture
def g52():
    return make_game(5, 2, "complete", [1, 2, 2, 2, 2])


@pytest.fixture
def g52chain():
    return make_game(5, 2, CHAIN, [1, 2, 3, 4, 5])


@pytest.fixture
def g3dual():
    return make_game(3, 2, "complete", [1, 1, 2])


@pytest.fixture
def g5dual():
    return make_game(5, 2, "complete", [1, 1, 2, 2, 2])


@pytest.fixture
def omega_fep():
    return omega_game(ColorSpace.integers())


@pytest.fixture
def omega_hint():
    return omega_game(ColorSpace.integers(), innings={0: 1}, default=2)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
