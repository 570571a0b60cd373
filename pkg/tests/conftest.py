import random
from itertools import product

import pytest

from hypersym.hypermatrix import Hypermatrix

# a_{112}=1, a_{121}=-1, a_{221}=1, a_{122}=-1, all others 0
EXAMPLE_ENTRIES = {(1, 1, 2): 1, (1, 2, 1): -1, (2, 2, 1): 1, (1, 2, 2): -1}


def example_hypermatrix() -> Hypermatrix:
    return Hypermatrix.from_entries(2, 3, [EXAMPLE_ENTRIES.get(i, 0) for i in product((1, 2), repeat=3)])


@pytest.fixture
def example_A():
    return example_hypermatrix()


@pytest.fixture
def rng():
    return random.Random(20261017)


# PASS/FAIL lines recorded by the acceptance suite, echoed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
