import random

import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20161014)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
