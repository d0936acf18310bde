import pytest

from antiramsey import LatinRectangle

# a 3 x 7 blocker whose columns are the lines of the Fano plane
EXAMPLE_3x7 = [
    [0, 2, 4, 6, 1, 3, 5],
    [1, 3, 5, 0, 2, 4, 6],
    [3, 5, 0, 2, 4, 6, 1],
]

ACCEPTANCE_LINES = []


@pytest.fixture
def example():
    return LatinRectangle(EXAMPLE_3x7)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
