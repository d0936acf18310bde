"""Runs every acceptance criterion at its stated time budget.

Each criterion prints one PASS/FAIL line; the lines are also collected into
the terminal summary.  Run directly with ``python tests/test_acceptance.py``.
"""

import pytest

from antiramsey.acceptance import CRITERIA, run_criterion

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # direct execution
    ACCEPTANCE_LINES = []


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA], ids=[f"criterion_{c[0]:02d}" for c in CRITERIA])
def test_criterion(number):
    result = run_criterion(number)
    line = result.line()
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert result.passed, line


if __name__ == "__main__":
    import sys

    failed = 0
    for num, *_ in CRITERIA:
        res = run_criterion(num)
        print(res.line(), flush=True)
        failed += not res.passed
    sys.exit(1 if failed else 0)
