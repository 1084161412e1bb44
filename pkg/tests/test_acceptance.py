"""The eleven acceptance criteria, each run at its stated tolerance.

One pass/fail line per criterion is printed as the checks run and again in
the terminal summary.
"""

import pytest

from coserial.verify import ACCEPTANCE, default_seed

from conftest import ACCEPTANCE_LINES


@pytest.mark.parametrize("check", ACCEPTANCE, ids=[c.__name__ for c in ACCEPTANCE])
def test_criterion(check):
    result = check(default_seed())
    ACCEPTANCE_LINES.append((result.number, result.line()))
    print(result.line())
    for failure in result.failures:
        print("   ", failure)
    assert result.passed, result.line()


def test_all_eleven_present():
    assert len(ACCEPTANCE) == 11
