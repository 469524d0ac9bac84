"""One test per acceptance criterion; each records a PASS/FAIL line."""
import pytest

from newtonfill import acceptance

from conftest import ACCEPTANCE_LINES


@pytest.mark.parametrize("number", sorted(acceptance.CRITERIA))
def test_criterion(number):
    result = acceptance.CRITERIA[number]()
    ACCEPTANCE_LINES.append(result.line())
    print(result.line())
    assert result.passed, result.measured
