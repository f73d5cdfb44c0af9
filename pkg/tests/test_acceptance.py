"""One test per acceptance criterion; each prints a PASS/FAIL line."""

import pytest

from ratsign import verify

from conftest import ACCEPTANCE_LINES


@pytest.mark.parametrize("name, check", verify.CHECKS, ids=[n for n, _ in verify.CHECKS])
def test_criterion(name, check):
    result = verify.run_check(name, check)
    ACCEPTANCE_LINES.append((name, result.line()))
    print(result.line())
    assert result.passed, result.detail
