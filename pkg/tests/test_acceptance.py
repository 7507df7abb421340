"""Acceptance suite: one test per criterion, at full default limits.

Each test prints its criterion's pass/fail line (visible with ``pytest -s``
or on failure) and enforces the criterion's wall-clock budget.
"""

import pytest

from mutvis.enumeration import EnumerationLimits
from mutvis.verify import CRITERION_NUMBERS, TIME_BUDGETS, run_criterion

LIMITS = EnumerationLimits()


@pytest.mark.parametrize("number", CRITERION_NUMBERS)
def test_criterion(number):
    result = run_criterion(number, LIMITS)
    print(result.line())
    assert result.status == "PASS", result.line()
    assert result.elapsed < TIME_BUDGETS[number], (
        f"criterion {number} took {result.elapsed:.1f}s, "
        f"budget {TIME_BUDGETS[number]:.0f}s"
    )


def test_reduced_limits_skip_instead_of_failing():
    small = EnumerationLimits(max_exhaustive_n=8)
    results = [run_criterion(number, small) for number in CRITERION_NUMBERS]
    assert all(r.status in ("PASS", "SKIPPED") for r in results)
    assert any(r.status == "SKIPPED" for r in results)
