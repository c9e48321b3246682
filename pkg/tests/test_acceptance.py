"""The numbered acceptance battery, one test per criterion."""

import pytest

from fusion_paths.characters import l_matrix, verify_left_recursion
from fusion_paths.suite import CRITERIA, format_line, run_criterion

# The left recursion fails with the left matrix as stated; see the project notes.
KNOWN_FAILURES = {7: "left recursion fails with the stated q^i' column factor"}


def _param(c):
    marks = [pytest.mark.xfail(strict=True, reason=KNOWN_FAILURES[c.number])] if c.number in KNOWN_FAILURES else []
    return pytest.param(c, id=f"criterion_{c.number:02d}_{c.name.replace(' ', '_')}", marks=marks)


@pytest.mark.parametrize("criterion", [_param(c) for c in CRITERIA])
def test_criterion(criterion, capsys):
    result = run_criterion(criterion)
    with capsys.disabled():
        print("\n" + format_line(result))
    assert result["passed"], result["detail"]


def test_left_recursion_with_regraded_matrix():
    for k in (1, 2, 3):
        L0 = l_matrix(k, from_gradings=True)
        for N in range(1, 6):
            for l in range(k + 1):
                assert verify_left_recursion(k, l, N, L0)
