"""Acceptance gate: one test per verification item.

Each test prints a single pass/fail line and asserts the item outcome.
Item 5 runs the full degreewise dimension table and takes a few minutes;
everything else is fast.
"""

import pytest

from arrinv import verify

_CACHE = {}


def _run(number):
    if number not in _CACHE:
        _CACHE[number] = verify.run_all({number})[0]
    return _CACHE[number]


def _report(item):
    status = "PASS" if item.passed else "FAIL"
    print("criterion %d [%s] %s: %s (%.1fs)"
          % (item.number, item.name, status, item.detail, item.seconds))
    assert item.passed, item.detail


@pytest.mark.parametrize("number", range(1, 11))
def test_criterion(number):
    _report(_run(number))
