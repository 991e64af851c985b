"""Acceptance gate: every verified claim runs once, one line per check.

Run with `pytest -v tests/test_acceptance.py` or through the CLI as
`chardeg verify --suite all`.  All comparisons are exact.
"""

import pytest

from chardeg.verify import CHECKS, run_checks

_RESULTS = {}


@pytest.fixture(scope="module")
def results():
    if not _RESULTS:
        for r in run_checks("all", seed=42):
            _RESULTS[r.name] = r
    return _RESULTS


@pytest.mark.parametrize("name", [name for name, _suite, _fn in CHECKS])
def test_acceptance(results, name):
    r = results[name]
    print(f"[{r.status.upper()}] {r.suite}/{r.name} ({r.elapsed:.1f}s)")
    assert r.status == "pass", f"{name}: expected {r.expected!r}, observed {r.observed!r}"


def test_every_check_ran_once(results):
    assert sorted(results) == sorted(name for name, _s, _f in CHECKS)
