"""The acceptance gate: every verification criterion, one test each.

Each test runs one named check at the default seed and asserts it passed,
printing a single PASS/FAIL line with the observed value.  Three checks
fail by design of honesty, not by accident: the step entropy at the largest
exactly computable length is still 0.078 nats above its limit (the gap
decays like 1/sqrt(n) and needs n in the thousands to reach 0.03), it stays
above log 3 until n = 21, and the length-14 per-letter growth reading is
8.65% above log 3.  Those finite-size facts are exact; see the README.
"""

import pytest

from dyckshift.verification import DEFAULT_SEED, SUITES, run_check

CRITERIA = (
    "cylinder-consistency",
    "balanced-law",
    "block-swap-exact",
    "entropy-identity",
    "entropy-limit-gap",
    "entropy-below-topological",
    "balanced-counts",
    "growth-rate",
    "extension-mass",
    "sampler-formula",
    "shift-invariance",
    "plus-invariance",
    "index-coincidence",
)


def test_criteria_registry_is_complete():
    assert SUITES["all"] == CRITERIA


@pytest.mark.parametrize("key", CRITERIA)
def test_criterion(key):
    result = run_check(key, DEFAULT_SEED)
    status = "PASS" if result.ok else "FAIL"
    print(f"{status} {key}: {result.observed}")
    assert result.ok, (
        f"{key}: observed {result.observed} (expected {result.expected}); "
        + "; ".join(result.detail)
    )
