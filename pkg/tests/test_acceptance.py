"""Acceptance gate: every suite at its full pinned scale, all checks exact.

Each test prints one pass/fail line; run `pytest tests/test_acceptance.py -v -s`
to see them, or `arbor selftest` for the same suites behind the CLI.
"""

import pytest

from arbor.selftest import SUITES, RunConfig

CONFIG = RunConfig(seed=2026, size_bound=8, sample_count=200)

CRITERIA = [
    # (criterion, suite, minimum cases the suite must have exercised)
    ("1 canonical-form completeness (rooted+unrooted <= 8)", "canon-complete", 40_000 + 2_304),
    ("2 orbit-tree conjugacy vs oracle (rooted <= 7)", "rooted-conjugacy", 500_000),
    ("3 center-reduced conjugacy vs oracle (unrooted <= 7)", "unrooted-conjugacy", 500_000),
    ("4 rooted embedding shadow (200 pairs <= 6)", "rooted-embedding", 200),
    ("5 edge-inversion transfer (100 pairs <= 7)", "type-a-transfer", 100),
    ("6 widget coding: degrees, roundtrip, equivariance (50 sets)", "widget-coding", 50),
    ("7 unrooted embedding fixed sets (50 + 20 cases)", "unrooted-embedding", 70),
    ("8 ball classification (100 per type, conjugation-stable)", "ball-classification", 300),
    ("9 cycle types and nested invariants vs oracle", "bounded-height", 1_600_000),
    ("10 integer-line windows: roundtrip and shift law (100)", "z-line", 100),
]


@pytest.mark.parametrize("criterion,suite,min_cases", CRITERIA, ids=[c[1] for c in CRITERIA])
def test_acceptance(criterion, suite, min_cases):
    result = SUITES[suite](CONFIG)
    status = "PASS" if not result.failures else "FAIL"
    print(f"ACCEPTANCE {criterion}: {status} ({result.cases} cases, {len(result.failures)} failures)")
    assert result.cases >= min_cases, f"suite ran only {result.cases} cases"
    assert result.failures == [], result.failures[:5]
