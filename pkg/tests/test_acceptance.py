"""All acceptance criteria, one PASS/FAIL line each.

Runs under pytest, or directly: ``python tests/test_acceptance.py``.
"""

import sys

import pytest

from kitegraph.claims import CLAIMS, Context, run_claim

# criterion number -> claim id, with the stated wall-clock budget in seconds where one exists
CRITERIA = {
    1: ("lemma2.1", 1.0),
    2: ("lemma2.3", 30.0),
    3: ("lemma2.4", None),
    4: ("lemma2.8", None),
    5: ("lemma2.10", None),
    6: ("lemma2.11", None),
    7: ("lemma3.1", None),
    8: ("kite-bounds", None),
    9: ("theorem3.1:n<=9", 600.0),
    10: ("lemma2.13", None),
    11: ("census-counts", None),
    12: ("smallest-pair", None),
    13: ("lemma2.6", None),
    14: ("root-search", None),
}


def test_every_claim_is_a_criterion():
    assert sorted(c for c, _ in CRITERIA.values()) == sorted(CLAIMS)


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    claim, budget = CRITERIA[number]
    res = run_claim(claim, Context(seed=0))
    with capsys.disabled():
        print(f"\n[criterion {number:2d}] {res.line()}")
    assert res.passed, res.detail
    if budget is not None:
        assert res.seconds < budget, f"{claim} took {res.seconds:.1f}s, budget {budget}s"


if __name__ == "__main__":
    failed = 0
    for number in sorted(CRITERIA):
        res = run_claim(CRITERIA[number][0], Context(seed=0))
        failed += not res.passed
        print(f"[criterion {number:2d}] {res.line()}", flush=True)
    sys.exit(1 if failed else 0)
