"""Exit criteria; run with ``pytest tests/test_acceptance.py -s`` to see the table."""

import pytest

from homflygamma import checks

CRITERIA = [
    checks.check_defining_relations,
    checks.check_closed_forms,
    checks.check_structure,
    checks.check_alexander,
    checks.check_homfly,
    checks.check_theorem1,
    checks.check_stanford,
    checks.check_dimensions,
    checks.check_reconstruction,
    checks.check_performance,
]


@pytest.mark.parametrize("check", CRITERIA, ids=lambda c: c.__name__)
def test_criterion(check):
    result = check()
    print(result.line())
    assert result.passed, result.detail


def test_hecke_cache_cannot_mask_invariance():
    # the invariance checks must evaluate every word from scratch
    from homflygamma.hecke import clear_cache

    clear_cache()
    assert checks.check_defining_relations(count=50, seed=99).passed
