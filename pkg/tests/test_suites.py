"""Seeded property suites at small trial counts."""
import pytest

from spin4.builders import build_boundary_simplex, cone
from spin4.suites import SUITES, verify_suite

QUICK = {"cupi": 60, "lifts": 10, "natural-ops": 200, "group-laws": 3, "relations": 2, "suspension": 30}


@pytest.mark.parametrize("name", sorted(QUICK))
def test_suite_passes(name):
    rep = verify_suite(name, trials=QUICK[name], seed=1)
    failed = [k for k, ok in rep.checks.items() if not ok]
    assert rep.passed, failed
    assert rep.checks and all(rep.expected[k] > 0 for k in rep.checks)


def test_suites_are_deterministic():
    a = verify_suite("cupi", trials=30, seed=7).to_json()
    b = verify_suite("cupi", trials=30, seed=7).to_json()
    a.pop("wall_time"), b.pop("wall_time")
    assert a == b


def test_filtration_suite_on_a_given_complex():
    rep = verify_suite("filtration", trials=1, seed=0, cx=cone(build_boundary_simplex(3)))
    assert rep.passed
    assert rep.values["given complex"]["qh4_order"] == 1


def test_unknown_suite_and_bad_trials():
    assert "filtration" in SUITES
    with pytest.raises(ValueError):
        verify_suite("nope")
    with pytest.raises(ValueError):
        verify_suite("cupi", trials=-1)
