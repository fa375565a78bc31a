import pytest

from theta_forge.suites import SUITES, CheckResult, default_config, run_suite, run_suites

SMALL = default_config(k_max=1, weight_max=4, basis_samples=10)


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_passes_on_a_small_grid(name):
    results = run_suite(name, SMALL)
    assert results
    for res in results:
        assert res.passed, (res.name, res.failures)
        assert res.cases > 0, res.name


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope", SMALL)


def test_check_result_records_first_failures_only():
    res = CheckResult("demo")
    for i in range(10):
        res.record(i % 2 == 0, i)
    assert res.cases == 10
    assert res.failures == [1, 3, 5, 7, 9]
    assert not res.passed
    assert res.to_json()["pass"] is False


def test_run_suites_is_deterministic():
    cfg = default_config(k_max=1, weight_max=3, seed=7, basis_samples=5)
    a = run_suites(["divdiff", "basis"], cfg)
    b = run_suites(["divdiff", "basis"], cfg)
    strip = lambda r: {n: [(c.name, c.cases, c.failures) for c in v] for n, v in r.items()}  # noqa: E731
    assert strip(a) == strip(b)
