import numpy as np
import pytest

from specball import codec
from specball.matrix import InputError
from specball.suites import (
    SUITES,
    SuiteConfig,
    case_rng,
    charpoly_by_cofactors,
    digest,
    run_suite,
)


def test_config_validation():
    with pytest.raises(InputError):
        SuiteConfig("nope")
    with pytest.raises(InputError):
        SuiteConfig("fiber", n_range=(1, 3))
    with pytest.raises(InputError):
        SuiteConfig("fiber", cases=0)
    with pytest.raises(InputError):
        SuiteConfig("fiber", radius=1.0)
    with pytest.raises(InputError):
        SuiteConfig("fiber", seed=-1)
    with pytest.raises(InputError):
        SuiteConfig("fiber", tolerances={"sigma": 0})
    with pytest.raises(InputError):
        SuiteConfig("fiber", tolerances={"bogus": 1.0})


def test_config_tolerance_lookup():
    cfg = SuiteConfig("fiber", tolerances={"sigma": 1e-3, "rank": 1e-7})
    assert cfg.tol("sigma") == 1e-3
    assert cfg.tol("rank") == 1e-7
    assert cfg.tol("tangent_dim") == 0.5


def test_case_rng_depends_only_on_coordinates():
    a = case_rng(1, 3, 7).normal(size=4)
    b = case_rng(1, 3, 7).normal(size=4)
    c = case_rng(1, 3, 8).normal(size=4)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)


def test_digest_distinguishes_inputs():
    assert digest(np.eye(2)) == digest(np.eye(2))
    assert digest(np.eye(2)) != digest(np.eye(3))


def test_cofactor_oracle():
    assert charpoly_by_cofactors([[1, 2], [3, 4]]) == [-2, -5, 1]


@pytest.mark.parametrize("name", list(SUITES))
def test_every_suite_passes_small(name):
    rep = run_suite(SuiteConfig(name, n_range=(2, 3), cases=3, seed=5))
    assert rep.passed, rep.failures
    assert rep.max_residual <= rep.config["tolerances"][next(iter(SUITES[name].checks))]


def test_report_is_deterministic_modulo_wall_time():
    cfg = SuiteConfig("equivariance", n_range=(2, 4), cases=4, seed=123)
    a = codec.dumps(run_suite(cfg).to_dict(wall_time=False))
    b = codec.dumps(run_suite(cfg).to_dict(wall_time=False))
    assert a == b


def test_case_records_do_not_depend_on_case_count():
    small = run_suite(SuiteConfig("fusion", n_range=(3, 3), cases=2, seed=9)).records
    large = run_suite(SuiteConfig("fusion", n_range=(3, 3), cases=5, seed=9)).records
    assert small == large[:2]


def test_failing_tolerance_fails_report():
    rep = run_suite(SuiteConfig("symmetrization", n_range=(2, 2), cases=3,
                                tolerances={"sigma": 1e-30}))
    assert not rep.passed
    assert rep.failures


def test_report_fields():
    rep = run_suite(SuiteConfig("blaschke", cases=2))
    d = rep.to_dict()
    assert set(d) == {"suite", "config", "records", "max_residual", "max_residuals",
                      "pass", "failures", "wall_time"}
    assert d["records"][0]["digest"]
    assert "wall_time" not in rep.to_dict(wall_time=False)
