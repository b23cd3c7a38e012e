"""
Test Runtime Layer
Settings, error codes, observability, reports and suite parameters
"""

import json
import logging
from concurrent.futures import ThreadPoolExecutor

import pytest
from pydantic import ValidationError

from models.report import AggregateReport, CheckRecord, CheckStatus, Report, exit_code_for
from models.words import DimVector
from runtime import (
    ConfigurationError,
    ExactnessError,
    InputError,
    InvarianceError,
    RingMismatchError,
    RunMode,
    SlotMismatchError,
    SuiteObservability,
    TorskurSettings,
    settings_from_env,
    validate_dependencies,
)
from suites import SUITE_ORDER, SuiteParams, acceptance_params, parse_alpha, suite_groups


# ============================================================================
# Settings
# ============================================================================

def test_settings_defaults():
    settings = settings_from_env({})
    assert settings == TorskurSettings()
    assert (settings.max_n, settings.max_deg, settings.window_cap) == (4, 8, 12)


def test_settings_from_environment():
    settings = settings_from_env({'TORSKUR_MAX_N': '3', 'TORSKUR_THREADS': '2', 'TORSKUR_LOG_LEVEL': 'debug'})
    assert settings.max_n == 3
    assert settings.threads == 2


@pytest.mark.parametrize("environ", [{'TORSKUR_THREADS': '0'}, {'TORSKUR_MAX_DEG': 'many'}])
def test_invalid_settings(environ):
    with pytest.raises(ConfigurationError) as info:
        settings_from_env(environ)
    assert next(iter(environ)) in str(info.value)


# ============================================================================
# Errors
# ============================================================================

def test_error_exit_codes():
    assert InputError.exit_code == ConfigurationError.exit_code == 2
    assert RingMismatchError.exit_code == SlotMismatchError.exit_code == InvarianceError.exit_code == 3
    assert ExactnessError.exit_code == 1


# ============================================================================
# Observability
# ============================================================================

def test_observability_counters():
    obs = SuiteObservability()
    obs.log_check_result("demazure", "braid", "pass", 1.5)
    obs.log_check_result("demazure", "square", "fail", 0.5)
    obs.log_window_enlarged("schur", 0, 2)
    obs.log_mode_change(RunMode.REDUCED, "suite_orchestrator", details={'prime': 2})
    metrics = obs.get_metrics()
    assert metrics['status_counts'] == {'fail': 1, 'pass': 1}
    assert metrics['window_enlargements'] == 1
    assert metrics['current_mode'] == "reduced"


def test_observability_counts_from_threads():
    obs = SuiteObservability()

    def record_many(_):
        for _ in range(500):
            obs.log_check_result("klr", "relations", "pass", 0.0)
            obs.log_window_enlarged("schur", 2, 4)

    with ThreadPoolExecutor(max_workers=8) as pool:
        list(pool.map(record_many, range(8)))
    metrics = obs.get_metrics()
    assert metrics['status_counts'] == {'pass': 4000}
    assert metrics['window_enlargements'] == 4000


def test_structured_formatter_emits_json():
    handler = next(h for h in logging.getLogger("torskur").handlers if getattr(h, '_torskur', False))
    record = logging.LogRecord("torskur.runtime", logging.INFO, __file__, 1, "hello", None, None)
    record.suite = "phi"
    payload = json.loads(handler.formatter.format(record))
    assert payload['message'] == "hello"
    assert payload['suite'] == "phi"
    assert payload['level'] == "INFO"


def test_dependency_validation_finds_the_stack():
    result = validate_dependencies()
    assert result.passed
    assert not result.missing_packages


# ============================================================================
# Reports
# ============================================================================

def test_report_status_and_exit_codes():
    report = Report(suite="phi", checks=[CheckRecord(id="a", status=CheckStatus.PASS, timing_ms=2.0)])
    assert exit_code_for(report.status) == 0
    report.add(CheckRecord(id="b", status=CheckStatus.INCONCLUSIVE))
    assert exit_code_for(report.status) == 4
    report.add(CheckRecord(id="c", status=CheckStatus.FAIL, witness={'x': 1}))
    assert exit_code_for(report.status) == 1
    assert [c.id for c in report.failures()] == ["c"]


def test_timings_are_opt_in():
    report = Report(suite="phi", checks=[CheckRecord(id="a", status=CheckStatus.PASS, timing_ms=2.0)])
    assert 'timing_ms' not in report.to_json_dict()['checks'][0]
    assert report.to_json_dict(with_timings=True)['checks'][0]['timing_ms'] == 2.0
    aggregate = AggregateReport(reports=[report])
    assert aggregate.to_json_dict()['status'] == "pass"


# ============================================================================
# Suite parameters
# ============================================================================

def test_suite_params_validation():
    with pytest.raises(ValidationError):
        SuiteParams(prime=4)
    assert SuiteParams(prime=5).as_report_parameters() == {'n': 2, 'deg': 6, 'prime': 5}


def test_parse_alpha():
    assert parse_alpha("2,1") == DimVector(n0=2, n1=1)
    with pytest.raises(InputError):
        parse_alpha("2")


def test_dim_vectors_cover_small_alphas():
    assert [(a.n0, a.n1) for a in SuiteParams(n=2).dim_vectors()] == [(0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]


def test_suite_lookup():
    assert SUITE_ORDER[0] == "demazure"
    assert "conjecture" in SUITE_ORDER
    with pytest.raises(InputError):
        suite_groups("nonsense", SuiteParams())
    params = acceptance_params("schur", max_n=2, max_deg=4)
    assert params.n <= 2 and params.deg <= 4


def test_cuspidal_suite_covers_the_other_primes():
    groups = dict(suite_groups("cuspidal", SuiteParams(n=2, deg=4, prime=2)))
    ids = {r.id for r in groups["fp_phenomena"]()}
    assert "c1c2_generates[d=8,p=3]" in ids and "c1c2_generates[d=8,p=5]" in ids
    assert "square_in_kernel_over_F2" not in ids
    unreduced = dict(suite_groups("cuspidal", SuiteParams(n=2, deg=4)))
    assert "square_in_kernel_over_F2" in {r.id for r in unreduced["fp_phenomena"]()}
