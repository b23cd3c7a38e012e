"""
Verify Commands
Run one suite or every suite and return their reports
"""

from typing import Optional

from models.report import AggregateReport, Report
from runtime.config import TorskurSettings
from runtime.errors import InputError
from suites import SuiteParams
from workflows import SuiteOrchestrator


# ============================================================================
# Bounds
# ============================================================================

def check_bounds(params: SuiteParams, settings: TorskurSettings) -> None:
    """
    Raises:
        InputError: n, |alpha| or the degree exceeds the configured limits
    """
    n = max(params.n, params.alpha.m if params.alpha else 0)
    if n > settings.max_n:
        raise InputError(f"n={n} exceeds TORSKUR_MAX_N={settings.max_n}")
    if params.deg > settings.max_deg:
        raise InputError(f"deg={params.deg} exceeds TORSKUR_MAX_DEG={settings.max_deg}")


# ============================================================================
# Commands
# ============================================================================

def cmd_verify(suite: str, params: SuiteParams, settings: TorskurSettings) -> Report:
    """
    Run one suite

    Raises:
        InputError: unknown suite or parameters out of bounds (exit 2)
    """
    check_bounds(params, settings)
    orchestrator = SuiteOrchestrator(threads=settings.threads)
    return orchestrator.run_suite(suite, params)


def cmd_report_all(settings: TorskurSettings, max_n: Optional[int] = None, max_deg: Optional[int] = None,
                   prime: Optional[int] = None) -> AggregateReport:
    """
    Every suite at its acceptance parameters, clamped to max_n / max_deg

    Args:
        settings: runtime settings; their bounds are the default clamps
        max_n: tighter bound on n
        max_deg: tighter bound on the degree
        prime: characteristic for the reduction checks and the probe
    """
    max_n = settings.max_n if max_n is None else min(max_n, settings.max_n)
    max_deg = settings.max_deg if max_deg is None else min(max_deg, settings.max_deg)
    orchestrator = SuiteOrchestrator(threads=settings.threads)
    return orchestrator.run_all(max_n, max_deg, prime, settings.window_cap)
