"""
Suite Orchestrator
Runs verification suites check group by check group and assembles their reports
Groups may run in parallel up to the thread cap; report order is canonical regardless
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

from models.report import AggregateReport, CheckRecord, CheckStatus, Report
from runtime.errors import TorskurError
from runtime.observability import RunMode, get_observability
from suites import SUITE_ORDER, CheckGroup, SuiteParams, acceptance_params, suite_groups


logger = logging.getLogger("torskur.workflows")


class SuiteOrchestrator:
    """
    Orchestrates suite runs
    params → check groups → timed records → Report
    """

    def __init__(self, threads: int = 1):
        """
        Initialize orchestrator

        Args:
            threads: upper bound on check groups evaluated at once
        """
        self.threads = max(1, threads)

        # Run state
        self.reports: list[Report] = []
        self.current_step = "idle"
        self.steps_completed: list[str] = []

    def _run_group(self, suite: str, group: CheckGroup) -> list[CheckRecord]:
        name, run = group
        started = time.perf_counter()
        try:
            records = run()
        except TorskurError as e:
            # an exactness or slot error inside a check is a failed check, not a crash
            logger.error(f"{suite}/{name} raised {type(e).__name__}: {e}", extra={'suite': suite})
            records = [CheckRecord(
                id=f"{name}", status=CheckStatus.FAIL,
                detail=type(e).__name__, witness={'error': str(e)},
            )]
        elapsed = (time.perf_counter() - started) * 1000
        obs = get_observability()
        for record in records:
            record.timing_ms = round(elapsed, 3)
            obs.log_check_result(suite, record.id, record.status.value, elapsed)
        return records

    def run_suite(self, name: str, params: SuiteParams) -> Report:
        """
        Run one suite

        Args:
            name: suite name
            params: validated suite parameters

        Returns:
            Report with the checks in canonical order

        Raises:
            InputError: unknown suite name
        """
        groups = suite_groups(name, params)
        self.current_step = f"running:{name}"
        obs = get_observability()
        if params.prime is not None:
            obs.log_mode_change(RunMode.REDUCED, name, details={'prime': params.prime})

        started = time.perf_counter()
        report = Report(suite=name, parameters=params.as_report_parameters())
        if self.threads == 1 or len(groups) == 1:
            batches = [self._run_group(name, g) for g in groups]
        else:
            with ThreadPoolExecutor(max_workers=self.threads) as pool:
                batches = list(pool.map(lambda g: self._run_group(name, g), groups))
        for batch in batches:
            report.extend(batch)
        if not report.checks:
            report.add(CheckRecord(
                id="no_checks_in_range", status=CheckStatus.INCONCLUSIVE,
                detail=f"no {name} checks apply at {params.as_report_parameters()}",
            ))

        if params.prime is not None:
            obs.log_mode_change(RunMode.EXACT, name)
        obs.log_suite_summary(name, report.status.value, len(report.checks),
                              (time.perf_counter() - started) * 1000)

        self.reports.append(report)
        self.steps_completed.append(name)
        self.current_step = f"finished:{name}"
        return report

    def run_all(self, max_n: int, max_deg: int, prime: Optional[int] = None, window_cap: int = 12) -> AggregateReport:
        """
        Every suite at its acceptance parameters, clamped to max_n and max_deg

        Returns:
            AggregateReport in canonical suite order
        """
        aggregate = AggregateReport()
        for name in SUITE_ORDER:
            params = acceptance_params(name, max_n, max_deg, prime, window_cap)
            aggregate.reports.append(self.run_suite(name, params))
        self.current_step = "report_complete"
        return aggregate

    def get_status(self) -> dict:
        """
        Current run state

        Returns:
            Status and next action
        """
        failed = [r.suite for r in self.reports if r.status is CheckStatus.FAIL]
        return {
            'status': 'failed' if failed else self.current_step,
            'steps_completed': list(self.steps_completed),
            'failed_suites': failed,
            'next_action': 'inspect_witnesses' if failed else 'none',
        }
