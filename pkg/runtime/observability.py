"""
Observability and Run-Mode Logging
Structured JSON logging for verification runs with mode and window tracking
"""

import logging
import json
import sys
import threading
import time
from typing import Any, Optional
from datetime import datetime, timezone
from enum import Enum


class DegradationReason(Enum):
    """Reasons for leaving exact mode"""
    MISSING_DEPENDENCY = "missing_dependency"
    IMPORT_ERROR = "import_error"
    CONFIGURATION_ERROR = "configuration_error"
    WINDOW_TOO_SMALL = "window_too_small"


class RunMode(Enum):
    """Arithmetic mode of a run"""
    EXACT = "exact"           # Z or Q coefficients
    REDUCED = "reduced"       # reductions of Z data mod p
    DEGRADED = "degraded"     # optional accelerator missing


_EXTRA_FIELDS = ('suite', 'check_id', 'status', 'component', 'mode', 'degradation_reason', 'duration_ms')


def setup_structured_logging(level: Optional[str] = None):
    """Configure JSON structured logging on stderr"""

    class StructuredFormatter(logging.Formatter):
        """JSON formatter for structured logs"""

        def format(self, record: logging.LogRecord) -> str:
            log_obj = {
                "timestamp": datetime.now(timezone.utc).isoformat(),
                "level": record.levelname,
                "logger": record.name,
                "message": record.getMessage(),
                "module": record.module,
                "function": record.funcName,
                "line": record.lineno,
            }
            for name in _EXTRA_FIELDS:
                if hasattr(record, name):
                    log_obj[name] = getattr(record, name)
            return json.dumps(log_obj)

    root_logger = logging.getLogger("torskur")

    if not any(getattr(h, '_torskur', False) for h in root_logger.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(StructuredFormatter())
        handler._torskur = True
        root_logger.addHandler(handler)
        root_logger.propagate = False
    root_logger.setLevel((level or "WARNING").upper())


logger = logging.getLogger("torskur.runtime")


class SuiteObservability:
    """
    Tracks run mode, check outcomes and window enlargements
    One instance per process
    """

    def __init__(self):
        self.current_mode: RunMode = RunMode.EXACT
        self.status_counts: dict[str, int] = {}
        self.window_enlargements: int = 0
        self.degradation_reasons: list[str] = []
        self.started_at: float = time.time()
        self._lock = threading.Lock()

    def log_mode_change(
        self,
        new_mode: RunMode,
        component: str,
        reason: Optional[DegradationReason] = None,
        details: Optional[dict[str, Any]] = None
    ):
        """
        Log a run-mode change with its context

        Args:
            new_mode: New mode
            component: Component triggering the change
            reason: Reason for degradation, if any
            details: Additional context
        """
        old_mode = self.current_mode
        self.current_mode = new_mode
        if reason:
            self.degradation_reasons.append(reason.value)

        log_level = logging.WARNING if new_mode == RunMode.DEGRADED else logging.INFO
        logger.log(
            log_level,
            f"Run mode changed: {old_mode.value} -> {new_mode.value}",
            extra={
                "component": component,
                "mode": new_mode.value,
                "degradation_reason": reason.value if reason else None,
            }
        )
        self._emit_event({
            "event": "mode_change",
            "component": component,
            "old_mode": old_mode.value,
            "new_mode": new_mode.value,
            "details": details or {},
        })

    def log_check_result(self, suite: str, check_id: str, status: str, duration_ms: float):
        """Count and log one check outcome"""
        with self._lock:
            self.status_counts[status] = self.status_counts.get(status, 0) + 1
        log_level = logging.ERROR if status == "fail" else logging.DEBUG
        logger.log(
            log_level,
            f"{suite}/{check_id}: {status}",
            extra={"suite": suite, "check_id": check_id, "status": status, "duration_ms": round(duration_ms, 3)},
        )

    def log_window_enlarged(self, component: str, old: int, new: int):
        """An evaluation window was too small and is being enlarged"""
        with self._lock:
            self.window_enlargements += 1
        logger.info(
            f"Window enlarged {old} -> {new}",
            extra={"component": component, "degradation_reason": DegradationReason.WINDOW_TOO_SMALL.value},
        )

    def log_suite_summary(self, suite: str, status: str, checks: int, duration_ms: float):
        logger.info(
            f"Suite {suite} finished: {status} ({checks} checks)",
            extra={"suite": suite, "status": status, "duration_ms": round(duration_ms, 3)},
        )

    def log_startup_validation(
        self,
        validation_passed: bool,
        missing_dependencies: list[str],
        import_errors: list[str]
    ):
        """
        Log startup dependency validation results

        Args:
            validation_passed: Whether all dependencies are available
            missing_dependencies: Missing packages
            import_errors: Import error messages
        """
        if validation_passed:
            logger.info("Startup validation passed")
        else:
            logger.warning(
                "Startup validation detected issues",
                extra={"component": "startup", "mode": self.current_mode.value},
            )
        self._emit_event({
            "event": "startup_validation",
            "validation_passed": validation_passed,
            "missing_dependencies": missing_dependencies,
            "import_errors": import_errors,
        })

    def get_metrics(self) -> dict[str, Any]:
        """
        Current counters

        Returns:
            Dictionary with mode, status counts and window enlargements
        """
        with self._lock:
            counts = dict(sorted(self.status_counts.items()))
            enlargements = self.window_enlargements
        return {
            "current_mode": self.current_mode.value,
            "status_counts": counts,
            "window_enlargements": enlargements,
            "degradation_reasons": self.degradation_reasons,
            "uptime_seconds": time.time() - self.started_at,
        }

    def _emit_event(self, event: dict):
        logger.debug(f"Event: {json.dumps(event)}")


# Global observability instance
_observability = SuiteObservability()


def get_observability() -> SuiteObservability:
    """Get global observability instance"""
    return _observability


# Initialize structured logging on module import
setup_structured_logging()
