"""
Workflows Package
Orchestration of verification suite runs
"""

from .suite_orchestrator import SuiteOrchestrator

__all__ = [
    'SuiteOrchestrator',
]
