"""
Commands Package
CLI command implementations; each returns JSON-ready data or a report
"""

from .evaluate import EvalRequest, cmd_eval
from .verify import cmd_verify, cmd_report_all
from .compute import RankRequest, LatticeRequest, cmd_rank, cmd_lattice

__all__ = [
    # Evaluation
    'EvalRequest',
    'cmd_eval',

    # Suites
    'cmd_verify',
    'cmd_report_all',

    # One-off computations
    'RankRequest',
    'LatticeRequest',
    'cmd_rank',
    'cmd_lattice',
]
