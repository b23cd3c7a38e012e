"""
Verification Suites
Parameters and registry of the named suites
"""

from .params import SuiteParams, parse_alpha

from .registry import (
    CheckGroup,
    SUITES,
    SUITE_ORDER,
    ACCEPTANCE_PARAMS,
    suite_groups,
    acceptance_params,
)

__all__ = [
    # Parameters
    'SuiteParams',
    'parse_alpha',

    # Registry
    'CheckGroup',
    'SUITES',
    'SUITE_ORDER',
    'ACCEPTANCE_PARAMS',
    'suite_groups',
    'acceptance_params',
]
