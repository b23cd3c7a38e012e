"""
Runtime Package
Errors, settings, logging and dependency checks shared by library and CLI
"""

from .errors import (
    TorskurError,
    InputError,
    ConfigurationError,
    RingMismatchError,
    SlotMismatchError,
    InvarianceError,
    ExactnessError,
)

from .config import (
    TorskurSettings,
    get_settings,
    settings_from_env,
)

from .observability import (
    RunMode,
    DegradationReason,
    SuiteObservability,
    get_observability,
    setup_structured_logging,
)

from .startup_validation import (
    ValidationResult,
    validate_dependencies,
    validate_and_report,
)

__all__ = [
    # Errors
    'TorskurError',
    'InputError',
    'ConfigurationError',
    'RingMismatchError',
    'SlotMismatchError',
    'InvarianceError',
    'ExactnessError',

    # Settings
    'TorskurSettings',
    'get_settings',
    'settings_from_env',

    # Observability
    'RunMode',
    'DegradationReason',
    'SuiteObservability',
    'get_observability',
    'setup_structured_logging',

    # Startup validation
    'ValidationResult',
    'validate_dependencies',
    'validate_and_report',
]
