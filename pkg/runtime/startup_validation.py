"""
Startup Dependency Validation
Checks the exact-arithmetic stack before suites run
"""

import sys

from .observability import (
    get_observability,
    RunMode,
    DegradationReason,
)


class ValidationResult:
    """Result of dependency validation"""

    def __init__(self):
        self.passed: bool = True
        self.missing_packages: list[str] = []
        self.import_errors: list[tuple[str, str]] = []  # (module, error)
        self.warnings: list[str] = []

    def add_missing_package(self, package: str):
        self.missing_packages.append(package)
        self.passed = False

    def add_import_error(self, module: str, error: str):
        self.import_errors.append((module, error))
        self.passed = False

    def add_warning(self, warning: str):
        """Add warning (doesn't fail validation)"""
        self.warnings.append(warning)


def _version_tuple(version: str) -> tuple[int, ...]:
    parts = []
    for piece in version.split('.')[:2]:
        digits = ''.join(ch for ch in piece if ch.isdigit())
        parts.append(int(digits or 0))
    return tuple(parts)


def validate_dependencies(strict_mode: bool = False) -> ValidationResult:
    """
    Validate required and optional dependencies

    Args:
        strict_mode: If True, optional accelerators are required too

    Returns:
        ValidationResult with details
    """
    result = ValidationResult()
    obs = get_observability()

    try:
        import pydantic
        if _version_tuple(pydantic.VERSION) < (2, 0):
            result.add_missing_package(f"pydantic>=2.0.0 (found {pydantic.VERSION})")
    except ImportError:
        result.add_missing_package("pydantic>=2.0.0")

    try:
        import sympy
        if _version_tuple(sympy.__version__) < (1, 14):
            result.add_missing_package(f"sympy>=1.14 (found {sympy.__version__})")
        from sympy.matrices.normalforms import smith_normal_decomp  # noqa: F401
    except ImportError as e:
        result.add_import_error("sympy.matrices.normalforms", str(e))
        obs.log_mode_change(
            RunMode.DEGRADED,
            "startup_validation",
            DegradationReason.IMPORT_ERROR,
            {"module": "sympy", "error": str(e)}
        )

    # python-flint speeds up sympy's ground types; pure-python arithmetic is still exact
    try:
        import flint  # noqa: F401
    except ImportError:
        result.add_warning("python-flint not installed: sympy falls back to pure-python ground types")
        if strict_mode:
            result.add_missing_package("python-flint")
        obs.log_mode_change(
            RunMode.DEGRADED,
            "startup_validation",
            DegradationReason.MISSING_DEPENDENCY,
            {"package": "python-flint"}
        )

    obs.log_startup_validation(
        validation_passed=result.passed and not result.warnings,
        missing_dependencies=result.missing_packages,
        import_errors=[f"{mod}: {err}" for mod, err in result.import_errors]
    )

    return result


def print_validation_report(result: ValidationResult, strict_mode: bool = False):
    """
    Print a human-readable report on stderr

    Args:
        result: Validation result
        strict_mode: Whether strict mode is enabled
    """
    if result.passed and not result.warnings:
        return

    out = sys.stderr
    print("=" * 60, file=out)
    if result.missing_packages:
        print("MISSING REQUIRED PACKAGES", file=out)
        for pkg in result.missing_packages:
            print(f"   - {pkg}", file=out)
        print("Fix: pip install -r requirements.txt", file=out)
    if result.import_errors:
        print("IMPORT ERRORS", file=out)
        for module, error in result.import_errors:
            print(f"   - {module}: {error}", file=out)
    if result.warnings:
        print("WARNINGS", file=out)
        for warning in result.warnings:
            print(f"   - {warning}", file=out)
    print("=" * 60, file=out)

    if not result.passed and strict_mode:
        sys.exit(1)


def validate_and_report(strict_mode: bool = False) -> bool:
    """
    Validate dependencies and print report

    Args:
        strict_mode: If True, exit on validation failure

    Returns:
        True if the required stack is usable
    """
    result = validate_dependencies(strict_mode=strict_mode)
    print_validation_report(result, strict_mode=strict_mode)
    return result.passed
