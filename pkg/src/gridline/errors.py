"""Exception types shared across the library.

The CLI and HTTP layers map these onto exit codes and status codes, so new
error conditions should reuse one of these classes rather than raising bare
ValueError.
"""

from __future__ import annotations


class GridlineError(Exception):
    """Base class for all library errors."""


class ValidationError(GridlineError):
    """A network, tree, or scenario failed invariant checks.

    Carries the structured violation list so interfaces can report each
    offending entity and rule.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        lines = "; ".join(str(v) for v in self.violations)
        super().__init__(f"validation failed: {lines}")


class FormatError(GridlineError):
    """A document could not be parsed; ``location`` points at the bad field."""

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class UnknownDatasetError(GridlineError):
    """Requested bundled dataset does not exist."""


class UnknownPresetError(GridlineError):
    """Requested attack-scenario preset does not exist."""


class ConvergenceError(GridlineError):
    """An iterative solver exhausted its iteration budget."""


class ScenarioError(GridlineError):
    """An attack step referenced an entity that is absent or already removed."""


class CalibrationError(GridlineError):
    """A reduction-curve calibration target cannot be reached."""
