"""Exceptions raised by the evaluation toolkit.

Everything derives from `EvaluationError`, which front ends treat as a validation failure
(CLI exit code 2, HTTP 422). File system failures are left as `OSError`.
"""

from collections.abc import Sequence


class EvaluationError(Exception):
    """Input cannot be evaluated as given."""


class EmptyDataError(EvaluationError):
    """No items to evaluate (N = 0, no data rows or every class empty)."""


class LabelMismatchError(EvaluationError):
    """Two objects that must share a label set do not."""


class WeightError(EvaluationError):
    def __init__(self, message: str, violations: Sequence[str] = ()) -> None:
        self.violations = tuple(violations)
        if self.violations:
            message = f"{message}: {'; '.join(self.violations)}"
        super().__init__(message)


class UndefinedClassError(EvaluationError):
    """A class-level quantity is required for a class absent from the ground truth."""


class UnknownMetricError(EvaluationError):
    pass


class DuplicateRunError(EvaluationError):
    pass


class ParseError(EvaluationError):
    """Malformed input file. `position` is a line reference or a field path."""

    def __init__(self, source: str, position: str, reason: str) -> None:
        self.source = source
        self.position = position
        self.reason = reason
        super().__init__(f"{source}:{position}: {reason}")
