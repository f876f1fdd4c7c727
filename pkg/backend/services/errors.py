"""
Domain errors for the partition pipeline.

InvalidInput subclasses ValueError so callers that already catch ValueError for
bad input (the HTTP routes do) keep working. InternalAssertion marks a failed
certificate check: the proof guarantees the inequality, so it always means a bug.
"""
from fractions import Fraction
from typing import Any, Dict, Optional


class PartitionError(Exception):
    """Base class for every error raised by the solver services."""


# ==================== Invalid Input ====================

class InvalidInput(PartitionError, ValueError):
    pass


class SelfLoop(InvalidInput):
    pass


class DuplicateEdge(InvalidInput):
    pass


class VertexOutOfRange(InvalidInput):
    pass


class OverlappingSets(InvalidInput):
    pass


class NonPositiveParameter(InvalidInput):
    pass


class DimensionMismatch(InvalidInput):
    pass


class SupportMismatch(InvalidInput):
    pass


class NotAClique(InvalidInput):
    pass


class CliqueTooSmall(InvalidInput):
    pass


class InvalidSpec(InvalidInput):
    pass


class InvalidRational(InvalidInput):
    pass


class TooLarge(InvalidInput):
    pass


class ParseError(InvalidInput):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


# ==================== Hypothesis / Internal ====================

class HypothesisNotMet(PartitionError):
    pass


class InternalAssertion(PartitionError, RuntimeError):
    def __init__(self, check: str, values: Optional[Dict[str, Any]] = None):
        self.check = check
        self.values = values or {}
        detail = ", ".join(f"{k}={_fmt(v)}" for k, v in self.values.items())
        super().__init__(f"{check} violated" + (f" ({detail})" if detail else ""))


def _fmt(value: Any) -> str:
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def ensure(condition: bool, check: str, **values: Any) -> None:
    """Raise InternalAssertion naming `check` (with exact values) unless condition holds."""
    if not condition:
        raise InternalAssertion(check, values)
