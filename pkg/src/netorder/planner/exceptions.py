from __future__ import annotations

from netorder.exceptions import NetOrderError


class PlannerError(NetOrderError):
    """Base class for planner exceptions."""


class PlannerInvariantError(PlannerError):
    """Raised when an instrumented planner run observes a broken invariant."""


class NodeNotValidError(PlannerError):
    """Raised when a wait query names a node that is not valid in the current configuration."""


class PlanFormatError(PlannerError):
    """Raised when a plan document is malformed."""
