from __future__ import annotations

from netorder.exceptions import NetOrderError


class AnalysisError(NetOrderError):
    """Base class for path analysis exceptions."""


class ReachableCycleError(AnalysisError):
    """Raised when upstream classification meets a cycle reachable from the source."""


class AnomalousPathError(AnalysisError):
    """Raised when a source path to a node lies in neither configuration."""
