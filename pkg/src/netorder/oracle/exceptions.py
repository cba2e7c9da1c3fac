from __future__ import annotations

from netorder.exceptions import NetOrderError


class OracleError(NetOrderError):
    """Base class for oracle and verifier exceptions."""


class OracleLimitError(OracleError):
    """Raised when an instance has more changed nodes than the exhaustive search accepts."""


class PlanReferenceError(OracleError):
    """Raised when a plan names a node that is not part of the instance."""
