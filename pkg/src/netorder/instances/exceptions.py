from __future__ import annotations

from netorder.exceptions import NetOrderError


class InstancesError(NetOrderError):
    """Base class for fixture and generator exceptions."""


class UnknownFixtureError(InstancesError):
    """Raised when no fixture has the requested name."""


class FixtureManifestError(InstancesError):
    """Raised when the bundled fixture manifest cannot be read."""


class GeneratorParameterError(InstancesError):
    """Raised when the random generator receives degenerate parameters."""
