from __future__ import annotations

from netorder.exceptions import NetOrderError


class NetModelError(NetOrderError):
    """Base class for network model exceptions."""


class UnknownNodeError(NetModelError):
    """Raised when a node id is not part of the instance."""


class RepeatedNodeError(NetModelError):
    """Raised when an update sequence names the same node twice."""


class InvalidInstanceError(NetModelError):
    """Raised when an instance violates the structural rules of a network instance."""


class DuplicateNodeError(InvalidInstanceError):
    """Raised when a node id is declared more than once."""


class DuplicateEdgeError(InvalidInstanceError):
    """Raised when two edges share the same ordered pair of endpoints."""


class SelfLoopError(InvalidInstanceError):
    """Raised when an edge starts and ends at the same node."""


class CyclicConfigurationError(InvalidInstanceError):
    """Raised when the initial or final configuration contains a cycle."""


class SourceHasIncomingEdgesError(InvalidInstanceError):
    """Raised when a source node has incoming edges in either configuration."""


class MultipleSourcesError(InvalidInstanceError):
    """Raised when several sources are declared but reduction was not requested."""


class InstanceFormatError(InvalidInstanceError):
    """Raised when an instance document is malformed."""
