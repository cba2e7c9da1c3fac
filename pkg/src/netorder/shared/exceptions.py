from __future__ import annotations

from netorder.exceptions import NetOrderError


class SharedError(NetOrderError):
    """Base class for query helper exceptions."""


class ObjectDoesNotExistError(SharedError):
    """Raised when a query expected an object but matched none."""


class MultipleObjectsReturnedError(SharedError):
    """Raised when a query expected one object but matched several."""


class InvalidFilterError(SharedError):
    """Raised when a filter names an unknown field or lookup."""
