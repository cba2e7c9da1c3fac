from __future__ import annotations

from netorder.shared.exceptions import (
    InvalidFilterError,
    MultipleObjectsReturnedError,
    ObjectDoesNotExistError,
    SharedError,
)
from netorder.shared.manager import BaseManager

__all__: list[str] = [
    "BaseManager",
    "InvalidFilterError",
    "MultipleObjectsReturnedError",
    "ObjectDoesNotExistError",
    "SharedError",
]
