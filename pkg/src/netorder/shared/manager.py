from __future__ import annotations

import dataclasses
import operator
from abc import ABC, abstractmethod
from collections.abc import Callable, Iterator
from dataclasses import dataclass
from typing import Any, ClassVar

from netorder.shared.exceptions import (
    InvalidFilterError,
    MultipleObjectsReturnedError,
    ObjectDoesNotExistError,
)

type Lookup = Callable[[Any, Any], bool]


@dataclass(frozen=True, slots=True)
class _Condition:
    field: str
    lookup: str
    value: Any


@dataclass(frozen=True, slots=True)
class _Criterion:
    """Conditions joined by AND, negated as a whole for `exclude`."""

    conditions: tuple[_Condition, ...]
    negated: bool = False


@dataclass(frozen=True, slots=True, kw_only=True)
class BaseManager[T](ABC):
    """Read-only query helper over a collection of objects.

    Filters are keyword lookups in the form `field` or `field__lookup`. `filter` and
    `exclude` return a narrowed copy, so a manager can be shared safely.
    """

    _LOOKUPS: ClassVar[dict[str, Lookup]] = {
        "eq": operator.eq,
        "lte": operator.le,
        "gte": operator.ge,
        "contains": operator.contains,
    }

    _criteria: tuple[_Criterion, ...] = ()

    def __iter__(self) -> Iterator[T]:
        for obj in self._iter_objects():
            if all(self._matches(obj, criterion) for criterion in self._criteria):
                yield obj

    def get(self, **filters: Any) -> T:
        objects = self.filter(**filters).all
        if len(objects) == 0:
            msg = f"{type(self).__name__}.get() found 0 objects for criteria {filters!r}"
            raise ObjectDoesNotExistError(msg)
        if len(objects) > 1:
            msg = (
                f"{type(self).__name__}.get() found {len(objects)} objects "
                f"for criteria {filters!r}, expected 1"
            )
            raise MultipleObjectsReturnedError(msg)

        return objects[0]

    def filter(self, **filters: Any) -> BaseManager[T]:
        return self._narrow(filters, negated=False)

    def exclude(self, **filters: Any) -> BaseManager[T]:
        return self._narrow(filters, negated=True)

    @property
    def all(self) -> list[T]:
        return list(self)

    @abstractmethod
    def _iter_objects(self) -> Iterator[T]:
        """Yield every object, ignoring the current filters."""

    def _narrow(self, filters: dict[str, Any], *, negated: bool) -> BaseManager[T]:
        conditions = tuple(self._parse(key, value) for key, value in filters.items())
        criterion = _Criterion(conditions=conditions, negated=negated)
        return dataclasses.replace(self, _criteria=(*self._criteria, criterion))

    def _parse(self, key: str, value: Any) -> _Condition:
        field_name, _, lookup = key.partition("__")
        lookup = lookup or "eq"
        if lookup not in self._LOOKUPS:
            msg = f"Unsupported lookup {lookup!r} in filter {key!r}"
            raise InvalidFilterError(msg)
        return _Condition(field=field_name, lookup=lookup, value=value)

    def _matches(self, obj: T, criterion: _Criterion) -> bool:
        result = all(self._holds(obj, condition) for condition in criterion.conditions)
        return not result if criterion.negated else result

    def _holds(self, obj: T, condition: _Condition) -> bool:
        try:
            actual = getattr(obj, condition.field)
        except AttributeError as exc:
            msg = f"{type(obj).__name__} has no field {condition.field!r}"
            raise InvalidFilterError(msg) from exc

        return bool(self._LOOKUPS[condition.lookup](actual, condition.value))
