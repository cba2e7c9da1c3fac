from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

import pytest

from netorder.shared.exceptions import (
    InvalidFilterError,
    MultipleObjectsReturnedError,
    ObjectDoesNotExistError,
)
from netorder.shared.manager import BaseManager


@dataclass(frozen=True, slots=True)
class Item:
    id: str
    title: str
    category: str
    rank: int


@dataclass(frozen=True, slots=True, kw_only=True)
class ItemManager(BaseManager[Item]):
    items: tuple[Item, ...]

    def _iter_objects(self) -> Iterator[Item]:
        return iter(self.items)


@pytest.fixture()
def items() -> tuple[Item, ...]:
    return (
        Item(id="1", title="One", category="odd", rank=1),
        Item(id="2", title="Two", category="even", rank=2),
        Item(id="3", title="Three", category="odd", rank=3),
    )


def test_manager_iterates_all_objects_by_default(items: tuple[Item, ...]) -> None:
    manager = ItemManager(items=items)

    assert list(manager) == list(items)
    assert manager.all == list(items)


def test_manager_filter_returns_a_narrowed_copy(items: tuple[Item, ...]) -> None:
    manager = ItemManager(items=items)

    filtered = manager.filter(category="odd")

    assert filtered is not manager
    assert len(manager.all) == 3
    assert [item.id for item in filtered] == ["1", "3"]


def test_manager_filter_accumulates_with_and_semantics(items: tuple[Item, ...]) -> None:
    manager = ItemManager(items=items)

    assert manager.filter(category="odd").filter(title__contains="hre").all == [items[2]]


def test_manager_exclude_negates_all_its_lookups_together(items: tuple[Item, ...]) -> None:
    manager = ItemManager(items=items)

    remaining = manager.exclude(category="odd", rank__gte=3)

    assert [item.id for item in remaining] == ["1", "2"]


def test_manager_supports_range_lookups(items: tuple[Item, ...]) -> None:
    manager = ItemManager(items=items)

    assert [item.id for item in manager.filter(rank__lte=2)] == ["1", "2"]
    assert [item.id for item in manager.filter(rank__gte=2, rank__lte=2)] == ["2"]


def test_manager_get_returns_matching_object(items: tuple[Item, ...]) -> None:
    assert ItemManager(items=items).get(id="2") == items[1]


def test_manager_get_raises_when_no_match(items: tuple[Item, ...]) -> None:
    manager = ItemManager(items=items)

    with pytest.raises(
        ObjectDoesNotExistError,
        match=r"ItemManager\.get\(\) found 0 objects for criteria \{'id': '9'\}",
    ):
        manager.get(id="9")


def test_manager_get_raises_when_multiple_match(items: tuple[Item, ...]) -> None:
    manager = ItemManager(items=items)

    with pytest.raises(
        MultipleObjectsReturnedError,
        match=(
            r"ItemManager\.get\(\) found 2 objects for criteria "
            r"\{'category': 'odd'\}, expected 1"
        ),
    ):
        manager.get(category="odd")


def test_manager_exclude_can_empty_the_result(items: tuple[Item, ...]) -> None:
    manager = ItemManager(items=items).exclude(title__contains="e")

    assert manager.all == [items[1]]
    assert manager.exclude(rank__gte=1).all == []


def test_manager_rejects_unknown_lookup(items: tuple[Item, ...]) -> None:
    with pytest.raises(InvalidFilterError, match=r"Unsupported lookup 'startswith'"):
        ItemManager(items=items).filter(title__startswith="T")


def test_manager_rejects_unknown_field(items: tuple[Item, ...]) -> None:
    manager = ItemManager(items=items).filter(colour="red")

    with pytest.raises(InvalidFilterError, match=r"Item has no field 'colour'"):
        _ = manager.all
