from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from enum import StrEnum
from functools import cache
from importlib import resources

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from netorder.instances.exceptions import FixtureManifestError, UnknownFixtureError
from netorder.model.documents import parse_instance
from netorder.model.network import NetworkInstance
from netorder.shared.exceptions import ObjectDoesNotExistError
from netorder.shared.manager import BaseManager

_DATA_PACKAGE = "netorder.instances.data"
_MANIFEST = "fixtures.json"


class Provenance(StrEnum):
    """Where an expected value comes from."""

    PUBLISHED = "published"
    DERIVED = "derived"


class FixtureEntry(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    name: str = Field(min_length=1)
    file: str = Field(pattern=r"^[\w.-]+\.json$")
    solvable: bool
    min_rounds: int | None = Field(default=None, ge=0)
    provenance: dict[str, Provenance]
    notes: str = ""

    @model_validator(mode="after")
    def _check_expectation(self) -> FixtureEntry:
        if self.solvable != (self.min_rounds is not None):
            msg = f"fixture {self.name!r}: 'min_rounds' must be set exactly when solvable"
            raise ValueError(msg)
        if "solvable" not in self.provenance:
            msg = f"fixture {self.name!r}: the 'solvable' expectation needs a provenance tag"
            raise ValueError(msg)
        return self


class FixtureManifest(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    fixtures: list[FixtureEntry]


@dataclass(frozen=True, slots=True, kw_only=True)
class FixtureExpectation:
    solvable: bool
    min_rounds: int | None
    notes: str
    provenance: dict[str, Provenance]


@dataclass(frozen=True, slots=True, kw_only=True)
class Fixture:
    name: str
    instance: NetworkInstance
    expected: FixtureExpectation

    @property
    def solvable(self) -> bool:
        return self.expected.solvable

    @property
    def min_rounds(self) -> int | None:
        return self.expected.min_rounds


@dataclass(frozen=True, slots=True, kw_only=True)
class FixturesManager(BaseManager[Fixture]):
    """The bundled fixtures, in manifest order."""

    def _iter_objects(self) -> Iterator[Fixture]:
        yield from _load_fixtures()


fixtures = FixturesManager()


def fixture(name: str) -> Fixture:
    try:
        return fixtures.get(name=name)
    except ObjectDoesNotExistError as exc:
        known = ", ".join(item.name for item in fixtures)
        msg = f"Unknown fixture {name!r}; known fixtures: {known}"
        raise UnknownFixtureError(msg) from exc


def fixture_text(name: str) -> str:
    """Return the instance file of a fixture as shipped."""

    entry = _entries().get(name)
    if entry is None:
        msg = f"Unknown fixture {name!r}"
        raise UnknownFixtureError(msg)
    return _read(entry.file)


@cache
def _load_fixtures() -> tuple[Fixture, ...]:
    return tuple(
        Fixture(
            name=entry.name,
            instance=parse_instance(_read(entry.file), reduce_sources=True),
            expected=FixtureExpectation(
                solvable=entry.solvable,
                min_rounds=entry.min_rounds,
                notes=entry.notes,
                provenance=dict(entry.provenance),
            ),
        )
        for entry in _entries().values()
    )


@cache
def _entries() -> dict[str, FixtureEntry]:
    try:
        manifest = FixtureManifest.model_validate_json(_read(_MANIFEST))
    except ValidationError as exc:
        msg = f"Malformed fixture manifest: {exc}"
        raise FixtureManifestError(msg) from exc
    return {entry.name: entry for entry in manifest.fixtures}


def _read(filename: str) -> str:
    return resources.files(_DATA_PACKAGE).joinpath(filename).read_text(encoding="utf-8")
