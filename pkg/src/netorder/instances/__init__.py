from __future__ import annotations

from netorder.instances.fixtures import (
    Fixture,
    FixtureExpectation,
    FixturesManager,
    Provenance,
    fixture,
    fixture_text,
    fixtures,
)
from netorder.instances.generator import GeneratorMode, generate_random

__all__: list[str] = [
    "Fixture",
    "FixtureExpectation",
    "FixturesManager",
    "GeneratorMode",
    "Provenance",
    "fixture",
    "fixture_text",
    "fixtures",
    "generate_random",
]
