from __future__ import annotations

import json

import pytest

from netorder.instances.exceptions import UnknownFixtureError
from netorder.instances.fixtures import Provenance, fixture, fixture_text, fixtures
from netorder.model.network import EdgeLabel
from netorder.model.updates import MASTER_SOURCE


def test_manifest_lists_every_fixture_in_order() -> None:
    assert [item.name for item in fixtures] == [
        "fig1_trivial",
        "fig2_double_diamond",
        "fig4_removable_dd",
        "fig4_shared_tails",
        "fig5_wait_example",
        "fig6_multi_source",
    ]


def test_fixtures_can_be_filtered_on_expectations() -> None:
    unsolvable = fixtures.exclude(solvable=True)
    multi_round = fixtures.filter(solvable=True, min_rounds__gte=3)

    assert [item.name for item in unsolvable] == ["fig2_double_diamond"]
    assert [item.name for item in multi_round] == [
        "fig4_removable_dd",
        "fig4_shared_tails",
        "fig5_wait_example",
    ]


def test_fixture_carries_expectations_and_provenance() -> None:
    item = fixture("fig4_removable_dd")

    assert item.solvable
    assert item.min_rounds == 5
    assert item.expected.provenance == {
        "solvable": Provenance.PUBLISHED,
        "min_rounds": Provenance.DERIVED,
    }
    assert len(item.instance.nodes) == 15
    assert set(item.instance.changed_nodes) == {"B", "C", "D", "E", "F", "G", "H", "I", "L", "M"}


def test_shared_tails_variant_differs_in_three_edges() -> None:
    literal = fixture("fig4_removable_dd").instance
    variant = fixture("fig4_shared_tails").instance

    literal_labels = {(edge.from_node, edge.to_node): edge.label for edge in literal.edges}
    variant_labels = {(edge.from_node, edge.to_node): edge.label for edge in variant.edges}
    relabelled = {key for key in literal_labels if literal_labels[key] != variant_labels[key]}

    assert variant.nodes == literal.nodes
    assert variant_labels.keys() == literal_labels.keys()
    assert relabelled == {("E", "G"), ("H", "J"), ("M", "K")}
    assert all(variant_labels[key] is EdgeLabel.BOTH for key in relabelled)
    assert all(literal_labels[key] is EdgeLabel.INITIAL_ONLY for key in relabelled)


def test_multi_source_fixture_is_reduced() -> None:
    instance = fixture("fig6_multi_source").instance

    assert instance.source == MASTER_SOURCE
    assert instance.changed_nodes == ("HA", "HB", "HC")


def test_unknown_fixture_lists_the_known_ones() -> None:
    with pytest.raises(UnknownFixtureError, match=r"Unknown fixture 'fig3'; known fixtures: fig1"):
        fixture("fig3")
    with pytest.raises(UnknownFixtureError):
        fixture_text("fig3")


def test_fixture_text_is_the_shipped_document() -> None:
    document = json.loads(fixture_text("fig6_multi_source"))

    assert document["sources"] == ["HA", "HB", "HC"]
    assert "source" not in document
