from __future__ import annotations

import pytest

from netorder.model.exceptions import (
    CyclicConfigurationError,
    DuplicateEdgeError,
    DuplicateNodeError,
    InvalidInstanceError,
    NetModelError,
    SelfLoopError,
    SourceHasIncomingEdgesError,
    UnknownNodeError,
)
from netorder.model.network import Configuration, Edge, EdgeLabel, NetworkInstance
from tests.support.builders import build_instance


def test_edge_label_membership() -> None:
    assert EdgeLabel.INITIAL_ONLY.in_initial
    assert not EdgeLabel.INITIAL_ONLY.in_final
    assert not EdgeLabel.FINAL_ONLY.in_initial
    assert EdgeLabel.FINAL_ONLY.in_final
    assert EdgeLabel.BOTH.in_initial
    assert EdgeLabel.BOTH.in_final


def test_canonical_configurations_split_edges_by_label(fig1: NetworkInstance) -> None:
    initial = {(edge.from_node, edge.to_node) for edge in fig1.initial}
    final = {(edge.from_node, edge.to_node) for edge in fig1.final}

    assert initial == {("H1", "A"), ("A", "C"), ("C", "B"), ("B", "H2")}
    assert final == {("H1", "A"), ("A", "D"), ("D", "B"), ("C", "B"), ("B", "H2")}


def test_changed_nodes_are_sorted_and_exclude_noops(fig1: NetworkInstance) -> None:
    assert fig1.changed_nodes == ("A", "D")
    assert fig1.is_noop("H1")
    assert fig1.is_noop("C")
    assert not fig1.is_noop("D")


def test_out_initial_and_out_final(fig1: NetworkInstance) -> None:
    assert fig1.out_initial("A") == {Edge("A", "C", EdgeLabel.INITIAL_ONLY)}
    assert fig1.out_final("A") == {Edge("A", "D", EdgeLabel.FINAL_ONLY)}
    assert fig1.out_initial("D") == frozenset()


def test_require_node_rejects_unknown_ids(fig1: NetworkInstance) -> None:
    with pytest.raises(UnknownNodeError, match=r"Unknown node 'Z'"):
        fig1.is_noop("Z")


def test_configuration_out_edges_are_sorted_by_target() -> None:
    configuration = Configuration(
        frozenset({
            Edge("A", "C", EdgeLabel.BOTH),
            Edge("A", "B", EdgeLabel.FINAL_ONLY),
            Edge("B", "C", EdgeLabel.INITIAL_ONLY),
        }),
    )

    assert configuration.successors("A") == ("B", "C")
    assert configuration.out_edges("C") == ()
    assert len(configuration) == 3
    assert Edge("B", "C", EdgeLabel.INITIAL_ONLY) in configuration


def test_configuration_union_and_equality() -> None:
    left = Configuration(frozenset({Edge("A", "B", EdgeLabel.BOTH)}))
    right = Configuration(frozenset({Edge("B", "C", EdgeLabel.FINAL_ONLY)}))

    union = left.union(right)

    assert union == Configuration(left.edges | right.edges)
    assert union.successors("B") == ("C",)
    assert hash(union) == hash(Configuration(left.edges | right.edges))


def test_configuration_to_digraph_keeps_isolated_nodes() -> None:
    configuration = Configuration(frozenset({Edge("A", "B", EdgeLabel.BOTH)}))

    graph = configuration.to_digraph(["A", "B", "Z"])

    assert set(graph.nodes) == {"A", "B", "Z"}
    assert list(graph.edges) == [("A", "B")]


def test_instance_configuration_rejects_foreign_edges(fig1: NetworkInstance) -> None:
    with pytest.raises(NetModelError, match=r"not part of the instance"):
        fig1.configuration([Edge("A", "B", EdgeLabel.BOTH)])


def test_create_rejects_duplicate_nodes() -> None:
    with pytest.raises(DuplicateNodeError, match=r"Node 'A' is declared more than once"):
        NetworkInstance.create(nodes=["H1", "A", "A"], source="H1", edges=[])


def test_create_rejects_duplicate_edges_even_with_different_labels() -> None:
    with pytest.raises(DuplicateEdgeError, match=r"Edge H1->A is declared more than once"):
        NetworkInstance.create(
            nodes=["H1", "A"],
            source="H1",
            edges=[Edge("H1", "A", EdgeLabel.INITIAL_ONLY), Edge("H1", "A", EdgeLabel.FINAL_ONLY)],
        )


def test_instance_rejects_self_loops() -> None:
    with pytest.raises(SelfLoopError, match=r"self-loop"):
        build_instance("H1", [("H1", "A", "both"), ("A", "A", "i")])


def test_instance_rejects_edges_to_unknown_nodes() -> None:
    with pytest.raises(UnknownNodeError, match=r"references unknown node 'B'"):
        NetworkInstance.create(
            nodes=["H1", "A"],
            source="H1",
            edges=[Edge("A", "B", EdgeLabel.BOTH)],
        )


def test_instance_rejects_unknown_source() -> None:
    with pytest.raises(UnknownNodeError, match=r"Source 'S' is not a declared node"):
        NetworkInstance.create(nodes=["H1"], source="S", edges=[])


def test_instance_rejects_empty_node_ids() -> None:
    with pytest.raises(InvalidInstanceError, match=r"nonempty"):
        NetworkInstance.create(nodes=["H1", ""], source="H1", edges=[])


def test_instance_rejects_incoming_edges_at_the_source() -> None:
    with pytest.raises(SourceHasIncomingEdgesError, match=r"Source 'H1' has incoming edge"):
        build_instance("H1", [("H1", "A", "both"), ("A", "H1", "f")])


@pytest.mark.parametrize(
    ("label", "configuration"),
    [("i", "initial"), ("f", "final"), ("both", "initial")],
)
def test_instance_rejects_cycles_inside_a_configuration(label: str, configuration: str) -> None:
    with pytest.raises(CyclicConfigurationError, match=rf"Cycle in the {configuration}"):
        build_instance("H1", [("H1", "A", "both"), ("A", "B", label), ("B", "A", label)])


def test_instance_accepts_cycles_that_only_appear_in_the_union() -> None:
    instance = build_instance("H1", [("H1", "A", "both"), ("A", "B", "i"), ("B", "A", "f")])

    assert instance.changed_nodes == ("A", "B")
