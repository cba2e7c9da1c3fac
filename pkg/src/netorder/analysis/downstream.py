from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass

import networkx as nx

from netorder.model.network import Configuration, Edge, NetworkInstance, NodeId


@dataclass(frozen=True, slots=True, kw_only=True)
class DownMark:
    """Verdict over all maximal paths leaving a node.

    Each flag states that every maximal path from the node is maximal in the named
    configuration(s). Nodes on or upstream of a cycle have every flag false.
    """

    node: NodeId
    all_ci_max: bool
    all_cf_max: bool
    all_either_max: bool
    all_both_max: bool

    @property
    def flags(self) -> tuple[bool, bool, bool, bool]:
        return (self.all_ci_max, self.all_cf_max, self.all_either_max, self.all_both_max)

    @classmethod
    def bad(cls, node: NodeId) -> DownMark:
        return cls(
            node=node,
            all_ci_max=False,
            all_cf_max=False,
            all_either_max=False,
            all_both_max=False,
        )


def mark_downstream(
    instance: NetworkInstance,
    configuration: Configuration,
) -> dict[NodeId, DownMark]:
    """Mark every node in reverse topological order of `configuration`.

    Cycles do not raise: their nodes and everything upstream get all-false marks.
    """

    graph = configuration.to_digraph(instance.nodes)

    bad: set[NodeId] = set()
    for component in nx.strongly_connected_components(graph):
        if len(component) > 1:
            bad |= component
            bad |= nx.ancestors(graph, next(iter(component)))

    marks = {node: DownMark.bad(node) for node in bad}
    acyclic = graph.subgraph(graph.nodes - bad)
    for node in reversed(list(nx.topological_sort(acyclic))):
        marks[node] = combine_marks(instance, node, configuration.out_edges(node), marks)
    return marks


def post_update_mark(
    instance: NetworkInstance,
    marks: Mapping[NodeId, DownMark],
    node: NodeId,
) -> DownMark:
    """Return the mark of `node` on `upd1(C, node)` given the marks of `C`.

    The updated node leaves through its final out-edges. A successor that reaches
    `node` in `C` would close a cycle, but a true flag on such a successor would
    imply a cycle inside the initial or final configuration, so the result is exact.
    """

    return combine_marks(instance, node, instance.final.out_edges(node), marks)


def combine_marks(
    instance: NetworkInstance,
    node: NodeId,
    edges: Sequence[Edge],
    marks: Mapping[NodeId, DownMark],
) -> DownMark:
    if not edges:
        ci_max = not instance.initial.out_edges(node)
        cf_max = not instance.final.out_edges(node)
        return DownMark(
            node=node,
            all_ci_max=ci_max,
            all_cf_max=cf_max,
            all_either_max=ci_max or cf_max,
            all_both_max=ci_max and cf_max,
        )

    ci_max = cf_max = either_max = both_max = True
    for edge in edges:
        successor = marks[edge.to_node]
        ci_max = ci_max and edge.in_initial and successor.all_ci_max
        cf_max = cf_max and edge.in_final and successor.all_cf_max
        both_max = both_max and edge.in_initial and edge.in_final and successor.all_both_max
        if edge.in_initial and edge.in_final:
            either_max = either_max and successor.all_either_max
        elif edge.in_initial:
            either_max = either_max and successor.all_ci_max
        else:
            either_max = either_max and successor.all_cf_max

    return DownMark(
        node=node,
        all_ci_max=ci_max,
        all_cf_max=cf_max,
        all_either_max=either_max,
        all_both_max=both_max,
    )
