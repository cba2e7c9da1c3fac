from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from enum import Enum, auto

import networkx as nx

from netorder.analysis.downstream import DownMark, mark_downstream
from netorder.analysis.upstream import find_reachable_cycle
from netorder.model.network import Configuration, Edge, NetworkInstance, NodeId


@dataclass(frozen=True, slots=True, kw_only=True)
class ConsistencyVerdict:
    """Outcome of a per-packet consistency check.

    `witness` is a maximal source path lying in neither configuration; for a cycle it
    is the path into the cycle followed by the cycle, closed on its first node.
    """

    consistent: bool
    witness: tuple[NodeId, ...] = ()
    cyclic: bool = False

    def __bool__(self) -> bool:
        return self.consistent


class _Requirement(Enum):
    EITHER = auto()
    INITIAL = auto()
    FINAL = auto()
    NONE = auto()


def is_consistent(
    instance: NetworkInstance,
    configuration: Configuration,
    *,
    marks: Mapping[NodeId, DownMark] | None = None,
) -> ConsistencyVerdict:
    cycle = find_reachable_cycle(configuration, instance.source)
    if cycle is not None:
        graph = configuration.to_digraph(instance.nodes)
        lead_in = nx.shortest_path(graph, instance.source, cycle[0])
        return ConsistencyVerdict(
            consistent=False,
            witness=(*lead_in, *cycle[1:], cycle[0]),
            cyclic=True,
        )

    if marks is None:
        marks = mark_downstream(instance, configuration)
    if marks[instance.source].all_either_max:
        return ConsistencyVerdict(consistent=True)

    return ConsistencyVerdict(
        consistent=False,
        witness=_failing_path(instance, configuration, marks),
    )


def _failing_path(
    instance: NetworkInstance,
    configuration: Configuration,
    marks: Mapping[NodeId, DownMark],
) -> tuple[NodeId, ...]:
    node = instance.source
    requirement = _Requirement.EITHER
    path = [node]
    while edges := configuration.out_edges(node):
        edge, requirement = _next_step(edges, requirement, marks)
        node = edge.to_node
        path.append(node)
    return tuple(path)


def _next_step(
    edges: tuple[Edge, ...],
    requirement: _Requirement,
    marks: Mapping[NodeId, DownMark],
) -> tuple[Edge, _Requirement]:
    for edge in edges:
        successor = marks[edge.to_node]
        match requirement:
            case _Requirement.EITHER:
                if edge.in_initial and edge.in_final:
                    if not successor.all_either_max:
                        return edge, _Requirement.EITHER
                elif edge.in_initial:
                    if not successor.all_ci_max:
                        return edge, _Requirement.INITIAL
                elif not successor.all_cf_max:
                    return edge, _Requirement.FINAL
            case _Requirement.INITIAL:
                if not edge.in_initial:
                    return edge, _Requirement.NONE
                if not successor.all_ci_max:
                    return edge, _Requirement.INITIAL
            case _Requirement.FINAL:
                if not edge.in_final:
                    return edge, _Requirement.NONE
                if not successor.all_cf_max:
                    return edge, _Requirement.FINAL
            case _Requirement.NONE:
                return edge, _Requirement.NONE

    # Unreachable while the current requirement is failing; keep walking to a sink.
    return edges[0], _Requirement.NONE
