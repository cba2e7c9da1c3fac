from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import StrEnum

import networkx as nx

from netorder.analysis.exceptions import ReachableCycleError
from netorder.model.network import Configuration, NetworkInstance, NodeId


class UpstreamKind(StrEnum):
    """How the source reaches a node, in terms of configuration membership.

    - TYPE_A: the node is unreachable.
    - TYPE_B: every source path lies in both configurations.
    - TYPE_C: every source path lies in the final configuration.
    - TYPE_D: every source path lies in the initial configuration.
    - TYPE_E: some paths are initial-only and others final-only.
    """

    TYPE_A = "TypeA"
    TYPE_B = "TypeB"
    TYPE_C = "TypeC"
    TYPE_D = "TypeD"
    TYPE_E = "TypeE"


@dataclass(frozen=True, slots=True, kw_only=True)
class ReachState:
    node: NodeId
    all_initial: bool
    all_final: bool

    @property
    def flags(self) -> tuple[bool, bool]:
        return (self.all_initial, self.all_final)


@dataclass(frozen=True, slots=True, kw_only=True)
class UpstreamClass:
    node: NodeId
    kind: UpstreamKind
    anomalous: bool
    states: frozenset[tuple[bool, bool]]

    @property
    def reachable(self) -> bool:
        return self.kind is not UpstreamKind.TYPE_A


def reachable_nodes(configuration: Configuration, source: NodeId) -> frozenset[NodeId]:
    """Return every node reachable from `source`, the source included."""

    graph = configuration.to_digraph((source,))
    return frozenset(nx.descendants(graph, source)) | {source}


def find_reachable_cycle(configuration: Configuration, source: NodeId) -> list[NodeId] | None:
    """Return the nodes of a cycle reachable from `source`, or None."""

    graph = configuration.to_digraph((source,))
    try:
        cycle_edges = nx.find_cycle(graph, source)
    except nx.NetworkXNoCycle:
        return None
    return [edge[0] for edge in cycle_edges]


def classify_upstream(
    instance: NetworkInstance,
    configuration: Configuration,
) -> dict[NodeId, UpstreamClass]:
    """Classify every node by the set of (all-initial, all-final) states it is reached in.

    The closure walks the product of nodes and flag pairs, so each node is visited in
    at most four states. The empty path makes the source reachable in (True, True).
    """

    cycle = find_reachable_cycle(configuration, instance.source)
    if cycle is not None:
        msg = f"Cycle reachable from the source: {' -> '.join([*cycle, cycle[0]])}"
        raise ReachableCycleError(msg)

    start = ReachState(node=instance.source, all_initial=True, all_final=True)
    seen: set[ReachState] = {start}
    queue: deque[ReachState] = deque([start])
    while queue:
        state = queue.popleft()
        for edge in configuration.out_edges(state.node):
            following = ReachState(
                node=edge.to_node,
                all_initial=state.all_initial and edge.in_initial,
                all_final=state.all_final and edge.in_final,
            )
            if following not in seen:
                seen.add(following)
                queue.append(following)

    states: dict[NodeId, set[tuple[bool, bool]]] = {node: set() for node in instance.nodes}
    for state in seen:
        states[state.node].add(state.flags)

    return {
        node: UpstreamClass(
            node=node,
            kind=_kind_of(node_states),
            anomalous=(False, False) in node_states,
            states=frozenset(node_states),
        )
        for node, node_states in states.items()
    }


def _kind_of(states: set[tuple[bool, bool]]) -> UpstreamKind:
    if not states:
        return UpstreamKind.TYPE_A

    proper = states - {(False, False)}
    if proper == {(True, True)}:
        return UpstreamKind.TYPE_B
    if not proper or {(True, False), (False, True)} <= proper:
        return UpstreamKind.TYPE_E
    if all(all_final for _, all_final in proper):
        return UpstreamKind.TYPE_C
    return UpstreamKind.TYPE_D
