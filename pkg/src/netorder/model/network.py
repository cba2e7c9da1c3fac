from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from enum import StrEnum

import networkx as nx

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

type NodeId = str


class EdgeLabel(StrEnum):
    """Membership of an edge in the initial and/or final configuration."""

    INITIAL_ONLY = "i"
    FINAL_ONLY = "f"
    BOTH = "both"

    @property
    def in_initial(self) -> bool:
        return self is not EdgeLabel.FINAL_ONLY

    @property
    def in_final(self) -> bool:
        return self is not EdgeLabel.INITIAL_ONLY


@dataclass(frozen=True, slots=True, order=True)
class Edge:
    from_node: NodeId
    to_node: NodeId
    label: EdgeLabel

    @property
    def in_initial(self) -> bool:
        return self.label.in_initial

    @property
    def in_final(self) -> bool:
        return self.label.in_final

    def __str__(self) -> str:
        return f"{self.from_node}->{self.to_node}[{self.label}]"


@dataclass(frozen=True, slots=True)
class Configuration:
    """A set of present edges, the forwarding state of the whole network.

    Values are immutable; updates return new configurations.
    """

    edges: frozenset[Edge]
    _out: Mapping[NodeId, tuple[Edge, ...]] = field(
        init=False,
        repr=False,
        compare=False,
        hash=False,
    )

    def __post_init__(self) -> None:
        out: defaultdict[NodeId, list[Edge]] = defaultdict(list)
        for edge in self.edges:
            out[edge.from_node].append(edge)
        object.__setattr__(
            self,
            "_out",
            {node: tuple(sorted(edges)) for node, edges in out.items()},
        )

    def __contains__(self, edge: object) -> bool:
        return edge in self.edges

    def __iter__(self) -> Iterator[Edge]:
        return iter(sorted(self.edges))

    def __len__(self) -> int:
        return len(self.edges)

    def out_edges(self, node: NodeId) -> tuple[Edge, ...]:
        """Return the out-edges of `node`, sorted by target."""

        return self._out.get(node, ())

    def successors(self, node: NodeId) -> tuple[NodeId, ...]:
        return tuple(edge.to_node for edge in self.out_edges(node))

    def union(self, other: Configuration) -> Configuration:
        return Configuration(self.edges | other.edges)

    def to_digraph(self, nodes: Iterable[NodeId] = ()) -> nx.DiGraph[NodeId]:
        graph: nx.DiGraph[NodeId] = nx.DiGraph()
        graph.add_nodes_from(nodes)
        graph.add_edges_from((edge.from_node, edge.to_node) for edge in self.edges)
        return graph


@dataclass(frozen=True, slots=True, kw_only=True)
class NetworkInstance:
    """A topology with a designated source and the fixed (initial, final) pair.

    Construction validates properness of both canonical configurations.
    """

    nodes: frozenset[NodeId]
    source: NodeId
    edges: frozenset[Edge]
    synthetic: frozenset[NodeId] = frozenset()

    _initial: Configuration = field(init=False, repr=False, compare=False, hash=False)
    _final: Configuration = field(init=False, repr=False, compare=False, hash=False)
    _changed: tuple[NodeId, ...] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        self._validate_endpoints()

        initial = Configuration(frozenset(edge for edge in self.edges if edge.in_initial))
        final = Configuration(frozenset(edge for edge in self.edges if edge.in_final))
        for name, configuration in (("initial", initial), ("final", final)):
            self._validate_proper(name, configuration)

        object.__setattr__(self, "_initial", initial)
        object.__setattr__(self, "_final", final)
        object.__setattr__(
            self,
            "_changed",
            tuple(
                node
                for node in sorted(self.nodes)
                if initial.out_edges(node) != final.out_edges(node)
            ),
        )

    @classmethod
    def create(
        cls,
        *,
        nodes: Iterable[NodeId],
        source: NodeId,
        edges: Iterable[Edge],
        synthetic: Iterable[NodeId] = (),
    ) -> NetworkInstance:
        """Build an instance from possibly repeated inputs, rejecting duplicates."""

        node_list = list(nodes)
        seen_nodes: set[NodeId] = set()
        for node in node_list:
            if node in seen_nodes:
                msg = f"Node {node!r} is declared more than once"
                raise DuplicateNodeError(msg)
            seen_nodes.add(node)

        edge_list = list(edges)
        seen_pairs: set[tuple[NodeId, NodeId]] = set()
        for edge in edge_list:
            pair = (edge.from_node, edge.to_node)
            if pair in seen_pairs:
                msg = f"Edge {edge.from_node}->{edge.to_node} is declared more than once"
                raise DuplicateEdgeError(msg)
            seen_pairs.add(pair)

        return cls(
            nodes=frozenset(node_list),
            source=source,
            edges=frozenset(edge_list),
            synthetic=frozenset(synthetic),
        )

    # region Canonical configurations

    @property
    def initial(self) -> Configuration:
        return self._initial

    @property
    def final(self) -> Configuration:
        return self._final

    def configuration(self, edges: Iterable[Edge]) -> Configuration:
        """Return a configuration over this instance's edges."""

        edge_set = frozenset(edges)
        foreign = edge_set - self.edges
        if foreign:
            msg = f"Configuration edges {sorted(map(str, foreign))} are not part of the instance"
            raise NetModelError(msg)
        return Configuration(edge_set)

    # endregion Canonical configurations

    # region Nodes

    @property
    def changed_nodes(self) -> tuple[NodeId, ...]:
        """Nodes whose out-edges differ between the two configurations, sorted."""

        return self._changed

    @property
    def real_nodes(self) -> frozenset[NodeId]:
        return self.nodes - self.synthetic

    def is_noop(self, node: NodeId) -> bool:
        self.require_node(node)
        return self._initial.out_edges(node) == self._final.out_edges(node)

    def out_initial(self, node: NodeId) -> frozenset[Edge]:
        self.require_node(node)
        return frozenset(self._initial.out_edges(node))

    def out_final(self, node: NodeId) -> frozenset[Edge]:
        self.require_node(node)
        return frozenset(self._final.out_edges(node))

    def require_node(self, node: NodeId) -> None:
        if node not in self.nodes:
            msg = f"Unknown node {node!r}"
            raise UnknownNodeError(msg)

    # endregion Nodes

    def _validate_endpoints(self) -> None:
        if any(not node for node in self.nodes):
            msg = "Node ids must be nonempty strings"
            raise InvalidInstanceError(msg)
        if self.source not in self.nodes:
            msg = f"Source {self.source!r} is not a declared node"
            raise UnknownNodeError(msg)

        seen_pairs: set[tuple[NodeId, NodeId]] = set()
        for edge in sorted(self.edges):
            for endpoint in (edge.from_node, edge.to_node):
                if endpoint not in self.nodes:
                    msg = f"Edge {edge} references unknown node {endpoint!r}"
                    raise UnknownNodeError(msg)
            if edge.from_node == edge.to_node:
                msg = f"Edge {edge} is a self-loop"
                raise SelfLoopError(msg)
            pair = (edge.from_node, edge.to_node)
            if pair in seen_pairs:
                msg = f"Edge {edge.from_node}->{edge.to_node} is declared more than once"
                raise DuplicateEdgeError(msg)
            seen_pairs.add(pair)

    def _validate_proper(self, name: str, configuration: Configuration) -> None:
        incoming = sorted(edge for edge in configuration.edges if edge.to_node == self.source)
        if incoming:
            msg = (
                f"Source {self.source!r} has incoming edge {incoming[0]} "
                f"in the {name} configuration"
            )
            raise SourceHasIncomingEdgesError(msg)

        graph = configuration.to_digraph(self.nodes)
        if not nx.is_directed_acyclic_graph(graph):
            cycle = " -> ".join(str(edge[0]) for edge in nx.find_cycle(graph))
            msg = f"Cycle in the {name} configuration: {cycle}"
            raise CyclicConfigurationError(msg)
