from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence

from netorder.model.exceptions import (
    InvalidInstanceError,
    RepeatedNodeError,
    SourceHasIncomingEdgesError,
)
from netorder.model.network import Configuration, Edge, EdgeLabel, NetworkInstance, NodeId

logger = logging.getLogger(__name__)

MASTER_SOURCE = "__master__"


def out(instance: NetworkInstance, configuration: Configuration, node: NodeId) -> frozenset[Edge]:
    """Return the edges of `configuration` leaving `node`."""

    instance.require_node(node)
    return frozenset(configuration.out_edges(node))


def upd1(instance: NetworkInstance, configuration: Configuration, node: NodeId) -> Configuration:
    """Replace the initial out-edges of `node` with its final out-edges."""

    removed = instance.out_initial(node)
    added = instance.out_final(node)
    if removed == added:
        return configuration
    return Configuration((configuration.edges - removed) | added)


def upd(
    instance: NetworkInstance,
    configuration: Configuration,
    nodes: Sequence[NodeId],
) -> Configuration:
    seen: set[NodeId] = set()
    for node in nodes:
        if node in seen:
            msg = f"Node {node!r} appears more than once in the update sequence"
            raise RepeatedNodeError(msg)
        seen.add(node)

    for node in nodes:
        configuration = upd1(instance, configuration, node)
    return configuration


def apply_rounds(
    instance: NetworkInstance,
    configuration: Configuration,
    rounds: Iterable[Iterable[NodeId]],
) -> Configuration:
    """Apply every round in order, as one flat update sequence."""

    return upd(instance, configuration, [node for round_ in rounds for node in round_])


def reduce_multi_source(sources: Iterable[NodeId], instance: NetworkInstance) -> NetworkInstance:
    """Attach a synthetic master source feeding every real source.

    A single source is returned unchanged apart from becoming the designated source.
    """

    source_set = frozenset(sources)
    if not source_set:
        msg = "At least one source is required"
        raise InvalidInstanceError(msg)

    for source in sorted(source_set):
        instance.require_node(source)
        incoming = sorted(edge for edge in instance.edges if edge.to_node == source)
        if incoming:
            msg = f"Declared source {source!r} has incoming edge {incoming[0]}"
            raise SourceHasIncomingEdgesError(msg)

    if len(source_set) == 1:
        (only,) = source_set
        if only == instance.source:
            return instance
        return NetworkInstance(
            nodes=instance.nodes,
            source=only,
            edges=instance.edges,
            synthetic=instance.synthetic,
        )

    master = _fresh_master_id(instance.nodes)
    logger.debug("Reducing %d sources under master %s", len(source_set), master)
    master_edges = {Edge(master, source, EdgeLabel.BOTH) for source in source_set}
    return NetworkInstance(
        nodes=instance.nodes | {master},
        source=master,
        edges=instance.edges | master_edges,
        synthetic=instance.synthetic | {master},
    )


def real_sources(instance: NetworkInstance) -> tuple[NodeId, ...]:
    """Return the sources a synthetic master feeds, or the plain source."""

    if instance.source not in instance.synthetic:
        return (instance.source,)
    return instance.initial.successors(instance.source)


def _fresh_master_id(taken: frozenset[NodeId]) -> NodeId:
    candidate = MASTER_SOURCE
    suffix = 0
    while candidate in taken:
        suffix += 1
        candidate = f"{MASTER_SOURCE}_{suffix}"
    return candidate
