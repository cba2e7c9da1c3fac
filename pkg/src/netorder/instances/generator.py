from __future__ import annotations

import logging
import random
from collections.abc import Sequence
from enum import StrEnum

import networkx as nx

from netorder.instances.exceptions import GeneratorParameterError
from netorder.model.network import Edge, EdgeLabel, NetworkInstance, NodeId

logger = logging.getLogger(__name__)

SOURCE = "H1"


class GeneratorMode(StrEnum):
    INDEPENDENT = "independent"
    PERTURB = "perturb"


def generate_random(
    nodes: int,
    edge_density: float,
    seed: int,
    *,
    mode: GeneratorMode = GeneratorMode.INDEPENDENT,
    rewire: int = 2,
) -> NetworkInstance:
    """Sample a proper (initial, final) pair over `nodes` nodes, deterministic per seed.

    INDEPENDENT draws each configuration from its own random topological order.
    PERTURB copies the initial configuration and redraws the out-edges of `rewire`
    nodes, which yields far more near-miss instances such as double diamonds.
    """

    _check_parameters(nodes, edge_density, rewire)
    rng = random.Random(seed)
    names = _node_names(nodes)

    initial = _sample_forward_edges(rng, names, edge_density)
    match mode:
        case GeneratorMode.INDEPENDENT:
            final = _sample_forward_edges(rng, names, edge_density)
        case GeneratorMode.PERTURB:
            final = _rewire(rng, names, initial, edge_density, rewire)

    edges = [
        Edge(pair[0], pair[1], _label(pair in initial, pair in final))
        for pair in sorted(initial | final)
    ]
    logger.debug(
        "Generated %s instance: %d nodes, %d initial and %d final edges (seed %d)",
        mode,
        nodes,
        len(initial),
        len(final),
        seed,
    )
    return NetworkInstance.create(nodes=names, source=SOURCE, edges=edges)


def _check_parameters(nodes: int, edge_density: float, rewire: int) -> None:
    if nodes < 2:
        msg = f"At least 2 nodes are required, got {nodes}"
        raise GeneratorParameterError(msg)
    if not 0 < edge_density <= 1:
        msg = f"Edge density must lie in (0, 1], got {edge_density}"
        raise GeneratorParameterError(msg)
    if rewire < 0:
        msg = f"Rewire count must not be negative, got {rewire}"
        raise GeneratorParameterError(msg)


def _node_names(count: int) -> list[NodeId]:
    width = max(2, len(str(count - 1)))
    return [SOURCE, *(f"S{index:0{width}d}" for index in range(1, count))]


def _sample_forward_edges(
    rng: random.Random,
    names: Sequence[NodeId],
    edge_density: float,
) -> set[tuple[NodeId, NodeId]]:
    # The source stays first so it never gets an incoming edge.
    others = list(names[1:])
    rng.shuffle(others)
    order = [names[0], *others]
    return {
        (order[low], order[high])
        for low in range(len(order))
        for high in range(low + 1, len(order))
        if rng.random() < edge_density
    }


def _rewire(
    rng: random.Random,
    names: Sequence[NodeId],
    initial: set[tuple[NodeId, NodeId]],
    edge_density: float,
    rewire: int,
) -> set[tuple[NodeId, NodeId]]:
    graph: nx.DiGraph[NodeId] = nx.DiGraph()
    graph.add_nodes_from(names)
    graph.add_edges_from(initial)

    candidates = list(names[1:])
    for node in sorted(rng.sample(candidates, min(rewire, len(candidates)))):
        graph.remove_edges_from(list(graph.out_edges(node)))
        targets = [target for target in candidates if target != node]
        rng.shuffle(targets)
        for target in targets:
            if rng.random() < edge_density and not nx.has_path(graph, target, node):
                graph.add_edge(node, target)

    return set(graph.edges())


def _label(in_initial: bool, in_final: bool) -> EdgeLabel:
    if in_initial and in_final:
        return EdgeLabel.BOTH
    return EdgeLabel.INITIAL_ONLY if in_initial else EdgeLabel.FINAL_ONLY
