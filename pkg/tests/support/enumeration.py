from __future__ import annotations

from netorder.analysis.upstream import UpstreamKind
from netorder.model.network import Configuration, Edge, NetworkInstance, NodeId

type Path = tuple[Edge, ...]


def maximal_paths(configuration: Configuration, start: NodeId) -> list[Path] | None:
    """Every maximal path leaving `start`, or None when a cycle is reachable from it."""

    paths: list[Path] = []

    def walk(node: NodeId, path: Path, on_path: frozenset[NodeId]) -> bool:
        edges = configuration.out_edges(node)
        if not edges:
            paths.append(path)
            return True
        for edge in edges:
            if edge.to_node in on_path:
                return False
            if not walk(edge.to_node, (*path, edge), on_path | {edge.to_node}):
                return False
        return True

    return paths if walk(start, (), frozenset({start})) else None


def source_paths(configuration: Configuration, source: NodeId) -> dict[NodeId, list[Path]]:
    """Every path from `source` to every node it reaches, the empty path included."""

    found: dict[NodeId, list[Path]] = {source: [()]}
    stack: list[tuple[NodeId, Path]] = [(source, ())]
    while stack:
        node, path = stack.pop()
        for edge in configuration.out_edges(node):
            extended = (*path, edge)
            found.setdefault(edge.to_node, []).append(extended)
            stack.append((edge.to_node, extended))
    return found


def maximal_in_initial(instance: NetworkInstance, start: NodeId, path: Path) -> bool:
    end = path[-1].to_node if path else start
    return all(edge.in_initial for edge in path) and not instance.initial.out_edges(end)


def maximal_in_final(instance: NetworkInstance, start: NodeId, path: Path) -> bool:
    end = path[-1].to_node if path else start
    return all(edge.in_final for edge in path) and not instance.final.out_edges(end)


def enumerated_flags(
    instance: NetworkInstance,
    configuration: Configuration,
    node: NodeId,
) -> tuple[bool, bool, bool, bool]:
    """(all Ci-maximal, all Cf-maximal, all either, all both) by explicit enumeration."""

    paths = maximal_paths(configuration, node)
    if paths is None:
        return (False, False, False, False)

    initial = [maximal_in_initial(instance, node, path) for path in paths]
    final = [maximal_in_final(instance, node, path) for path in paths]
    return (
        all(initial),
        all(final),
        all(i or f for i, f in zip(initial, final, strict=True)),
        all(i and f for i, f in zip(initial, final, strict=True)),
    )


def enumerated_consistency(instance: NetworkInstance, configuration: Configuration) -> bool:
    paths = maximal_paths(configuration, instance.source)
    if paths is None:
        return False
    return all(
        maximal_in_initial(instance, instance.source, path)
        or maximal_in_final(instance, instance.source, path)
        for path in paths
    )


def enumerated_upstream(
    configuration: Configuration,
    source: NodeId,
) -> dict[NodeId, tuple[UpstreamKind, bool]]:
    """Kind and anomaly flag of every reachable node, from the definitions.

    Paths lying in neither configuration only set the anomaly flag.
    """

    result: dict[NodeId, tuple[UpstreamKind, bool]] = {}
    for node, paths in source_paths(configuration, source).items():
        in_initial = [all(edge.in_initial for edge in path) for path in paths]
        in_final = [all(edge.in_final for edge in path) for path in paths]
        anomalous = any(not i and not f for i, f in zip(in_initial, in_final, strict=True))
        proper = [(i, f) for i, f in zip(in_initial, in_final, strict=True) if i or f]

        if proper and all(i and f for i, f in proper):
            kind = UpstreamKind.TYPE_B
        elif proper and all(f for _, f in proper):
            kind = UpstreamKind.TYPE_C
        elif proper and all(i for i, _ in proper):
            kind = UpstreamKind.TYPE_D
        else:
            kind = UpstreamKind.TYPE_E
        result[node] = (kind, anomalous)
    return result
