from __future__ import annotations

from collections.abc import Iterable, Mapping
from enum import StrEnum

from netorder.analysis.downstream import DownMark, mark_downstream, post_update_mark
from netorder.analysis.exceptions import AnomalousPathError
from netorder.analysis.upstream import UpstreamClass, UpstreamKind, classify_upstream
from netorder.model.network import Configuration, NetworkInstance, NodeId


class Validity(StrEnum):
    VALID = "valid"
    INVALID = "invalid"
    NOT_CHANGED = "not-a-changed-node"


def is_valid(
    instance: NetworkInstance,
    configuration: Configuration,
    node: NodeId,
    *,
    upstream: Mapping[NodeId, UpstreamClass] | None = None,
    marks: Mapping[NodeId, DownMark] | None = None,
) -> Validity:
    """Decide whether updating `node` in `configuration` keeps the update careful.

    The upstream kind of the node selects which downstream flag must hold on
    `upd1(configuration, node)`. Disconnected nodes must be ready for the final
    configuration too, even though updating them cannot break consistency.
    """

    if instance.is_noop(node):
        return Validity.NOT_CHANGED

    if upstream is None:
        upstream = classify_upstream(instance, configuration)
    if marks is None:
        marks = mark_downstream(instance, configuration)

    upstream_class = upstream[node]
    if upstream_class.anomalous:
        msg = f"Node {node!r} is reached by a path in neither configuration"
        raise AnomalousPathError(msg)

    mark = post_update_mark(instance, marks, node)
    match upstream_class.kind:
        case UpstreamKind.TYPE_A:
            holds = not instance.final.out_edges(node) or mark.all_cf_max
        case UpstreamKind.TYPE_B:
            holds = mark.all_either_max
        case UpstreamKind.TYPE_C:
            holds = mark.all_cf_max
        case UpstreamKind.TYPE_D:
            holds = mark.all_ci_max
        case UpstreamKind.TYPE_E:
            holds = mark.all_both_max

    return Validity.VALID if holds else Validity.INVALID


def valid_nodes(
    instance: NetworkInstance,
    configuration: Configuration,
    candidates: Iterable[NodeId] | None = None,
) -> frozenset[NodeId]:
    """Return the valid nodes among `candidates` (all changed nodes by default)."""

    upstream = classify_upstream(instance, configuration)
    marks = mark_downstream(instance, configuration)
    pool = instance.changed_nodes if candidates is None else candidates
    return frozenset(
        node
        for node in pool
        if is_valid(instance, configuration, node, upstream=upstream, marks=marks)
        is Validity.VALID
    )


def is_safe_update(
    instance: NetworkInstance,
    configuration: Configuration,
    node: NodeId,
    *,
    upstream: Mapping[NodeId, UpstreamClass] | None = None,
    marks: Mapping[NodeId, DownMark] | None = None,
) -> bool:
    """Return whether updating `node` keeps a consistent configuration consistent."""

    if upstream is None:
        upstream = classify_upstream(instance, configuration)
    if not upstream[node].reachable:
        return True
    validity = is_valid(instance, configuration, node, upstream=upstream, marks=marks)
    return validity is not Validity.INVALID
