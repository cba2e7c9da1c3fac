from __future__ import annotations

from collections.abc import Sequence

from netorder.analysis.upstream import reachable_nodes
from netorder.analysis.validity import Validity, is_valid, valid_nodes
from netorder.model.network import NetworkInstance, NodeId
from netorder.model.updates import apply_rounds, upd
from netorder.planner.exceptions import NodeNotValidError


def needs_wait(
    instance: NetworkInstance,
    history: Sequence[Sequence[NodeId]],
    node: NodeId,
) -> bool:
    """Return whether a wait must precede updating `node` after `history`.

    `history` lists the rounds applied so far; its last round is still open and may
    be empty right after a wait. A node valid at the round start stays updatable for
    the whole round, so a wait is needed exactly when `node` was invalid there, unless
    no packet can reach `node` in the union of the round's configurations. Every node
    valid at the round start counts as part of the round.
    """

    instance.require_node(node)
    closed, open_round = (history[:-1], history[-1]) if history else ((), ())
    round_start = apply_rounds(instance, instance.initial, closed)

    current = upd(instance, round_start, list(open_round))
    if is_valid(instance, current, node) is not Validity.VALID:
        msg = f"Node {node!r} is not valid in the current configuration"
        raise NodeNotValidError(msg)

    if is_valid(instance, round_start, node) is Validity.VALID:
        return False

    updated_before = {updated for round_ in closed for updated in round_}
    reserved = valid_nodes(
        instance,
        round_start,
        [candidate for candidate in instance.changed_nodes if candidate not in updated_before],
    )
    round_nodes = sorted(reserved | set(open_round) | {node})
    union = round_start.union(upd(instance, round_start, round_nodes))
    return node in reachable_nodes(union, instance.source)
