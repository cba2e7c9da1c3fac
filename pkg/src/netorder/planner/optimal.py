from __future__ import annotations

import logging
from dataclasses import dataclass, field

from netorder.analysis.upstream import reachable_nodes
from netorder.model.network import NetworkInstance, NodeId
from netorder.model.updates import upd
from netorder.planner.base import BasePlanner, PlannerState
from netorder.planner.plan import WaitedPlan

logger = logging.getLogger(__name__)


@dataclass(slots=True, kw_only=True)
class OptimalPlanner(BasePlanner):
    """Groups updates into as few rounds as possible.

    A round starts with every node valid at its first configuration (priority P0).
    While it runs, a node that turns valid joins P0 only if no packet can reach it
    in the union of the round's configurations; any other node waits for the next
    round.
    """

    _round_reach: frozenset[NodeId] = field(default=frozenset(), init=False)

    def _opens_round(self, state: PlannerState) -> bool:
        if state.round_index >= 0:
            detached = {node for node in state.valid - state.p0 if node not in self._round_reach}
            if detached:
                logger.debug("Admitting detached nodes %s to P0", sorted(detached))
                state.p0 |= detached
        return not state.p0

    def _start_round(self, state: PlannerState) -> None:
        state.p0 = set(state.valid)
        reserved = upd(self.instance, state.current, sorted(state.p0))
        self._round_reach = reachable_nodes(state.current.union(reserved), self.instance.source)

    def _pick(self, state: PlannerState) -> NodeId:
        return min(state.p0)


def plan_optimal(instance: NetworkInstance, *, check_invariants: bool = False) -> WaitedPlan:
    return OptimalPlanner(instance=instance, check_invariants=check_invariants).plan()
