from __future__ import annotations

from dataclasses import dataclass

from netorder.model.network import NetworkInstance, NodeId
from netorder.planner.base import BasePlanner, PlannerState
from netorder.planner.plan import WaitedPlan


@dataclass(slots=True, kw_only=True)
class SequentialPlanner(BasePlanner):
    """Waits after every update; each round holds a single node."""

    def _opens_round(self, state: PlannerState) -> bool:
        return True

    def _pick(self, state: PlannerState) -> NodeId:
        return min(state.valid)


def plan_sequential(instance: NetworkInstance, *, check_invariants: bool = False) -> WaitedPlan:
    return SequentialPlanner(instance=instance, check_invariants=check_invariants).plan()
