from __future__ import annotations

from enum import StrEnum

from netorder.model.network import NetworkInstance
from netorder.planner.optimal import plan_optimal
from netorder.planner.plan import WaitedPlan
from netorder.planner.sequential import plan_sequential


class PlannerMode(StrEnum):
    OPTIMAL = "optimal"
    SEQUENTIAL = "sequential"


def plan_with(
    instance: NetworkInstance,
    mode: PlannerMode = PlannerMode.OPTIMAL,
    *,
    check_invariants: bool = False,
) -> WaitedPlan:
    match mode:
        case PlannerMode.OPTIMAL:
            return plan_optimal(instance, check_invariants=check_invariants)
        case PlannerMode.SEQUENTIAL:
            return plan_sequential(instance, check_invariants=check_invariants)
