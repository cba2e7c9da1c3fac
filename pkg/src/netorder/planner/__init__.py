from __future__ import annotations

from netorder.planner.base import BasePlanner, PlannerState, PlanStep
from netorder.planner.modes import PlannerMode, plan_with
from netorder.planner.optimal import OptimalPlanner, plan_optimal
from netorder.planner.plan import (
    PlanDocument,
    PlanStatus,
    WaitedPlan,
    parse_plan,
    serialize_plan,
)
from netorder.planner.sequential import SequentialPlanner, plan_sequential
from netorder.planner.waits import needs_wait

__all__: list[str] = [
    "BasePlanner",
    "OptimalPlanner",
    "PlanDocument",
    "PlanStatus",
    "PlanStep",
    "PlannerMode",
    "PlannerState",
    "SequentialPlanner",
    "WaitedPlan",
    "needs_wait",
    "parse_plan",
    "plan_optimal",
    "plan_sequential",
    "plan_with",
    "serialize_plan",
]
