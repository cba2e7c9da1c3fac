from __future__ import annotations

from netorder.analysis.consistency import ConsistencyVerdict, is_consistent
from netorder.analysis.validity import Validity, is_valid, valid_nodes
from netorder.exceptions import NetOrderError
from netorder.instances.fixtures import Fixture, fixture
from netorder.instances.generator import GeneratorMode, generate_random
from netorder.model.documents import parse_instance, serialize_instance
from netorder.model.network import Configuration, Edge, EdgeLabel, NetworkInstance
from netorder.oracle.search import OracleResult, place_waits, search_min_rounds
from netorder.oracle.verifier import VerifyReport, verify_plan
from netorder.planner.modes import PlannerMode, plan_with
from netorder.planner.optimal import plan_optimal
from netorder.planner.plan import PlanStatus, WaitedPlan, parse_plan, serialize_plan
from netorder.planner.sequential import plan_sequential
from netorder.planner.waits import needs_wait

__all__: list[str] = [
    "Configuration",
    "ConsistencyVerdict",
    "Edge",
    "EdgeLabel",
    "Fixture",
    "GeneratorMode",
    "NetOrderError",
    "NetworkInstance",
    "OracleResult",
    "PlanStatus",
    "PlannerMode",
    "Validity",
    "VerifyReport",
    "WaitedPlan",
    "fixture",
    "generate_random",
    "is_consistent",
    "is_valid",
    "needs_wait",
    "parse_instance",
    "parse_plan",
    "place_waits",
    "plan_optimal",
    "plan_sequential",
    "plan_with",
    "search_min_rounds",
    "serialize_instance",
    "serialize_plan",
    "valid_nodes",
    "verify_plan",
]
