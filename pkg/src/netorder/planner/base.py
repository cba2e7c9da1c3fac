from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from collections.abc import Mapping
from dataclasses import dataclass, field

from netorder.analysis.consistency import is_consistent
from netorder.analysis.downstream import DownMark, mark_downstream
from netorder.analysis.upstream import UpstreamClass, classify_upstream
from netorder.analysis.validity import Validity, is_safe_update, is_valid
from netorder.model.network import Configuration, NetworkInstance, NodeId
from netorder.model.updates import upd1
from netorder.planner.exceptions import PlannerInvariantError
from netorder.planner.plan import PlanStatus, WaitedPlan

logger = logging.getLogger(__name__)


@dataclass(slots=True, kw_only=True)
class PlannerState:
    current: Configuration
    pending: set[NodeId]
    valid: frozenset[NodeId] = frozenset()
    p0: set[NodeId] = field(default_factory=set)
    round_index: int = -1
    rounds: list[list[NodeId]] = field(default_factory=list)
    upstream: Mapping[NodeId, UpstreamClass] = field(default_factory=dict)
    marks: Mapping[NodeId, DownMark] = field(default_factory=dict)


@dataclass(frozen=True, slots=True, kw_only=True)
class PlanStep:
    """One pick of the planner, recorded for diagnostics and cross-checks.

    `history` holds the rounds emitted before the pick, the last one still open.
    `wait_free` holds the valid nodes that could be updated at this point without
    a wait.
    """

    node: NodeId
    round_index: int
    opens_round: bool
    valid: frozenset[NodeId]
    wait_free: frozenset[NodeId]
    history: tuple[tuple[NodeId, ...], ...]


@dataclass(slots=True, kw_only=True)
class BasePlanner(ABC):
    """The update loop shared by every planner.

    Each iteration recomputes the valid set from scratch, lets the subclass decide
    whether a wait precedes the next update, and applies the picked node.
    """

    instance: NetworkInstance
    check_invariants: bool = False
    trace: list[PlanStep] = field(default_factory=list, init=False)

    def plan(self) -> WaitedPlan:
        self.trace.clear()
        state = PlannerState(
            current=self.instance.initial,
            pending=set(self.instance.changed_nodes),
        )
        previous_valid: frozenset[NodeId] = frozenset()

        while state.pending:
            state.upstream = classify_upstream(self.instance, state.current)
            state.marks = mark_downstream(self.instance, state.current)
            state.valid = frozenset(
                node
                for node in state.pending
                if is_valid(
                    self.instance,
                    state.current,
                    node,
                    upstream=state.upstream,
                    marks=state.marks,
                )
                is Validity.VALID
            )
            if self.check_invariants:
                self._check_persistence(state, previous_valid)

            if not state.valid:
                logger.debug(
                    "No valid node among %d pending; no consistent order exists",
                    len(state.pending),
                )
                return WaitedPlan.of(state.rounds, PlanStatus.NO_CONSISTENT_ORDER)

            opens_round = self._opens_round(state)
            wait_free = self._wait_free(state, opens_round=opens_round)
            history = tuple(tuple(round_) for round_ in state.rounds)
            if opens_round:
                state.round_index += 1
                state.rounds.append([])
                self._start_round(state)
                logger.debug("Round %d opens", state.round_index)

            node = self._pick(state)
            self.trace.append(
                PlanStep(
                    node=node,
                    round_index=state.round_index,
                    opens_round=opens_round,
                    valid=state.valid,
                    wait_free=wait_free,
                    history=history,
                ),
            )
            logger.debug("Updating %s in round %d", node, state.round_index)

            state.current = upd1(self.instance, state.current, node)
            state.pending.discard(node)
            state.p0.discard(node)
            state.rounds[-1].append(node)
            previous_valid = state.valid - {node}

            if self.check_invariants:
                self._check_prefix(state)

        return WaitedPlan.of(state.rounds)

    @abstractmethod
    def _opens_round(self, state: PlannerState) -> bool:
        """Return whether a wait is placed before the next update."""

    @abstractmethod
    def _pick(self, state: PlannerState) -> NodeId:
        """Choose the next node to update."""

    def _start_round(self, state: PlannerState) -> None:
        """Hook run right after a wait."""

    def _wait_free(self, state: PlannerState, *, opens_round: bool) -> frozenset[NodeId]:
        if state.round_index < 0:
            return state.valid
        if opens_round:
            return frozenset()
        return frozenset(state.p0)

    # region Invariant checks

    def _check_prefix(self, state: PlannerState) -> None:
        verdict = is_consistent(self.instance, state.current)
        if not verdict:
            msg = (
                f"Prefix {[node for round_ in state.rounds for node in round_]} "
                f"reaches an inconsistent configuration via {' -> '.join(verdict.witness)}"
            )
            raise PlannerInvariantError(msg)

    def _check_persistence(self, state: PlannerState, previous_valid: frozenset[NodeId]) -> None:
        for node in sorted(previous_valid - state.valid):
            if state.upstream[node].reachable:
                msg = f"Node {node!r} lost validity while still reachable from the source"
                raise PlannerInvariantError(msg)

        for node in sorted(state.p0):
            safe = is_safe_update(
                self.instance,
                state.current,
                node,
                upstream=state.upstream,
                marks=state.marks,
            )
            if not safe:
                msg = f"Node {node!r} holds priority P0 but can no longer be updated safely"
                raise PlannerInvariantError(msg)

    # endregion Invariant checks
