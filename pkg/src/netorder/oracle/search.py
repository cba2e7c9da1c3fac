from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field

from pydantic import BaseModel, ConfigDict

from netorder.analysis.consistency import is_consistent
from netorder.analysis.validity import valid_nodes
from netorder.model.network import Configuration, NetworkInstance, NodeId
from netorder.model.updates import upd1
from netorder.oracle.exceptions import OracleError, OracleLimitError
from netorder.planner.plan import PlanDocument, WaitedPlan

logger = logging.getLogger(__name__)

DEFAULT_NODE_LIMIT = 10


@dataclass(frozen=True, slots=True, kw_only=True)
class OracleResult:
    """Minimal number of update rounds, with a plan achieving it.

    `exists`, `min_rounds` and `witness` are either all set or all empty.
    """

    exists: bool
    min_rounds: int | None = None
    witness: WaitedPlan | None = None

    def __post_init__(self) -> None:
        if self.exists != (self.min_rounds is not None) or self.exists != (
            self.witness is not None
        ):
            msg = (
                f"OracleResult(exists={self.exists}) needs min_rounds and witness "
                f"{'set' if self.exists else 'unset'}"
            )
            raise OracleError(msg)
        if self.witness is not None and len(self.witness.rounds) != self.min_rounds:
            msg = f"Witness has {len(self.witness.rounds)} rounds, expected {self.min_rounds}"
            raise OracleError(msg)

    def to_document(self) -> OracleDocument:
        return OracleDocument(
            exists=self.exists,
            min_rounds=self.min_rounds,
            witness=None if self.witness is None else self.witness.to_document(),
        )


class OracleDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    exists: bool
    min_rounds: int | None
    witness: PlanDocument | None


def search_min_rounds(
    instance: NetworkInstance,
    node_limit: int = DEFAULT_NODE_LIMIT,
    *,
    careful: bool = False,
) -> OracleResult:
    """Find the fewest rounds any consistent update sequence needs.

    A round is feasible from a configuration when every subset of its nodes can be
    applied without producing an inconsistent configuration, which is the same as
    every prefix of every order of the round being consistent. With `careful=True`
    each round must also admit an order in which every node is valid when updated.
    """

    changed = instance.changed_nodes
    if len(changed) > node_limit:
        msg = f"Instance has {len(changed)} changed nodes, the search accepts at most {node_limit}"
        raise OracleLimitError(msg)

    if not changed:
        return OracleResult(exists=True, min_rounds=0, witness=WaitedPlan.of([]))

    search = _RoundSearch(instance=instance, nodes=changed, careful=careful)
    rounds = search.run()
    logger.debug(
        "Oracle explored %d configurations and %d round intervals",
        len(search.configurations),
        len(search.feasible_intervals),
    )
    if rounds is None:
        return OracleResult(exists=False)

    return OracleResult(exists=True, min_rounds=len(rounds), witness=WaitedPlan.of(rounds))


@dataclass(slots=True, kw_only=True)
class _RoundSearch:
    """Dynamic programming over the sets of updated nodes, encoded as bitmasks.

    `best[mask]` is the fewest rounds after which exactly the nodes of `mask` are
    updated; masks are settled in order of size, so each is final before it is
    extended.
    """

    instance: NetworkInstance
    nodes: tuple[NodeId, ...]
    careful: bool
    configurations: dict[int, Configuration] = field(default_factory=dict)
    consistent: dict[int, bool] = field(default_factory=dict)
    feasible_intervals: dict[tuple[int, int], bool] = field(default_factory=dict)
    careful_intervals: dict[tuple[int, int], bool] = field(default_factory=dict)
    valid: dict[int, frozenset[NodeId]] = field(default_factory=dict)

    def run(self) -> list[list[NodeId]] | None:
        full = (1 << len(self.nodes)) - 1
        best: dict[int, int] = {0: 0}
        parent: dict[int, int] = {}

        for start in sorted(range(full + 1), key=int.bit_count):
            if start not in best or start == full:
                continue
            rest = full & ~start
            subset = rest
            while subset:
                target = start | subset
                if best[start] + 1 < best.get(target, len(self.nodes) + 1) and self._round(
                    start,
                    target,
                ):
                    best[target] = best[start] + 1
                    parent[target] = start
                subset = (subset - 1) & rest

        if full not in best:
            return None

        rounds: list[list[NodeId]] = []
        target = full
        while target:
            start = parent[target]
            rounds.append(self._names(target & ~start))
            target = start
        rounds.reverse()
        return rounds

    def _round(self, start: int, target: int) -> bool:
        if not self._feasible(start, target):
            return False
        return not self.careful or self._careful(start, target)

    def _feasible(self, start: int, target: int) -> bool:
        key = (start, target)
        cached = self.feasible_intervals.get(key)
        if cached is not None:
            return cached

        result = self._consistent(target)
        missing = target & ~start
        while result and missing:
            bit = missing & -missing
            result = self._feasible(start, target ^ bit)
            missing ^= bit

        self.feasible_intervals[key] = result
        return result

    def _careful(self, start: int, target: int) -> bool:
        if start == target:
            return True

        key = (start, target)
        cached = self.careful_intervals.get(key)
        if cached is not None:
            return cached

        result = False
        missing = target & ~start
        while missing and not result:
            bit = missing & -missing
            before = target ^ bit
            node = self.nodes[bit.bit_length() - 1]
            result = node in self._valid(before) and self._careful(start, before)
            missing ^= bit

        self.careful_intervals[key] = result
        return result

    def _configuration(self, mask: int) -> Configuration:
        configuration = self.configurations.get(mask)
        if configuration is None:
            if mask == 0:
                configuration = self.instance.initial
            else:
                bit = mask & -mask
                node = self.nodes[bit.bit_length() - 1]
                configuration = upd1(self.instance, self._configuration(mask ^ bit), node)
            self.configurations[mask] = configuration
        return configuration

    def _consistent(self, mask: int) -> bool:
        cached = self.consistent.get(mask)
        if cached is None:
            cached = bool(is_consistent(self.instance, self._configuration(mask)))
            self.consistent[mask] = cached
        return cached

    def _valid(self, mask: int) -> frozenset[NodeId]:
        cached = self.valid.get(mask)
        if cached is None:
            pending = [node for index, node in enumerate(self.nodes) if not mask >> index & 1]
            cached = valid_nodes(self.instance, self._configuration(mask), pending)
            self.valid[mask] = cached
        return cached

    def _names(self, mask: int) -> list[NodeId]:
        return [node for index, node in enumerate(self.nodes) if mask >> index & 1]


def place_waits(instance: NetworkInstance, order: Sequence[NodeId]) -> WaitedPlan | None:
    """Split a fixed update order into the fewest rounds.

    A wait goes before a node exactly when adding it to the open round would let some
    subset of the round produce an inconsistent configuration. Feasibility of a round
    is inherited by its suffixes, so placing waits as late as possible is optimal for
    the given order. Returns `None` when the order itself reaches an inconsistent
    configuration.
    """

    for node in order:
        instance.require_node(node)

    rounds: list[list[NodeId]] = []
    current = instance.initial
    reachable_states: set[Configuration] = {current}

    for node in order:
        extended = {upd1(instance, state, node) for state in reachable_states}
        if rounds and all(is_consistent(instance, state) for state in extended):
            reachable_states |= extended
        else:
            following = upd1(instance, current, node)
            if not is_consistent(instance, following):
                logger.debug("Order reaches an inconsistent configuration at %s", node)
                return None
            rounds.append([])
            reachable_states = {current, following}

        rounds[-1].append(node)
        current = upd1(instance, current, node)

    return WaitedPlan.of(rounds)
