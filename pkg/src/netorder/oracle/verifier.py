from __future__ import annotations

import itertools
import logging
from collections import Counter
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from enum import StrEnum

from pydantic import BaseModel, ConfigDict

from netorder.analysis.consistency import ConsistencyVerdict, is_consistent
from netorder.model.network import Configuration, NetworkInstance, NodeId
from netorder.model.updates import upd, upd1
from netorder.oracle.exceptions import PlanReferenceError
from netorder.planner.plan import WaitedPlan

logger = logging.getLogger(__name__)

DEFAULT_EXHAUSTIVE_LIMIT = 6


class ViolationKind(StrEnum):
    PARTITION = "partition"
    PREFIX = "prefix"
    UNION = "union"


class VerifyRegime(StrEnum):
    EXHAUSTIVE = "exhaustive"
    SAMPLED = "sampled"


@dataclass(frozen=True, slots=True, kw_only=True)
class Violation:
    kind: ViolationKind
    round_index: int | None
    nodes: tuple[NodeId, ...]
    witness: tuple[NodeId, ...] = ()

    def describe(self) -> str:
        where = "plan" if self.round_index is None else f"round {self.round_index}"
        nodes = ", ".join(self.nodes)
        match self.kind:
            case ViolationKind.PARTITION if not self.nodes:
                text = f"{where}: is empty in a solved plan"
            case ViolationKind.PARTITION:
                text = f"{where}: rounds do not partition the changed nodes ({nodes})"
            case ViolationKind.PREFIX:
                text = f"{where}: prefix [{nodes}] reaches an inconsistent configuration"
            case ViolationKind.UNION:
                text = f"{where}: union across [{nodes}] is inconsistent"
        if self.witness:
            text += f" via {' -> '.join(self.witness)}"
        return text

    def to_document(self) -> ViolationDocument:
        return ViolationDocument(
            kind=self.kind,
            round=self.round_index,
            nodes=list(self.nodes),
            witness=list(self.witness),
            message=self.describe(),
        )


@dataclass(frozen=True, slots=True, kw_only=True)
class VerifyReport:
    ok: bool
    regime: VerifyRegime
    violation: Violation | None = None

    def __bool__(self) -> bool:
        return self.ok

    def to_document(self) -> VerifyReportDocument:
        return VerifyReportDocument(
            ok=self.ok,
            regime=self.regime,
            violation=None if self.violation is None else self.violation.to_document(),
        )


class ViolationDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: ViolationKind
    round: int | None
    nodes: list[str]
    witness: list[str]
    message: str


class VerifyReportDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    ok: bool
    regime: VerifyRegime
    violation: ViolationDocument | None


def verify_plan(
    instance: NetworkInstance,
    plan: WaitedPlan,
    *,
    exhaustive_limit: int = DEFAULT_EXHAUSTIVE_LIMIT,
) -> VerifyReport:
    """Check a waited plan against the definition of a consistent update sequence.

    Rounds must partition the changed nodes, and a solved plan may not write an empty
    round (partial plans of unsolved instances are exempt from both). For each round,
    every prefix of every tested permutation must be consistent, and so must the union
    of the configurations between any two updates of the same round. Rounds up to
    `exhaustive_limit` nodes are tested over all permutations; larger rounds over the
    serialized order and its adjacent transpositions. No-op nodes are ignored wherever
    they appear.
    """

    unknown = sorted(node for node in plan.order if node not in instance.nodes)
    if unknown:
        msg = f"Plan references unknown nodes {unknown}"
        raise PlanReferenceError(msg)

    rounds = [
        tuple(node for node in round_ if not instance.is_noop(node)) for round_ in plan.rounds
    ]
    largest = max((len(round_) for round_ in rounds), default=0)
    regime = VerifyRegime.EXHAUSTIVE if largest <= exhaustive_limit else VerifyRegime.SAMPLED

    partition_violation = _check_partition(instance, plan, rounds)
    if partition_violation is not None:
        return VerifyReport(ok=False, regime=regime, violation=partition_violation)

    start = instance.initial
    for round_index, round_ in enumerate(rounds):
        checker = _RoundChecker(instance=instance, start=start)
        for permutation in _permutations(round_, regime):
            violation = checker.check(round_index, permutation)
            if violation is not None:
                logger.debug("Plan violates consistency: %s", violation.describe())
                return VerifyReport(ok=False, regime=regime, violation=violation)
        start = upd(instance, start, round_)

    return VerifyReport(ok=True, regime=regime)


def _check_partition(
    instance: NetworkInstance,
    plan: WaitedPlan,
    rounds: Sequence[tuple[NodeId, ...]],
) -> Violation | None:
    if plan.solved:
        # Only written rounds count; a round of no-op nodes alone is fine.
        for round_index, round_ in enumerate(plan.rounds):
            if not round_:
                return Violation(kind=ViolationKind.PARTITION, round_index=round_index, nodes=())

    counts = Counter(node for round_ in rounds for node in round_)
    repeated = tuple(sorted(node for node, count in counts.items() if count > 1))
    if repeated:
        return Violation(kind=ViolationKind.PARTITION, round_index=None, nodes=repeated)

    if plan.solved:
        missing = tuple(node for node in instance.changed_nodes if node not in counts)
        if missing:
            return Violation(kind=ViolationKind.PARTITION, round_index=None, nodes=missing)

    return None


def _permutations(
    round_: tuple[NodeId, ...],
    regime: VerifyRegime,
) -> Iterator[tuple[NodeId, ...]]:
    if regime is VerifyRegime.EXHAUSTIVE:
        yield from itertools.permutations(round_)
        return

    yield round_
    for index in range(len(round_) - 1):
        swapped = list(round_)
        swapped[index], swapped[index + 1] = swapped[index + 1], swapped[index]
        yield tuple(swapped)


@dataclass(slots=True, kw_only=True)
class _RoundChecker:
    """Memoizes configurations of one round by the set of nodes already updated."""

    instance: NetworkInstance
    start: Configuration
    _configurations: dict[frozenset[NodeId], Configuration] = field(default_factory=dict)
    _verdicts: dict[object, ConsistencyVerdict] = field(default_factory=dict)

    def check(self, round_index: int, permutation: tuple[NodeId, ...]) -> Violation | None:
        for length in range(1, len(permutation) + 1):
            verdict = self._state_verdict(frozenset(permutation[:length]))
            if not verdict:
                return Violation(
                    kind=ViolationKind.PREFIX,
                    round_index=round_index,
                    nodes=permutation[:length],
                    witness=verdict.witness,
                )

        for first, last in itertools.combinations(range(len(permutation)), 2):
            # The configurations between two updates only ever hold each node's old or
            # new out-edges, so their union is the union of the two end points.
            before = frozenset(permutation[:first])
            after = frozenset(permutation[: last + 1])
            verdict = self._union_verdict(before, after)
            if not verdict:
                return Violation(
                    kind=ViolationKind.UNION,
                    round_index=round_index,
                    nodes=permutation[first : last + 1],
                    witness=verdict.witness,
                )
        return None

    def _configuration(self, updated: frozenset[NodeId]) -> Configuration:
        configuration = self._configurations.get(updated)
        if configuration is None:
            if not updated:
                configuration = self.start
            else:
                last = max(updated)
                configuration = upd1(self.instance, self._configuration(updated - {last}), last)
            self._configurations[updated] = configuration
        return configuration

    def _state_verdict(self, updated: frozenset[NodeId]) -> ConsistencyVerdict:
        verdict = self._verdicts.get(updated)
        if verdict is None:
            verdict = is_consistent(self.instance, self._configuration(updated))
            self._verdicts[updated] = verdict
        return verdict

    def _union_verdict(
        self,
        before: frozenset[NodeId],
        after: frozenset[NodeId],
    ) -> ConsistencyVerdict:
        key = (before, after)
        verdict = self._verdicts.get(key)
        if verdict is None:
            union = self._configuration(before).union(self._configuration(after))
            verdict = is_consistent(self.instance, union)
            self._verdicts[key] = verdict
        return verdict
