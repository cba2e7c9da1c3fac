from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from enum import StrEnum

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from netorder.model.network import NodeId
from netorder.planner.exceptions import PlanFormatError


class PlanStatus(StrEnum):
    SOLVED = "Solved"
    NO_CONSISTENT_ORDER = "NoConsistentOrder"


@dataclass(frozen=True, slots=True, kw_only=True)
class WaitedPlan:
    """Update rounds separated by waits.

    Rounds are sets; their order inside a round is the order the planner picked them.
    A plan with status NO_CONSISTENT_ORDER holds the rounds emitted before the planner
    got stuck.
    """

    rounds: tuple[tuple[NodeId, ...], ...]
    status: PlanStatus = PlanStatus.SOLVED

    @classmethod
    def of(
        cls,
        rounds: Iterable[Iterable[NodeId]],
        status: PlanStatus = PlanStatus.SOLVED,
    ) -> WaitedPlan:
        return cls(rounds=tuple(tuple(round_) for round_ in rounds), status=status)

    @property
    def solved(self) -> bool:
        return self.status is PlanStatus.SOLVED

    @property
    def waits(self) -> int:
        return max(len(self.rounds) - 1, 0)

    @property
    def order(self) -> tuple[NodeId, ...]:
        """The flat update order."""

        return tuple(node for round_ in self.rounds for node in round_)

    @property
    def wait_points(self) -> tuple[NodeId, ...]:
        """Nodes immediately before which a wait is placed."""

        return tuple(round_[0] for round_ in self.rounds[1:] if round_)

    @property
    def nodes(self) -> frozenset[NodeId]:
        return frozenset(self.order)

    def to_document(self) -> PlanDocument:
        return PlanDocument(
            status=self.status,
            rounds=[list(round_) for round_ in self.rounds],
            waits=self.waits,
        )

    @classmethod
    def from_document(cls, document: PlanDocument) -> WaitedPlan:
        return cls.of(document.rounds, document.status)


class PlanDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    status: PlanStatus
    rounds: list[list[str]]
    waits: int = Field(ge=0)

    @model_validator(mode="after")
    def _check_rounds(self) -> PlanDocument:
        expected = max(len(self.rounds) - 1, 0)
        if self.waits != expected:
            msg = f"'waits' is {self.waits} but {len(self.rounds)} rounds need {expected}"
            raise ValueError(msg)
        if self.status is PlanStatus.SOLVED:
            empty = [index for index, round_ in enumerate(self.rounds) if not round_]
            if empty:
                msg = f"Solved plan has empty rounds {empty}"
                raise ValueError(msg)
        return self


def parse_plan(text: str | bytes) -> WaitedPlan:
    try:
        document = PlanDocument.model_validate_json(text)
    except ValidationError as exc:
        msg = f"Malformed plan document: {exc}"
        raise PlanFormatError(msg) from exc
    return WaitedPlan.from_document(document)


def serialize_plan(plan: WaitedPlan) -> str:
    return plan.to_document().model_dump_json() + "\n"
