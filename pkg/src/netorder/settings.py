from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from netorder.oracle.search import DEFAULT_NODE_LIMIT
from netorder.oracle.verifier import DEFAULT_EXHAUSTIVE_LIMIT

type LogLevel = Literal["CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG"]


class Settings(BaseModel):
    """Runtime knobs of the command-line tool.

    Library functions take the same values as keyword arguments with equal defaults.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    oracle_node_limit: int = Field(default=DEFAULT_NODE_LIMIT, ge=1, le=16)
    exhaustive_round_limit: int = Field(default=DEFAULT_EXHAUSTIVE_LIMIT, ge=1, le=8)
    batch_workers: int = Field(default=4, ge=1)
    log_level: LogLevel = "WARNING"
