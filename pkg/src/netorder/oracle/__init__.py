from __future__ import annotations

from netorder.oracle.search import (
    DEFAULT_NODE_LIMIT,
    OracleDocument,
    OracleResult,
    place_waits,
    search_min_rounds,
)
from netorder.oracle.verifier import (
    DEFAULT_EXHAUSTIVE_LIMIT,
    VerifyRegime,
    VerifyReport,
    VerifyReportDocument,
    Violation,
    ViolationDocument,
    ViolationKind,
    verify_plan,
)

__all__: list[str] = [
    "DEFAULT_EXHAUSTIVE_LIMIT",
    "DEFAULT_NODE_LIMIT",
    "OracleDocument",
    "OracleResult",
    "VerifyRegime",
    "VerifyReport",
    "VerifyReportDocument",
    "Violation",
    "ViolationDocument",
    "ViolationKind",
    "place_waits",
    "search_min_rounds",
    "verify_plan",
]
