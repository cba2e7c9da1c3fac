from __future__ import annotations

from netorder.analysis.consistency import ConsistencyVerdict, is_consistent
from netorder.analysis.downstream import DownMark, combine_marks, mark_downstream, post_update_mark
from netorder.analysis.upstream import (
    ReachState,
    UpstreamClass,
    UpstreamKind,
    classify_upstream,
    find_reachable_cycle,
    reachable_nodes,
)
from netorder.analysis.validity import Validity, is_safe_update, is_valid, valid_nodes

__all__: list[str] = [
    "ConsistencyVerdict",
    "DownMark",
    "ReachState",
    "UpstreamClass",
    "UpstreamKind",
    "Validity",
    "classify_upstream",
    "combine_marks",
    "find_reachable_cycle",
    "is_consistent",
    "is_safe_update",
    "is_valid",
    "mark_downstream",
    "post_update_mark",
    "reachable_nodes",
    "valid_nodes",
]
