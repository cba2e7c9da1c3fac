from __future__ import annotations

from netorder.model.documents import parse_instance, serialize_instance
from netorder.model.network import Configuration, Edge, EdgeLabel, NetworkInstance, NodeId
from netorder.model.updates import (
    MASTER_SOURCE,
    apply_rounds,
    out,
    real_sources,
    reduce_multi_source,
    upd,
    upd1,
)

__all__: list[str] = [
    "MASTER_SOURCE",
    "Configuration",
    "Edge",
    "EdgeLabel",
    "NetworkInstance",
    "NodeId",
    "apply_rounds",
    "out",
    "parse_instance",
    "real_sources",
    "reduce_multi_source",
    "serialize_instance",
    "upd",
    "upd1",
]
