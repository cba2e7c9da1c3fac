from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from netorder.model.exceptions import InstanceFormatError, MultipleSourcesError
from netorder.model.network import Edge, EdgeLabel, NetworkInstance
from netorder.model.updates import reduce_multi_source, real_sources


class EdgeDocument(BaseModel):
    model_config = ConfigDict(
        extra="forbid",
        frozen=True,
        validate_by_alias=True,
        validate_by_name=True,
    )

    from_node: str = Field(alias="from", min_length=1)
    to_node: str = Field(alias="to", min_length=1)
    label: EdgeLabel = Field(alias="in")


class InstanceDocument(BaseModel):
    """On-disk form of a network instance.

    Exactly one of `source` and `sources` is present. Unknown fields are rejected.
    """

    model_config = ConfigDict(extra="forbid")

    nodes: list[str]
    source: str | None = None
    sources: list[str] | None = None
    edges: list[EdgeDocument] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_source_fields(self) -> InstanceDocument:
        if (self.source is None) == (self.sources is None):
            msg = "exactly one of 'source' and 'sources' must be given"
            raise ValueError(msg)
        if self.sources is not None and not self.sources:
            msg = "'sources' must not be empty"
            raise ValueError(msg)
        return self


def parse_instance(text: str | bytes, *, reduce_sources: bool = False) -> NetworkInstance:
    """Parse and validate an instance document.

    A `sources` list with more than one entry is only accepted when `reduce_sources`
    is set; the sources are then joined under a synthetic master.
    """

    try:
        document = InstanceDocument.model_validate_json(text)
    except ValidationError as exc:
        msg = f"Malformed instance document: {exc}"
        raise InstanceFormatError(msg) from exc

    edges = [Edge(edge.from_node, edge.to_node, edge.label) for edge in document.edges]

    if document.source is not None:
        return NetworkInstance.create(nodes=document.nodes, source=document.source, edges=edges)

    sources = document.sources or []
    if len(set(sources)) > 1 and not reduce_sources:
        msg = f"Instance declares {len(sources)} sources; enable the multi-source reduction"
        raise MultipleSourcesError(msg)

    instance = NetworkInstance.create(nodes=document.nodes, source=min(sources), edges=edges)
    return reduce_multi_source(sources, instance)


def serialize_instance(instance: NetworkInstance) -> str:
    sources = real_sources(instance)
    edges = sorted(
        edge
        for edge in instance.edges
        if edge.from_node not in instance.synthetic and edge.to_node not in instance.synthetic
    )
    document = InstanceDocument(
        nodes=sorted(instance.real_nodes),
        source=sources[0] if instance.source not in instance.synthetic else None,
        sources=list(sources) if instance.source in instance.synthetic else None,
        edges=[
            EdgeDocument.model_validate(
                {"from": edge.from_node, "to": edge.to_node, "in": edge.label},
            )
            for edge in edges
        ],
    )
    return document.model_dump_json(by_alias=True, exclude_none=True, indent=2) + "\n"
