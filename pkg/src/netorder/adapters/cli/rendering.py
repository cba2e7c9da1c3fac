from __future__ import annotations

from collections.abc import Mapping, Sequence
from enum import StrEnum

from netorder.model.network import Configuration, Edge, EdgeLabel, NetworkInstance, NodeId
from netorder.model.updates import real_sources

_EDGE_STYLES: dict[EdgeLabel, str] = {
    EdgeLabel.INITIAL_ONLY: "",
    EdgeLabel.FINAL_ONLY: " [style=dashed]",
    EdgeLabel.BOTH: ' [color="black:black"]',
}


class Shade(StrEnum):
    """Fill of a node in a plan-step rendering."""

    CURRENT = "gray45"
    EARLIER = "gray85"


def render_dot(
    instance: NetworkInstance,
    configuration: Configuration,
    *,
    name: str,
    shades: Mapping[NodeId, Shade] | None = None,
) -> str:
    """Render `configuration` as a DOT digraph.

    Initial-only edges are solid, final-only edges dashed and shared edges doubled.
    Synthetic nodes and their edges are left out.
    """

    shades = shades or {}
    sources = set(real_sources(instance))
    lines = [f"digraph {_quote(name)} {{", "  rankdir=LR;", "  node [shape=circle];"]

    for node in sorted(instance.real_nodes):
        attributes = ["shape=doublecircle"] if node in sources else []
        shade = shades.get(node)
        if shade is not None:
            attributes += ["style=filled", f'fillcolor="{shade}"']
        suffix = f" [{', '.join(attributes)}]" if attributes else ""
        lines.append(f"  {_quote(node)}{suffix};")

    for edge in configuration:
        if _is_synthetic(instance, edge):
            continue
        lines.append(
            f"  {_quote(edge.from_node)} -> {_quote(edge.to_node)}{_EDGE_STYLES[edge.label]};",
        )

    lines.append("}")
    return "\n".join(lines) + "\n"


def _is_synthetic(instance: NetworkInstance, edge: Edge) -> bool:
    return edge.from_node in instance.synthetic or edge.to_node in instance.synthetic


def _quote(text: str) -> str:
    escaped = text.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def plan_step_shades(rounds: Sequence[Sequence[NodeId]], step: int) -> dict[NodeId, Shade]:
    """Shade the nodes updated in the first `step` rounds, the last of them darker."""

    shades: dict[NodeId, Shade] = {}
    for index, round_ in enumerate(rounds[:step], start=1):
        shade = Shade.CURRENT if index == step else Shade.EARLIER
        shades.update(dict.fromkeys(round_, shade))
    return shades
