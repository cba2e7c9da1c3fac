from __future__ import annotations

from netorder.analysis.downstream import DownMark, mark_downstream, post_update_mark
from netorder.model.network import NetworkInstance
from netorder.model.updates import upd1
from tests.support.builders import build_instance


def test_mark_downstream_on_the_initial_configuration(fig1: NetworkInstance) -> None:
    marks = mark_downstream(fig1, fig1.initial)

    # B -> H2 is shared and H2 is a sink in both configurations.
    assert marks["B"].flags == (True, True, True, True)
    assert marks["C"].flags == (True, True, True, True)
    # A -> C only exists initially.
    assert marks["A"].flags == (True, False, True, False)
    # D has no edges yet, but it has a final out-edge.
    assert marks["D"].flags == (True, False, True, False)
    assert marks["H1"].all_either_max


def test_sink_flags_follow_the_canonical_out_edges(fig1: NetworkInstance) -> None:
    marks = mark_downstream(fig1, fig1.final)

    assert marks["H2"].flags == (True, True, True, True)
    assert marks["C"].flags == (True, True, True, True)
    assert marks["D"].flags == (False, True, True, False)


def test_cycles_and_their_ancestors_get_all_false_marks() -> None:
    instance = build_instance(
        "H1",
        [("H1", "A", "both"), ("A", "B", "i"), ("B", "A", "f"), ("H1", "Z", "both")],
    )
    configuration = instance.initial.union(instance.final)

    marks = mark_downstream(instance, configuration)

    assert marks["A"] == DownMark.bad("A")
    assert marks["B"] == DownMark.bad("B")
    assert marks["H1"] == DownMark.bad("H1")
    assert marks["Z"].flags == (True, True, True, True)


def test_post_update_mark_matches_a_fresh_marking(fig4: NetworkInstance) -> None:
    configuration = fig4.initial
    for node in ("I", "L", "B"):
        configuration = upd1(fig4, configuration, node)
    marks = mark_downstream(fig4, configuration)

    for node in fig4.changed_nodes:
        expected = mark_downstream(fig4, upd1(fig4, configuration, node))[node]
        assert post_update_mark(fig4, marks, node) == expected


def test_post_update_mark_detects_the_cycle_an_update_closes() -> None:
    instance = build_instance("H1", [("H1", "A", "both"), ("A", "B", "i"), ("B", "A", "f")])
    marks = mark_downstream(instance, instance.initial)

    assert post_update_mark(instance, marks, "B").flags == (False, False, False, False)
