from __future__ import annotations

import pytest

from netorder.analysis.upstream import find_reachable_cycle
from netorder.instances.exceptions import GeneratorParameterError
from netorder.instances.generator import GeneratorMode, generate_random


def test_same_seed_gives_the_same_instance() -> None:
    first = generate_random(8, 0.4, seed=7)
    second = generate_random(8, 0.4, seed=7)

    assert first == second
    assert first != generate_random(8, 0.4, seed=8)


def test_node_names_are_padded() -> None:
    assert generate_random(4, 0.5, seed=1).nodes == {"H1", "S01", "S02", "S03"}
    assert "S100" in generate_random(101, 0.01, seed=1).nodes


def test_two_nodes_at_full_density_hold_a_single_edge() -> None:
    for seed in range(20):
        instance = generate_random(2, 1.0, seed=seed)

        assert len(instance.initial) == 1
        assert len(instance.final) == 1


@pytest.mark.parametrize("mode", list(GeneratorMode))
def test_generated_configurations_are_proper(mode: GeneratorMode) -> None:
    for seed in range(30):
        instance = generate_random(9, 0.35, seed=seed, mode=mode)

        assert instance.source == "H1"
        assert find_reachable_cycle(instance.initial, "H1") is None
        assert find_reachable_cycle(instance.final, "H1") is None


def test_perturb_rewires_a_bounded_number_of_nodes() -> None:
    for seed in range(30):
        instance = generate_random(10, 0.3, seed=seed, mode=GeneratorMode.PERTURB, rewire=2)

        assert len(instance.changed_nodes) <= 2


def test_perturb_without_rewiring_changes_nothing() -> None:
    instance = generate_random(10, 0.3, seed=3, mode=GeneratorMode.PERTURB, rewire=0)

    assert instance.changed_nodes == ()


@pytest.mark.parametrize(
    ("nodes", "density", "rewire", "message"),
    [
        (1, 0.5, 2, r"At least 2 nodes are required, got 1"),
        (5, 0.0, 2, r"Edge density must lie in \(0, 1\], got 0.0"),
        (5, 1.5, 2, r"Edge density must lie in \(0, 1\], got 1.5"),
        (5, 0.5, -1, r"Rewire count must not be negative, got -1"),
    ],
)
def test_parameters_are_checked(nodes: int, density: float, rewire: int, message: str) -> None:
    with pytest.raises(GeneratorParameterError, match=message):
        generate_random(nodes, density, seed=0, rewire=rewire)
