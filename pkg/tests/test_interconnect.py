import random

import pytest

from app.exceptions import SchemaMismatch, ValidationError, VariableClash
from app.models import InterconnectedSystem, NetworkSystem, SignalSpace
from app.services import algebra, interconnect
from app.services.behaviour import full_space
from app.services.properties import random_system
from tests.helpers import rows

W = SignalSpace.of(1, w1=(0, 1), w2=(0, 1))


def test_compose_through_equality_network(equality_system):
    assert interconnect.compose(equality_system) == rows(W, (0, 0))


def test_compose_without_interconnection_is_the_product():
    parts = (rows(W.subspace(["w1"]), (1,)), rows(W.subspace(["w2"]), (0,), (1,)))
    system = InterconnectedSystem(parts, NetworkSystem(full_space(W)))
    assert interconnect.compose(system) == algebra.product(*parts)


def test_parts_must_partition_network_variables():
    w1 = full_space(W.subspace(["w1"]))
    with pytest.raises(SchemaMismatch):
        InterconnectedSystem((w1,), NetworkSystem(full_space(W)))
    with pytest.raises(VariableClash):
        InterconnectedSystem((w1, w1), NetworkSystem(full_space(W)))


def test_local_projections(equality_system):
    assert interconnect.local_projection(equality_system, 0) == rows(W.subspace(["w1"]), (0,))
    assert interconnect.local_projection(equality_system, 1) == rows(W.subspace(["w2"]), (0,))
    with pytest.raises(IndexError):
        interconnect.local_projection(equality_system, 2)


def test_isolated_network_keeps_subsystems():
    parts = (rows(W.subspace(["w1"]), (1,)), rows(W.subspace(["w2"]), (0,), (1,)))
    system = InterconnectedSystem(parts, NetworkSystem(full_space(W)))
    assert interconnect.local_projections(system) == list(parts)


def test_reconstruct_from_projections(equality_system):
    projections = interconnect.local_projections(equality_system)
    network = equality_system.network
    assert interconnect.reconstruct_from_projections(projections, network) == rows(W, (0, 0))


def test_hybrid_reconstruction_every_split_on_random_instances():
    for case in range(20):
        system = random_system(random.Random(case))
        composed = interconnect.compose(system)
        projections = interconnect.local_projections(system)
        for n in range(len(system.subsystems) + 1):
            rebuilt = interconnect.reconstruct_hybrid(
                system.subsystems[:n], projections[n:], system.network
            )
            assert rebuilt == composed


def test_local_projection_within_subsystem_on_random_instances():
    for case in range(20):
        system = random_system(random.Random(100 + case))
        for local, part in zip(interconnect.local_projections(system), system.subsystems):
            assert local.issubset(part)


def test_isolated_replaces_one_subsystem(equality_system):
    isolated = interconnect.isolated(equality_system, 1)
    assert isolated.subsystems[1] == full_space(W.subspace(["w2"]))
    assert interconnect.compose(isolated) == rows(W, (0, 0), (1, 1))


def test_observation_carrier(equality_system):
    carrier = interconnect.observation_carrier(equality_system)
    assert carrier == rows(W, (0, 0))
    assert algebra.is_observable(carrier, ["w1"], ["w2"])


def test_observation_carrier_when_first_is_not_observable():
    parts = (rows(W.subspace(["w1"]), (0,)), full_space(W.subspace(["w2"])))
    system = InterconnectedSystem(parts, NetworkSystem(full_space(W)))
    composed = interconnect.compose(system)
    carrier = interconnect.observation_carrier(system)
    assert composed == rows(W, (0, 0), (0, 1))
    assert carrier == full_space(W)
    assert carrier != composed
    assert algebra.observability_witness(carrier, ["w1"], ["w2"]) == (((0,),), ((0,),), ((1,),))


def test_observation_carrier_needs_two_subsystems():
    space = SignalSpace.of(1, a=(0,), b=(0,), c=(0,))
    parts = tuple(full_space(space.subspace([n])) for n in "abc")
    with pytest.raises(ValidationError):
        interconnect.observation_carrier(InterconnectedSystem(parts, NetworkSystem(full_space(space))))


def test_equality_network_leaves_other_variables_free():
    space = SignalSpace.of(1, a=(0, 1), b=(0, 1), x=("u", "v"))
    network = interconnect.equality_network(space, ["a", "b"])
    assert len(network) == 4
    assert all(row[0] == row[1] for row in network.rows)


def test_equality_network_needs_common_alphabet():
    space = SignalSpace.of(1, a=(0, 1), b=(0, 1, 2))
    with pytest.raises(SchemaMismatch):
        interconnect.equality_network(space, ["a", "b"])


def test_switching_network_is_union_of_positions():
    closed = interconnect.equality_network(W, ["w1", "w2"])
    open_ = rows(W, (0, 1), (1, 0))
    switched = interconnect.switching_network([closed, open_])
    assert switched == full_space(W)
    with pytest.raises(ValidationError):
        interconnect.switching_network([])


def test_filtered_join_matches_product_then_intersection():
    for case in range(20):
        system = random_system(random.Random(200 + case))
        expected = algebra.intersect(
            algebra.product_all(system.subsystems, system.space.horizon),
            system.network.behaviour,
        )
        assert interconnect.compose(system) == expected


def test_full_network_is_never_enumerated():
    space = SignalSpace.of(4, a=range(10), b=range(10))
    parts = (
        rows(space.subspace(["a"]), ((0, 1, 2, 3),)),
        rows(space.subspace(["b"]), ((9, 9, 9, 9),), ((5, 5, 5, 5),)),
    )
    system = InterconnectedSystem(parts, NetworkSystem.full(space))
    composed = interconnect.compose(system)
    assert composed.rows == (((0, 1, 2, 3), (5, 5, 5, 5)), ((0, 1, 2, 3), (9, 9, 9, 9)))
    assert interconnect.reconstruct_from_projections(interconnect.local_projections(system), system.network) == composed


def test_full_network_agrees_with_enumerated_one():
    for case in range(10):
        system = random_system(random.Random(300 + case))
        full = InterconnectedSystem(system.subsystems, NetworkSystem.full(system.space))
        enumerated = InterconnectedSystem(system.subsystems, NetworkSystem(full_space(system.space)))
        assert interconnect.compose(full) == interconnect.compose(enumerated)


def test_network_needs_rows_or_space():
    with pytest.raises(ValidationError):
        NetworkSystem()
    with pytest.raises(ValidationError):
        NetworkSystem(full_space(W), W)
