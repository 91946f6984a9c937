import logging
from itertools import product as cartesian
from typing import Iterable, Sequence

from app.exceptions import HorizonMismatch, SchemaMismatch, ValidationError
from app.models.behaviour import Behaviour
from app.models.signal import SignalSpace
from app.models.system import InterconnectedSystem, NetworkSystem, check_parts
from app.services import algebra
from app.services.behaviour import ensure_within_cap, full_space, iter_space

logger = logging.getLogger(__name__)


def filtered_join(parts: Sequence[Behaviour], network: Behaviour) -> Behaviour:
    """(X_i parts[i]) ∩ network без построения произведения: строки сети снаружи."""
    check_parts(tuple(parts), network.space)
    return restrict_network(network, parts)


def restrict_network(network: Behaviour, parts: Sequence[Behaviour]) -> Behaviour:
    # переменные, не покрытые частями, свободны
    for part in parts:
        if part.horizon != network.horizon:
            raise HorizonMismatch(
                f"part horizon {part.horizon} differs from network horizon {network.horizon}"
            )
        for variable in part.space.variables:
            if network.space.variable(variable.name) != variable:
                raise SchemaMismatch(
                    f"variable {variable.name!r} is declared differently in the network"
                )
    pickers = [network.space.indices(part.names) for part in parts]
    rows = tuple(
        row
        for row in network.rows
        if all(
            tuple(row[i] for i in picks) in part.row_set
            for part, picks in zip(parts, pickers)
        )
    )
    logger.debug(
        "filtered join: %d network rows -> %d rows", len(network), len(rows)
    )
    return Behaviour(network.space, rows)


def join_through(parts: Sequence[Behaviour], network: NetworkSystem, cap: int | None = None) -> Behaviour:
    """Полная сеть не перечисляется: результат равен произведению частей."""
    if network.is_full:
        check_parts(tuple(parts), network.space)
        return algebra.product_all(parts, network.space.horizon, cap)
    return filtered_join(parts, network.behaviour)


def compose(system: InterconnectedSystem) -> Behaviour:
    return join_through(system.subsystems, system.network)


def reconstruct_from_projections(
    projections: Sequence[Behaviour], network: NetworkSystem
) -> Behaviour:
    return join_through(projections, network)


def reconstruct_hybrid(
    full: Sequence[Behaviour], projections: Sequence[Behaviour], network: NetworkSystem
) -> Behaviour:
    return join_through(list(full) + list(projections), network)


def local_projection(system: InterconnectedSystem, i: int) -> Behaviour:
    if not 0 <= i < len(system.subsystems):
        raise IndexError(f"subsystem index {i} out of range 0..{len(system.subsystems) - 1}")
    return algebra.project(compose(system), system.variables_of(i))


def local_projections(system: InterconnectedSystem) -> list[Behaviour]:
    composed = compose(system)
    return [algebra.project(composed, part.names) for part in system.subsystems]


def isolated(system: InterconnectedSystem, i: int, cap: int | None = None) -> InterconnectedSystem:
    subsystems = list(system.subsystems)
    subsystems[i] = full_space(subsystems[i].space, cap)
    return InterconnectedSystem(tuple(subsystems), system.network)


def observation_carrier(system: InterconnectedSystem, cap: int | None = None) -> Behaviour:
    """[(W^1)^T × pi_{w^2}(B)] ∩ B^Pi для системы из двух подсистем."""
    if len(system.subsystems) != 2:
        raise ValidationError("observation carrier is defined for two subsystems")
    observed = algebra.project(compose(system), system.variables_of(1))
    first = full_space(system.subsystems[0].space, cap)
    return join_through([first, observed], system.network, cap)


def equality_network(space: SignalSpace, names: Iterable[str], cap: int | None = None) -> Behaviour:
    """Все перечисленные переменные равны, остальные свободны."""
    tied = list(dict.fromkeys(names))
    if not tied:
        raise ValidationError("equality needs at least one variable")
    alphabets = {space.variable(name).alphabet for name in tied}
    if len(alphabets) != 1:
        raise SchemaMismatch(f"equality over variables with different alphabets: {tied}")

    tied_space = space.subspace(tied)
    rest_space = space.subspace([n for n in space.names if n not in tied])
    shared = tied_space.variables[0]
    sequences = list(cartesian(shared.alphabet, repeat=space.horizon))
    ensure_within_cap(len(sequences) * rest_space.cardinality, cap, what="equality network")

    rows = []
    for sequence in sequences:
        for rest in iter_space(rest_space):
            parts = dict(zip(rest_space.names, rest))
            parts.update((name, sequence) for name in tied)
            rows.append(algebra.reorder(parts, space))
    return Behaviour.from_rows(space, rows, validate=False)


def switching_network(positions: Sequence[Behaviour]) -> Behaviour:
    if not positions:
        raise ValidationError("switching network needs at least one position")
    result = positions[0]
    for position in positions[1:]:
        result = algebra.union(result, position)
    return result
