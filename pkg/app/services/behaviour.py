import logging
from itertools import product as cartesian
from typing import Any, Iterable

from app.config.settings import settings
from app.exceptions import EnumerationCapExceeded, HorizonError
from app.models.behaviour import Behaviour, Trajectory
from app.models.signal import SignalSpace, SignalVariable

logger = logging.getLogger(__name__)


def enumeration_cap(cap: int | None = None) -> int:
    return settings.ENUMERATION_CAP if cap is None else cap


def ensure_within_cap(count: int, cap: int | None = None, what: str = "behaviour") -> None:
    limit = enumeration_cap(cap)
    if count > limit:
        raise EnumerationCapExceeded(count, limit, what)


def make_behaviour(space: SignalSpace, rows: Iterable[Any]) -> Behaviour:
    """Канонизация: проверка по схеме, удаление дубликатов, сортировка."""
    return Behaviour.from_rows(space, rows, validate=True)


def variable_sequences(variable: SignalVariable, horizon: int) -> list[tuple]:
    return list(cartesian(variable.alphabet, repeat=horizon))


def iter_space(space: SignalSpace) -> Iterable[Trajectory]:
    """Ленивый перебор W^T в каноническом порядке."""
    per_variable = [variable_sequences(v, space.horizon) for v in space.variables]
    return cartesian(*per_variable)


def full_space(space: SignalSpace, cap: int | None = None) -> Behaviour:
    ensure_within_cap(space.cardinality, cap, what=f"full space {space}")
    # cartesian() already yields rows in canonical order
    return Behaviour(space, tuple(iter_space(space)))


def restrict(behaviour: Behaviour, horizon: int) -> Behaviour:
    if not isinstance(horizon, int) or horizon < 1 or horizon > behaviour.horizon:
        raise HorizonError(
            f"cannot restrict horizon {behaviour.horizon} to {horizon!r}"
        )
    if horizon == behaviour.horizon:
        return behaviour
    space = behaviour.space.with_horizon(horizon)
    prefixes = (
        tuple(sequence[:horizon] for sequence in row) for row in behaviour.rows
    )
    return Behaviour.from_rows(space, prefixes, validate=False)


def format_row(row: Trajectory, space: SignalSpace) -> str:
    if not space.variables:
        return "()"
    return " ".join(
        f"{variable.name}=({','.join(map(str, sequence))})"
        for variable, sequence in zip(space.variables, row)
    )


def dumps(behaviour: Behaviour) -> str:
    """Каноническая текстовая форма: строка схемы, затем по строке на траекторию."""
    lines = [f"# {behaviour.space}".rstrip()]
    lines.extend(format_row(row, behaviour.space) for row in behaviour.rows)
    return "\n".join(lines) + "\n"
