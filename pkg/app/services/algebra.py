import logging
from math import prod
from typing import Iterable

from app.exceptions import HorizonMismatch, OverlapError
from app.models.behaviour import Behaviour, Trajectory
from app.models.signal import SignalSpace, VariableSet
from app.services.behaviour import ensure_within_cap

logger = logging.getLogger(__name__)


def _rebuild(space: SignalSpace, rows: Iterable[Trajectory]) -> Behaviour:
    return Behaviour.from_rows(space, rows, validate=False)


def _picker(source: SignalSpace, target: SignalSpace) -> tuple[int, ...]:
    return source.indices(target.names)


def reorder(row_parts: dict[str, tuple], space: SignalSpace) -> Trajectory:
    return tuple(row_parts[name] for name in space.names)


def product(b1: Behaviour, b2: Behaviour, cap: int | None = None) -> Behaviour:
    space = b1.space.merge(b2.space)
    ensure_within_cap(len(b1) * len(b2), cap, what="product")
    names1, names2 = b1.names.names, b2.names.names
    rows = []
    for r1 in b1.rows:
        left = dict(zip(names1, r1))
        for r2 in b2.rows:
            parts = dict(left)
            parts.update(zip(names2, r2))
            rows.append(reorder(parts, space))
    return _rebuild(space, rows)


def product_all(behaviours: Iterable[Behaviour], horizon: int, cap: int | None = None) -> Behaviour:
    result = Behaviour(SignalSpace((), horizon), ((),))
    for behaviour in behaviours:
        result = product(result, behaviour, cap)
    return result


def intersect(b1: Behaviour, b2: Behaviour) -> Behaviour:
    b1.space.require_same(b2.space)
    return Behaviour(b1.space, tuple(r for r in b1.rows if r in b2.row_set))


def union(b1: Behaviour, b2: Behaviour) -> Behaviour:
    b1.space.require_same(b2.space)
    return _rebuild(b1.space, b1.row_set | b2.row_set)


def difference(b1: Behaviour, b2: Behaviour) -> Behaviour:
    b1.space.require_same(b2.space)
    return Behaviour(b1.space, tuple(r for r in b1.rows if r not in b2.row_set))


def is_subset(b1: Behaviour, b2: Behaviour) -> bool:
    return b1.issubset(b2)


def project(behaviour: Behaviour, names: Iterable[str]) -> Behaviour:
    """pi_S(B); для пустого S результат {()} если B не пусто, иначе пусто."""
    target = behaviour.space.subspace(names)
    picks = _picker(behaviour.space, target)
    if picks == tuple(range(len(behaviour.space.variables))):
        return behaviour
    return _rebuild(target, (tuple(row[i] for i in picks) for row in behaviour.rows))


def join(b1: Behaviour, b2: Behaviour, cap: int | None = None) -> Behaviour:
    space = b1.space.merge(b2.space, allow_shared=True)
    shared = tuple(b1.names & b2.names)
    key1, key2 = b1.space.indices(shared), b2.space.indices(shared)

    buckets: dict[tuple, list[Trajectory]] = {}
    for row in b2.rows:
        buckets.setdefault(tuple(row[i] for i in key2), []).append(row)

    names1, names2 = b1.names.names, b2.names.names
    rows = []
    for r1 in b1.rows:
        matches = buckets.get(tuple(r1[i] for i in key1), ())
        for r2 in matches:
            parts = dict(zip(names2, r2))
            parts.update(zip(names1, r1))
            rows.append(reorder(parts, space))
        ensure_within_cap(len(rows), cap, what="join")
    return _rebuild(space, rows)


def is_free(behaviour: Behaviour, names: Iterable[str]) -> bool:
    target = behaviour.space.subspace(names)
    expected = prod(len(v.alphabet) ** target.horizon for v in target.variables)
    return len(project(behaviour, target.names)) == expected


def _check_pair(behaviour: Behaviour, s1: Iterable[str], s2: Iterable[str]) -> tuple[VariableSet, VariableSet]:
    first, second = VariableSet.of(s1), VariableSet.of(s2)
    if not first.isdisjoint(second):
        raise OverlapError(f"variable sets {first} and {second} overlap")
    behaviour.space.indices(first | second)
    return first, second


def observability_witness(
    behaviour: Behaviour, observed: Iterable[str], observer: Iterable[str]
) -> tuple[Trajectory, Trajectory, Trajectory] | None:
    """Возвращает (w2, w1, w1') с w1 != w1', если w1 не наблюдаема по w2."""
    first, second = _check_pair(behaviour, observed, observer)
    joint = project(behaviour, first | second)
    i1, i2 = joint.space.indices(first), joint.space.indices(second)
    seen: dict[tuple, tuple] = {}
    for row in joint.rows:
        key = tuple(row[i] for i in i2)
        value = tuple(row[i] for i in i1)
        known = seen.setdefault(key, value)
        if known != value:
            return key, known, value
    return None


def is_observable(behaviour: Behaviour, observed: Iterable[str], observer: Iterable[str]) -> bool:
    return observability_witness(behaviour, observed, observer) is None


def require_horizon(behaviours: Iterable[Behaviour]) -> int:
    horizons = {b.horizon for b in behaviours}
    if len(horizons) > 1:
        raise HorizonMismatch(f"behaviours have different horizons: {sorted(horizons)}")
    return horizons.pop()
