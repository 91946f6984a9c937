from dataclasses import dataclass
from functools import cached_property
from typing import Any, Iterable, Iterator, Mapping, Sequence

from app.exceptions import SchemaViolation, UnknownVariable
from app.models.signal import SignalSpace, Symbol

# одна последовательность длины T на каждую переменную схемы, в порядке схемы
Trajectory = tuple[tuple[Symbol, ...], ...]


def row_key(space: SignalSpace, row: Trajectory) -> tuple[int, ...]:
    return tuple(
        variable.positions[symbol]
        for variable, sequence in zip(space.variables, row)
        for symbol in sequence
    )


def conform(space: SignalSpace, row: Any) -> Trajectory:
    """Приводит строку к Trajectory и проверяет её по схеме."""
    if isinstance(row, Mapping):
        unknown = set(row) - set(space.names)
        if unknown:
            raise UnknownVariable(f"row mentions undeclared variables {sorted(unknown)}")
        missing = [n for n in space.names if n not in row]
        if missing:
            raise SchemaViolation(f"row is missing variables {missing}")
        row = [row[name] for name in space.names]

    row = tuple(row)
    if len(row) != len(space.variables):
        raise SchemaViolation(
            f"row has {len(row)} components, schema has {len(space.variables)} variables"
        )

    result = []
    for variable, sequence in zip(space.variables, row):
        if isinstance(sequence, (int, str)) and space.horizon == 1:
            sequence = (sequence,)
        if isinstance(sequence, (int, str)):
            raise SchemaViolation(
                f"value of {variable.name!r} must be a sequence of length {space.horizon}"
            )
        sequence = tuple(sequence)
        if len(sequence) != space.horizon:
            raise SchemaViolation(
                f"sequence of {variable.name!r} has length {len(sequence)}, "
                f"horizon is {space.horizon}"
            )
        for symbol in sequence:
            variable.position(symbol)
        result.append(sequence)
    return tuple(result)


@dataclass(frozen=True)
class Behaviour:
    space: SignalSpace
    rows: tuple[Trajectory, ...]

    @classmethod
    def from_rows(
        cls,
        space: SignalSpace,
        rows: Iterable[Any],
        validate: bool = True,
    ) -> "Behaviour":
        if validate:
            unique = {conform(space, row) for row in rows}
        else:
            unique = set(rows)
        ordered = tuple(sorted(unique, key=lambda r: row_key(space, r)))
        return cls(space, ordered)

    @classmethod
    def empty(cls, space: SignalSpace) -> "Behaviour":
        return cls(space, ())

    @cached_property
    def row_set(self) -> frozenset[Trajectory]:
        return frozenset(self.rows)

    @property
    def names(self):
        return self.space.names

    @property
    def horizon(self) -> int:
        return self.space.horizon

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[Trajectory]:
        return iter(self.rows)

    def __contains__(self, row: object) -> bool:
        return row in self.row_set

    def __bool__(self) -> bool:
        return bool(self.rows)

    def issubset(self, other: "Behaviour") -> bool:
        self.space.require_same(other.space)
        return self.row_set <= other.row_set

    def as_dicts(self) -> list[dict[str, Sequence[Symbol]]]:
        return [dict(zip(self.space.names, row)) for row in self.rows]

    def __str__(self) -> str:
        return f"Behaviour({self.space}, {len(self.rows)} rows)"
