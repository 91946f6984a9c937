from dataclasses import dataclass
from functools import cached_property

from app.exceptions import (HorizonMismatch, SchemaMismatch, ValidationError,
                            VariableClash)
from app.models.behaviour import Behaviour
from app.models.signal import SignalSpace, VariableSet


@dataclass(frozen=True)
class NetworkSystem:
    """B^Pi. Полная сеть хранит только схему, строки строятся по запросу."""
    relation: Behaviour | None = None
    full_over: SignalSpace | None = None

    def __post_init__(self) -> None:
        if (self.relation is None) == (self.full_over is None):
            raise ValidationError("network needs either its rows or the space it leaves free")

    @classmethod
    def full(cls, space: SignalSpace) -> "NetworkSystem":
        return cls(full_over=space)

    @property
    def is_full(self) -> bool:
        return self.relation is None

    @property
    def space(self) -> SignalSpace:
        return self.full_over if self.relation is None else self.relation.space

    @cached_property
    def behaviour(self) -> Behaviour:
        if self.relation is not None:
            return self.relation
        from app.services.behaviour import full_space

        return full_space(self.full_over)


@dataclass(frozen=True)
class InterconnectedSystem:
    subsystems: tuple[Behaviour, ...]
    network: NetworkSystem

    def __post_init__(self) -> None:
        object.__setattr__(self, "subsystems", tuple(self.subsystems))
        check_parts(self.subsystems, self.network.space)

    @property
    def space(self) -> SignalSpace:
        return self.network.space

    def variables_of(self, i: int) -> VariableSet:
        return self.subsystems[i].names


def check_parts(parts: tuple[Behaviour, ...], space: SignalSpace) -> None:
    """Части должны попарно не пересекаться и вместе покрывать схему сети."""
    seen: set[str] = set()
    for part in parts:
        if part.horizon != space.horizon:
            raise HorizonMismatch(
                f"part horizon {part.horizon} differs from network horizon {space.horizon}"
            )
        for variable in part.space.variables:
            if variable.name in seen:
                raise VariableClash(f"variable {variable.name!r} belongs to two parts")
            seen.add(variable.name)
            if space.variable(variable.name) != variable:
                raise SchemaMismatch(
                    f"variable {variable.name!r} is declared differently in the network"
                )
    if seen != set(space.names):
        raise SchemaMismatch(
            f"parts cover {sorted(seen)}, network has {list(space.names)}"
        )
