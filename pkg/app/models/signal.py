from dataclasses import dataclass
from functools import cached_property
from math import prod
from typing import Iterable, Iterator

from app.exceptions import (HorizonError, HorizonMismatch, SchemaMismatch,
                            SchemaViolation, UnknownVariable, VariableClash)

Symbol = int | str


def symbol_key(symbol: Symbol) -> tuple[int, int | str]:
    # целые раньше строк, внутри типа обычный порядок
    if isinstance(symbol, bool) or not isinstance(symbol, (int, str)):
        raise SchemaViolation(f"symbol {symbol!r} is neither an integer nor a string")
    return (0, symbol) if isinstance(symbol, int) else (1, symbol)


@dataclass(frozen=True)
class SignalVariable:
    name: str
    alphabet: tuple[Symbol, ...]

    def __post_init__(self) -> None:
        if not self.name:
            raise SchemaViolation("variable name must be nonempty")
        symbols = tuple(self.alphabet)
        if not symbols:
            raise SchemaViolation(f"alphabet of {self.name!r} is empty")
        ordered = tuple(sorted(symbols, key=symbol_key))
        if len(set(ordered)) != len(ordered):
            raise SchemaViolation(f"alphabet of {self.name!r} has duplicate symbols")
        object.__setattr__(self, "alphabet", ordered)

    @cached_property
    def positions(self) -> dict[Symbol, int]:
        return {symbol: i for i, symbol in enumerate(self.alphabet)}

    def position(self, symbol: Symbol) -> int:
        symbol_key(symbol)
        try:
            return self.positions[symbol]
        except (KeyError, TypeError):
            raise SchemaViolation(
                f"symbol {symbol!r} is not in the alphabet of {self.name!r}"
            ) from None

    def __str__(self) -> str:
        return f"{self.name}:{{{','.join(map(str, self.alphabet))}}}"


@dataclass(frozen=True)
class VariableSet:
    """Sorted set of variable names addressing projections and partitions."""

    names: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "names", tuple(sorted(set(self.names))))

    @classmethod
    def of(cls, names: "Iterable[str] | VariableSet") -> "VariableSet":
        if isinstance(names, VariableSet):
            return names
        if isinstance(names, str):
            return cls((names,))
        return cls(tuple(names))

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: object) -> bool:
        return name in self.names

    def __or__(self, other: "VariableSet") -> "VariableSet":
        return VariableSet(self.names + VariableSet.of(other).names)

    def __and__(self, other: "VariableSet") -> "VariableSet":
        other = VariableSet.of(other)
        return VariableSet(tuple(n for n in self.names if n in other))

    def __sub__(self, other: "VariableSet") -> "VariableSet":
        other = VariableSet.of(other)
        return VariableSet(tuple(n for n in self.names if n not in other))

    def issubset(self, other: "Iterable[str] | VariableSet") -> bool:
        other = VariableSet.of(other)
        return all(n in other for n in self.names)

    def isdisjoint(self, other: "Iterable[str] | VariableSet") -> bool:
        other = VariableSet.of(other)
        return not any(n in other for n in self.names)

    def __str__(self) -> str:
        return "{" + ",".join(self.names) + "}"


@dataclass(frozen=True)
class SignalSpace:
    variables: tuple[SignalVariable, ...]
    horizon: int

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.variables, key=lambda v: v.name))
        names = [v.name for v in ordered]
        if len(set(names)) != len(names):
            raise VariableClash(f"duplicate variable names in schema: {names}")
        if not isinstance(self.horizon, int) or self.horizon < 1:
            raise HorizonError(f"horizon must be a positive integer, got {self.horizon!r}")
        object.__setattr__(self, "variables", ordered)

    @classmethod
    def of(cls, horizon: int, **alphabets: Iterable[Symbol]) -> "SignalSpace":
        return cls(
            tuple(SignalVariable(name, tuple(a)) for name, a in alphabets.items()),
            horizon,
        )

    @cached_property
    def names(self) -> VariableSet:
        return VariableSet(tuple(v.name for v in self.variables))

    @cached_property
    def index(self) -> dict[str, int]:
        return {v.name: i for i, v in enumerate(self.variables)}

    @property
    def cardinality(self) -> int:
        return prod(len(v.alphabet) ** self.horizon for v in self.variables)

    def variable(self, name: str) -> SignalVariable:
        try:
            return self.variables[self.index[name]]
        except KeyError:
            raise UnknownVariable(f"variable {name!r} is not in schema {self}") from None

    def indices(self, names: Iterable[str]) -> tuple[int, ...]:
        result = []
        for name in names:
            if name not in self.index:
                raise UnknownVariable(f"variable {name!r} is not in schema {self}")
            result.append(self.index[name])
        return tuple(result)

    def subspace(self, names: Iterable[str]) -> "SignalSpace":
        wanted = VariableSet.of(names)
        self.indices(wanted)
        return SignalSpace(
            tuple(v for v in self.variables if v.name in wanted), self.horizon
        )

    def with_horizon(self, horizon: int) -> "SignalSpace":
        return SignalSpace(self.variables, horizon)

    def merge(self, other: "SignalSpace", allow_shared: bool = False) -> "SignalSpace":
        if self.horizon != other.horizon:
            raise HorizonMismatch(
                f"horizons differ: {self.horizon} vs {other.horizon}"
            )
        merged = {v.name: v for v in self.variables}
        for variable in other.variables:
            known = merged.get(variable.name)
            if known is None:
                merged[variable.name] = variable
            elif not allow_shared:
                raise VariableClash(f"variable {variable.name!r} appears on both sides")
            elif known != variable:
                raise SchemaMismatch(
                    f"variable {variable.name!r} is declared with different alphabets: "
                    f"{known} vs {variable}"
                )
        return SignalSpace(tuple(merged.values()), self.horizon)

    def require_same(self, other: "SignalSpace") -> None:
        if self != other:
            raise SchemaMismatch(f"schemas differ: {self} vs {other}")

    def __str__(self) -> str:
        return f"T={self.horizon} " + " ".join(str(v) for v in self.variables)
