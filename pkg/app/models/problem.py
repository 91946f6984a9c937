from dataclasses import dataclass
from functools import cached_property

from app.exceptions import (OverlapError, SchemaMismatch, UnknownVariable,
                            ValidationError)
from app.models.behaviour import Behaviour
from app.models.signal import SignalSpace, VariableSet
from app.models.system import InterconnectedSystem


@dataclass(frozen=True)
class SynthesisProblem:
    plant: InterconnectedSystem
    spec: Behaviour
    controller_network: Behaviour
    restriction: Behaviour
    plant_controller_network: Behaviour
    free_vars: VariableSet
    controller_partition: tuple[VariableSet, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "free_vars", VariableSet.of(self.free_vars))
        object.__setattr__(
            self,
            "controller_partition",
            tuple(VariableSet.of(block) for block in self.controller_partition),
        )

        plant_space = self.plant.space
        controller_space = self.controller_network.space
        if not plant_space.names.isdisjoint(controller_space.names):
            raise OverlapError(
                f"plant and controller variables overlap: "
                f"{plant_space.names & controller_space.names}"
            )
        # спецификация и ограничение уже подняты на w_p и w_c
        self.spec.space.require_same(plant_space)
        self.restriction.space.require_same(controller_space)
        self.plant_controller_network.space.require_same(
            plant_space.merge(controller_space)
        )
        if not self.free_vars.issubset(plant_space.names):
            raise UnknownVariable(
                f"free variables {self.free_vars} are not all plant variables"
            )

        covered: list[str] = []
        for block in self.controller_partition:
            if not block:
                raise ValidationError("controller partition contains an empty block")
            covered.extend(block)
        if len(covered) != len(set(covered)):
            raise OverlapError("controller partition blocks overlap")
        if set(covered) != set(controller_space.names):
            raise SchemaMismatch(
                f"controller partition covers {sorted(covered)}, "
                f"controller variables are {list(controller_space.names)}"
            )

    @property
    def plant_space(self) -> SignalSpace:
        return self.plant.space

    @property
    def controller_space(self) -> SignalSpace:
        return self.controller_network.space

    @property
    def w_p(self) -> VariableSet:
        return self.plant_space.names

    @property
    def w_c(self) -> VariableSet:
        return self.controller_space.names

    @cached_property
    def plant_behaviour(self) -> Behaviour:
        from app.services.interconnect import compose

        return compose(self.plant)
