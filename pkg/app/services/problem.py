"""Сборка систем и задач синтеза из JSON-документов."""
import logging
import re
from pathlib import Path

from app.config.settings import Settings, settings
from app.exceptions import SchemaMismatch, UnknownVariable, ValidationError
from app.models.behaviour import Behaviour
from app.models.problem import SynthesisProblem
from app.models.signal import SignalSpace, SignalVariable
from app.models.system import InterconnectedSystem, NetworkSystem
from app.repositories.problem import ControllersRepo, ProblemRepo
from app.schemas.problem import (BehaviourIn, ControllersDocument, LiftedIn,
                                 ProblemDocument, ProductIn, RowsIn, UnionIn)
from app.services import algebra
from app.services.behaviour import full_space, make_behaviour
from app.services.interconnect import equality_network
from app.services.synthesis import lift_spec

logger = logging.getLogger(__name__)

CALL = re.compile(r"^\s*(full|equality)\s*\((.*)\)\s*$")


class BehaviourBuilder:
    """Вычисляет выражения поведений документа; ссылки разворачиваются лениво."""

    def __init__(self, document: ProblemDocument, cap: int | None = None) -> None:
        self.document = document
        self.cap = cap
        self._resolving: list[str] = []

    def space(self, names) -> SignalSpace:
        variables = []
        for name in names:
            alphabet = self.document.variables.get(name)
            if alphabet is None:
                raise UnknownVariable(f"variable {name!r} is not declared")
            variables.append(SignalVariable(name, tuple(alphabet)))
        return SignalSpace(tuple(variables), self.document.horizon)

    def build(self, expr: BehaviourIn, context: SignalSpace | None = None) -> Behaviour:
        result = self._build(expr, context)
        if context is not None:
            result.space.require_same(context)
        return result

    def _build(self, expr: BehaviourIn, context: SignalSpace | None) -> Behaviour:
        if isinstance(expr, RowsIn):
            return self._rows(expr)
        if isinstance(expr, UnionIn):
            parts = [self._build(e, context) for e in expr.union]
            result = parts[0]
            for part in parts[1:]:
                result = algebra.union(result, part)
            return result
        if isinstance(expr, ProductIn):
            parts = [self._build(e, None) for e in expr.product]
            return algebra.product_all(parts, self.document.horizon, self.cap)
        return self._named(expr.strip(), context)

    def _rows(self, expr: RowsIn) -> Behaviour:
        if len(set(expr.vars)) != len(expr.vars):
            raise SchemaMismatch(f"duplicate variables in {expr.vars}")
        space = self.space(expr.vars)
        rows = []
        for row in expr.rows:
            if isinstance(row, list):
                if len(row) != len(expr.vars):
                    raise SchemaMismatch(f"row {row} does not match variables {expr.vars}")
                row = dict(zip(expr.vars, row))
            rows.append(row)
        return make_behaviour(space, rows)

    def _named(self, text: str, context: SignalSpace | None) -> Behaviour:
        if text == "full":
            if context is None:
                raise ValidationError("bare 'full' needs a known variable set here; use full(v,...)")
            return full_space(context, self.cap)

        call = CALL.match(text)
        if call:
            kind = call.group(1)
            names = [n.strip() for n in call.group(2).split(",") if n.strip()]
            if kind == "full":
                return full_space(self.space(names), self.cap)
            space = context if context is not None else self.space(names)
            return equality_network(space, names, self.cap)

        definition = self.document.behaviours.get(text)
        if definition is None:
            raise ValidationError(f"unknown behaviour reference {text!r}")
        if text in self._resolving:
            raise ValidationError(f"cyclic behaviour reference {' -> '.join(self._resolving + [text])}")
        self._resolving.append(text)
        try:
            return self._build(definition, context)
        finally:
            self._resolving.pop()


class ProblemService:

    def __init__(self, config: Settings = settings, root: Path | None = None) -> None:
        self.config = config
        self.problems = ProblemRepo(root)
        self.controller_files = ControllersRepo(root)

    def load(self, path: str | Path) -> ProblemDocument:
        return self.problems.get(path)

    def system(self, document: ProblemDocument) -> InterconnectedSystem:
        builder = BehaviourBuilder(document, self.config.ENUMERATION_CAP)
        subsystems = tuple(builder.build(expr) for expr in document.plant.subsystems)
        space = subsystems[0].space
        for part in subsystems[1:]:
            space = space.merge(part.space)
        logger.debug("system with %d subsystems over %s", len(subsystems), space)
        if isinstance(document.plant.network, str) and document.plant.network.strip() == "full":
            return InterconnectedSystem(subsystems, NetworkSystem.full(space))
        network = builder.build(document.plant.network, space)
        return InterconnectedSystem(subsystems, NetworkSystem(network))

    def projections(self, document: ProblemDocument, system: InterconnectedSystem) -> list[Behaviour] | None:
        if document.projections is None:
            return None
        if len(document.projections) != len(system.subsystems):
            raise ValidationError(
                f"{len(document.projections)} projections for {len(system.subsystems)} subsystems"
            )
        builder = BehaviourBuilder(document, self.config.ENUMERATION_CAP)
        return [
            builder.build(expr, part.space)
            for expr, part in zip(document.projections, system.subsystems)
        ]

    def _lifted(self, builder: BehaviourBuilder, expr: BehaviourIn | LiftedIn, target: SignalSpace) -> Behaviour:
        if not isinstance(expr, LiftedIn):
            return builder.build(expr, target)
        raw = builder.build(expr.raw)
        network = builder.build(expr.network, target.merge(raw.space))
        return lift_spec(raw, network, target.names)

    def problem(self, document: ProblemDocument) -> SynthesisProblem:
        missing = document.missing_problem_fields
        if missing:
            raise ValidationError(f"document is not a synthesis problem, missing {missing}")
        builder = BehaviourBuilder(document, self.config.ENUMERATION_CAP)
        plant = self.system(document)
        controller_names = [name for block in document.controller_partition for name in block]
        controller_space = builder.space(sorted(set(controller_names)))
        return SynthesisProblem(
            plant=plant,
            spec=self._lifted(builder, document.spec, plant.space),
            controller_network=builder.build(document.controller_network, controller_space),
            restriction=self._lifted(builder, document.restriction, controller_space),
            plant_controller_network=builder.build(
                document.plant_controller_network, plant.space.merge(controller_space)
            ),
            free_vars=document.free_vars,
            controller_partition=tuple(document.controller_partition),
        )

    def controllers(self, document: ProblemDocument, controllers: ControllersDocument) -> list[Behaviour]:
        builder = BehaviourBuilder(document, self.config.ENUMERATION_CAP)
        return [builder.build(expr) for expr in controllers.controllers]

    def load_controllers(self, document: ProblemDocument, path: str | Path) -> list[Behaviour]:
        return self.controllers(document, self.controller_files.get(path))
