import logging
from typing import Iterable

from app.config.settings import Settings, settings
from app.exceptions import (InternalInconsistency, NotSynthesizable,
                            OverlapError, SchemaMismatch)
from app.models.behaviour import Behaviour, Trajectory
from app.models.problem import SynthesisProblem
from app.models.report import Problem1Report
from app.models.result import (AuxiliarySets, ControllerDiagnostics,
                               ExistenceVerdict, FastPath, SynthesisResult)
from app.models.signal import VariableSet
from app.services import algebra, verify
from app.services.behaviour import full_space, iter_space
from app.services.interconnect import filtered_join, restrict_network

logger = logging.getLogger(__name__)

WITNESS_LIMIT = 8


def lift_spec(raw: Behaviour, spec_network: Behaviour, target: Iterable[str]) -> Behaviour:
    """pi_target([W_target^T × raw] ∩ network); полное пространство цели не строится."""
    target = VariableSet.of(target)
    if not target.isdisjoint(raw.names):
        raise OverlapError(f"target {target} overlaps raw variables {raw.names}")
    if set(spec_network.names) != set(target | raw.names):
        raise SchemaMismatch(
            f"spec network variables {spec_network.names} must be {target | raw.names}"
        )
    return algebra.project(restrict_network(spec_network, [raw]), target)


def _missing_values(observed: Behaviour, names: VariableSet, limit: int = WITNESS_LIMIT) -> tuple[Trajectory, ...]:
    space = observed.space.subspace(names)
    witnesses = []
    for row in iter_space(space):
        if row not in observed.row_set:
            witnesses.append(row)
            if len(witnesses) >= limit:
                break
    return tuple(witnesses)


class SynthesisService:

    def __init__(self, config: Settings = settings) -> None:
        self.config = config

    def controller_set(self, problem: SynthesisProblem) -> Behaviour:
        return algebra.intersect(problem.controller_network, problem.restriction)

    def desired_behaviour(self, problem: SynthesisProblem) -> Behaviour:
        plant = problem.plant_behaviour
        wanted = algebra.intersect(plant, problem.spec)
        desired = filtered_join(
            [wanted, self.controller_set(problem)], problem.plant_controller_network
        )
        logger.debug("B_p=%d, B_p∩B_ps=%d, B_d=%d", len(plant), len(wanted), len(desired))
        return desired

    def auxiliary_sets(self, problem: SynthesisProblem, desired: Behaviour) -> AuxiliarySets:
        network = problem.plant_controller_network
        w_p, w_c = problem.w_p, problem.w_c
        controllers = self.controller_set(problem)
        desired_p = algebra.project(desired, w_p)

        out = filtered_join(
            [algebra.difference(problem.plant_behaviour, desired_p), controllers], network
        )
        ex = filtered_join([desired_p, algebra.project(out, w_c)], network)
        ex_p = algebra.project(ex, w_p)
        inner = filtered_join([algebra.difference(desired_p, ex_p), controllers], network)
        xi = filtered_join([ex_p, algebra.project(inner, w_c)], network)

        logger.debug(
            "B_out=%d, B_ex=%d, B_in=%d, B_xi=%d", len(out), len(ex), len(inner), len(xi)
        )
        return AuxiliarySets(out=out, ex=ex, inner=inner, xi=xi)

    def check_existence(
        self, problem: SynthesisProblem, inner: Behaviour, xi: Behaviour
    ) -> ExistenceVerdict:
        plant = problem.plant_behaviour
        free = problem.free_vars
        w_p = problem.w_p

        free_part = algebra.project(plant, free)
        condition_b = algebra.is_free(plant, free)
        witnesses_b = () if condition_b else _missing_values(free_part, free)

        inner_p, xi_p = algebra.project(inner, w_p), algebra.project(xi, w_p)
        remaining = algebra.difference(algebra.difference(plant, inner_p), xi_p)
        covered = algebra.union(algebra.project(inner, free), algebra.project(xi, free))
        uncovered = algebra.difference(algebra.project(remaining, free), covered)

        verdict = ExistenceVerdict(
            free_values_covered=not uncovered,
            plant_free=condition_b,
            uncovered_free_values=uncovered.rows[:WITNESS_LIMIT],
            missing_free_values=witnesses_b,
        )
        logger.info(
            "existence: free values covered=%s, plant free=%s", verdict.free_values_covered, verdict.plant_free
        )
        return verdict

    def _require(self, problem: SynthesisProblem, desired: Behaviour, verdict: ExistenceVerdict | None) -> None:
        if verdict is None:
            aux = self.auxiliary_sets(problem, desired)
            verdict = self.check_existence(problem, aux.inner, aux.xi)
        if not verdict.exists:
            raise NotSynthesizable(
                f"existence conditions fail: free values covered={verdict.free_values_covered}, "
                f"plant free={verdict.plant_free}"
            )

    def controlled_behaviour(
        self,
        problem: SynthesisProblem,
        desired: Behaviour,
        inner: Behaviour,
        verdict: ExistenceVerdict | None = None,
    ) -> Behaviour:
        self._require(problem, desired, verdict)
        implemented = filtered_join(
            [algebra.project(desired, problem.w_p), algebra.project(inner, problem.w_c)],
            problem.plant_controller_network,
        )
        return algebra.project(implemented, problem.w_p)

    def residual_controller_rows(
        self,
        problem: SynthesisProblem,
        desired: Behaviour,
        inner: Behaviour,
        ex: Behaviour,
        out: Behaviour,
    ) -> Behaviour:
        """Строки pi_{w_c}(B_d) \\ pi_{w_c}(B_ex), не попавшие в pi_{w_c}(B_in).

        Проверяет тождества с B_ex и B_out, их нарушение означает ошибку движка."""
        w_c = problem.w_c
        desired_c = algebra.project(desired, w_c)
        inner_c = algebra.project(inner, w_c)
        ex_c = algebra.project(ex, w_c)
        via_ex = algebra.difference(desired_c, ex_c)
        via_out = algebra.difference(desired_c, algebra.project(out, w_c))

        if via_ex != via_out:
            raise InternalInconsistency(
                "pi_c(B_d) \\ pi_c(B_ex) differs from pi_c(B_d) \\ pi_c(B_out)"
            )
        if algebra.intersect(inner_c, ex_c):
            raise InternalInconsistency("pi_c(B_in) and pi_c(B_ex) intersect")
        if algebra.intersect(inner_c, algebra.project(out, w_c)):
            raise InternalInconsistency("pi_c(B_in) and pi_c(B_out) intersect")
        return algebra.difference(via_ex, inner_c)

    def controller_behaviours(
        self,
        problem: SynthesisProblem,
        desired: Behaviour,
        inner: Behaviour,
        ex: Behaviour,
        out: Behaviour,
        verdict: ExistenceVerdict | None = None,
    ) -> list[Behaviour]:
        self._require(problem, desired, verdict)
        residual = self.residual_controller_rows(problem, desired, inner, ex, out)
        if residual:
            message = (
                f"{len(residual)} controller trajectories of pi_c(B_d) \\ pi_c(B_ex) "
                f"are not reached by B_in"
            )
            if self.config.STRICT_IDENTITIES:
                raise InternalInconsistency(message)
            logger.debug(message)
        return [algebra.project(inner, block) for block in problem.controller_partition]

    def multiplicity_set(self, problem: SynthesisProblem, desired: Behaviour) -> Behaviour:
        reachable = filtered_join(
            [problem.plant_behaviour, algebra.project(desired, problem.w_c)],
            problem.plant_controller_network,
        )
        return algebra.project(reachable, problem.w_p)

    def carrier(self, problem: SynthesisProblem) -> Behaviour:
        """[B_p × (B_c^Pi ∩ B_cr)] ∩ B_pc^Pi: соответствие w_p и w_c."""
        return filtered_join(
            [problem.plant_behaviour, self.controller_set(problem)],
            problem.plant_controller_network,
        )

    def augmented_plant(self, problem: SynthesisProblem) -> Behaviour:
        return filtered_join(
            [problem.plant_behaviour, problem.controller_network],
            problem.plant_controller_network,
        )

    def fast_path(self, problem: SynthesisProblem) -> FastPath:
        carrier = self.carrier(problem)
        if algebra.is_observable(carrier, problem.w_p, problem.w_c):
            return FastPath.WP_OBSERVABLE
        if algebra.is_observable(carrier, problem.w_c, problem.w_p):
            return FastPath.WC_OBSERVABLE
        return FastPath.NONE

    def decomposes(self, problem: SynthesisProblem, controllers: list[Behaviour], inner: Behaviour) -> bool:
        rebuilt = filtered_join(controllers, problem.controller_network)
        return rebuilt == algebra.project(inner, problem.w_c)

    def pad_controllers(self, problem: SynthesisProblem, controllers: list[Behaviour]) -> list[Behaviour]:
        """Добавляет строки, недопустимые через B_c^Pi; реализуемое поведение не меняется."""
        padded = []
        for block, controller in zip(problem.controller_partition, controllers):
            admissible = algebra.project(problem.controller_network, block)
            inadmissible = algebra.difference(full_space(admissible.space), admissible)
            padded.append(algebra.union(controller, inadmissible))
        return padded

    def synthesize(self, problem: SynthesisProblem) -> SynthesisResult:
        desired = self.desired_behaviour(problem)
        aux = self.auxiliary_sets(problem, desired)
        verdict = self.check_existence(problem, aux.inner, aux.xi)
        path = self.fast_path(problem)
        multiplicities = self.multiplicity_set(problem, desired)

        if not verdict.exists:
            logger.info("no distributed controller: verdict is false")
            return SynthesisResult(
                desired=desired,
                auxiliary=aux,
                verdict=verdict,
                controlled=Behaviour.empty(problem.plant_space),
                controllers=(),
                fast_path=path,
                multiplicities=multiplicities,
            )

        residual = None
        if path is FastPath.WP_OBSERVABLE:
            if algebra.project(aux.ex, problem.w_p):
                raise InternalInconsistency("w_p observable from w_c but pi_p(B_ex) is not empty")
            controlled = algebra.project(desired, problem.w_p)
            controllers = [algebra.project(desired, block) for block in problem.controller_partition]
        else:
            if path is FastPath.WC_OBSERVABLE:
                if aux.xi:
                    raise InternalInconsistency("w_c observable from w_p but B_xi is not empty")
                controlled = algebra.project(aux.inner, problem.w_p)
            else:
                controlled = self.controlled_behaviour(problem, desired, aux.inner, verdict)
            residual = self.residual_controller_rows(problem, desired, aux.inner, aux.ex, aux.out)
            controllers = self.controller_behaviours(
                problem, desired, aux.inner, aux.ex, aux.out, verdict
            )

        if path is not FastPath.NONE and self.config.DEBUG:
            self._cross_check(problem, desired, aux, verdict, controlled, controllers)
        logger.info("synthesis: fast path %s, B_pc=%d rows", path.value, len(controlled))

        decomposes = self.decomposes(problem, controllers, aux.inner)
        achieved, check = None, None
        if not decomposes:
            achieved, check = self.check_controllers(problem, controllers)
            if not check.passed() and self.config.STRICT_IDENTITIES:
                raise NotSynthesizable(
                    "controller blocks do not reproduce pi_c(B_in) and the controllers they "
                    "interconnect to fail the control goal"
                )

        padded = False
        if self.config.PAD_CONTROLLERS:
            controllers = self.pad_controllers(problem, controllers)
            padded = True

        return SynthesisResult(
            desired=desired,
            auxiliary=aux,
            verdict=verdict,
            controlled=controlled,
            controllers=tuple(controllers),
            fast_path=path,
            multiplicities=multiplicities,
            diagnostics=ControllerDiagnostics(
                residual_rows=residual,
                decomposes=decomposes,
                padded=padded,
                achieved=achieved,
                check=check,
            ),
        )

    def check_controllers(
        self, problem: SynthesisProblem, controllers: list[Behaviour]
    ) -> tuple[Behaviour, Problem1Report]:
        """Реализует блоки на объекте и проверяет цель управления."""
        cap = self.config.ENUMERATION_CAP
        controller = verify.interconnect_controllers(controllers, problem.controller_network, cap)
        achieved = verify.close_loop(
            problem.plant_behaviour, controller, problem.plant_controller_network, cap
        )
        check = verify.check_problem1(achieved, problem, controller)
        logger.debug(
            "controller blocks do not decompose: achieved=%d rows, goal met=%s",
            len(achieved), check.passed(),
        )
        return achieved, check

    def _cross_check(
        self,
        problem: SynthesisProblem,
        desired: Behaviour,
        aux: AuxiliarySets,
        verdict: ExistenceVerdict,
        controlled: Behaviour,
        controllers: list[Behaviour],
    ) -> None:
        general = self.controlled_behaviour(problem, desired, aux.inner, verdict)
        general_controllers = self.controller_behaviours(
            problem, desired, aux.inner, aux.ex, aux.out, verdict
        )
        if general != controlled or general_controllers != list(controllers):
            raise InternalInconsistency("fast path disagrees with the general construction")
