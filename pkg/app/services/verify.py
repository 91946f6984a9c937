"""Переборные оракулы, не связанные с построением синтеза."""
import logging
from math import prod
from typing import Sequence

from app.config.settings import Settings, settings
from app.exceptions import SearchSpaceTooLarge
from app.models.behaviour import Behaviour
from app.models.problem import SynthesisProblem
from app.models.report import OracleSolution, Problem1Report
from app.services import algebra
from app.services.behaviour import iter_space

logger = logging.getLogger(__name__)

WITNESS_LIMIT = 8


def interconnect_controllers(
    controllers: Sequence[Behaviour], controller_network: Behaviour, cap: int | None = None
) -> Behaviour:
    """B_c = (X_j B_c^j) ∩ B_c^Pi, через полное произведение."""
    joint = algebra.product_all(controllers, controller_network.horizon, cap)
    return algebra.intersect(joint, controller_network)


def close_loop(plant: Behaviour, controller: Behaviour, pc_network: Behaviour, cap: int | None = None) -> Behaviour:
    """pi_{w_p}((B_p × B_c) ∩ B_pc^Pi) для уже соединённого контроллера."""
    full = algebra.intersect(algebra.product(plant, controller, cap), pc_network)
    return algebra.project(full, plant.names)


def implement(
    plant: Behaviour,
    controllers: Sequence[Behaviour],
    controller_network: Behaviour,
    pc_network: Behaviour,
    cap: int | None = None,
) -> Behaviour:
    controller = interconnect_controllers(controllers, controller_network, cap)
    return close_loop(plant, controller, pc_network, cap)


def check_problem1(
    achieved: Behaviour,
    problem: SynthesisProblem,
    controller: Behaviour | None = None,
) -> Problem1Report:
    achieved.space.require_same(problem.plant_space)
    allowed = algebra.intersect(problem.plant_behaviour, problem.spec)
    outside = algebra.difference(achieved, allowed)

    # без свободных переменных условие свободы пусто, непустота проверяется отдельно
    free_part = algebra.project(achieved, problem.free_vars)
    free = not problem.free_vars or algebra.is_free(achieved, problem.free_vars)
    free_witnesses = []
    if not free:
        for row in iter_space(free_part.space):
            if row not in free_part.row_set:
                free_witnesses.append(row)
                if len(free_witnesses) >= WITNESS_LIMIT:
                    break

    within_restriction, restriction_witnesses = None, ()
    if controller is not None:
        beyond = algebra.difference(controller, problem.restriction)
        within_restriction = not beyond
        restriction_witnesses = beyond.rows[:WITNESS_LIMIT]

    return Problem1Report(
        within_spec=not outside,
        free=free,
        within_restriction=within_restriction,
        nonempty=bool(achieved),
        spec_witnesses=outside.rows[:WITNESS_LIMIT],
        free_witnesses=tuple(free_witnesses),
        restriction_witnesses=restriction_witnesses,
    )


def _family(candidates: list[Behaviour], index: int) -> list[Behaviour]:
    """Декодирует номер семейства: по битовой маске на каждый блок."""
    family = []
    for candidate in candidates:
        size = len(candidate)
        mask = index & ((1 << size) - 1)
        index >>= size
        rows = tuple(row for bit, row in enumerate(candidate.rows) if mask >> bit & 1)
        family.append(Behaviour(candidate.space, rows))
    return family


def exhaustive_necessity_oracle(
    problem: SynthesisProblem,
    row_cap: int | None = None,
    combination_cap: int | None = None,
    allow_empty: bool = False,
    config: Settings = settings,
) -> OracleSolution | None:
    row_cap = config.ORACLE_ROW_CAP if row_cap is None else row_cap
    combination_cap = config.ORACLE_COMBINATION_CAP if combination_cap is None else combination_cap

    admissible = algebra.intersect(problem.controller_network, problem.restriction)
    candidates = [algebra.project(admissible, block) for block in problem.controller_partition]
    total = prod(2 ** len(c) for c in candidates)
    if any(len(c) > row_cap for c in candidates) or total > combination_cap:
        raise SearchSpaceTooLarge(total, combination_cap)

    plant = problem.plant_behaviour
    logger.info("necessity search over %d controller families", total)
    for index in range(total):
        family = _family(candidates, index)
        controller = interconnect_controllers(family, problem.controller_network)
        if not controller.issubset(problem.restriction):
            continue
        achieved = close_loop(plant, controller, problem.plant_controller_network)
        report = check_problem1(achieved, problem, controller)
        if report.passed(allow_empty=allow_empty):
            logger.info("family %d implements a valid controlled behaviour", index)
            return OracleSolution(
                controllers=tuple(family),
                controller_behaviour=controller,
                achieved=achieved,
                family_index=index,
                searched=index + 1,
            )
    return None
