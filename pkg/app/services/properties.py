"""Случайный прогон законов алгебры, соединений и синтеза.

Нарушение закона (law) считается ошибкой движка. Утверждения (claim) теории
синтеза проверяются перебором; расхождение попадает в отчёт как находка
вместе с контрпримером.
"""
import logging
import random
from pathlib import Path
from typing import Callable, Iterable

from app.config.settings import Settings, settings
from app.exceptions import EnumerationCapExceeded, SearchSpaceTooLarge
from app.models.behaviour import Behaviour
from app.models.problem import SynthesisProblem
from app.models.report import PropertyOutcome, SuiteReport
from app.models.signal import SignalSpace, SignalVariable
from app.models.system import InterconnectedSystem, NetworkSystem
from app.services import algebra, interconnect, verify
from app.services.behaviour import (dumps, full_space, iter_space,
                                    make_behaviour, restrict)
from app.services.synthesis import SynthesisService

logger = logging.getLogger(__name__)

GROUPS = ("algebra", "interconnect", "synthesis", "necessity")
MAX_EXAMPLES = 3

LAW, CLAIM = "law", "claim"


def random_variable(rng: random.Random, name: str, config: Settings = settings, min_size: int = 1) -> SignalVariable:
    size = rng.randint(min(min_size, config.GEN_MAX_ALPHABET), config.GEN_MAX_ALPHABET)
    return SignalVariable(name, tuple(range(size)))


def random_behaviour(
    rng: random.Random,
    space: SignalSpace,
    config: Settings = settings,
    density: float | None = None,
) -> Behaviour:
    if density is None:
        density = rng.uniform(config.GEN_MIN_DENSITY, config.GEN_MAX_DENSITY)
    return Behaviour(space, tuple(row for row in iter_space(space) if rng.random() < density))


def random_subset(rng: random.Random, behaviour: Behaviour) -> Behaviour:
    return Behaviour(behaviour.space, tuple(r for r in behaviour.rows if rng.random() < 0.5))


def random_system(
    rng: random.Random, config: Settings = settings, subsystems: int | None = None
) -> InterconnectedSystem:
    count = subsystems or rng.randint(2, max(2, config.GEN_MAX_SUBSYSTEMS))
    horizon = rng.randint(1, config.GEN_MAX_HORIZON)
    variables = [random_variable(rng, f"w{i + 1}", config) for i in range(count)]
    space = SignalSpace(tuple(variables), horizon)
    parts = tuple(
        random_behaviour(rng, space.subspace([v.name]), config) for v in variables
    )
    return InterconnectedSystem(parts, NetworkSystem(random_behaviour(rng, space, config)))


def _maybe_full(rng: random.Random, space: SignalSpace, config: Settings) -> Behaviour:
    if rng.random() < 0.5:
        return full_space(space)
    return random_behaviour(rng, space, config)


def _maybe_full_network(rng: random.Random, space: SignalSpace, config: Settings) -> NetworkSystem:
    if rng.random() < 0.5:
        return NetworkSystem.full(space)
    return NetworkSystem(random_behaviour(rng, space, config))


def random_problem(rng: random.Random, config: Settings = settings, tiny: bool = False) -> SynthesisProblem:
    horizon = 1 if tiny else rng.randint(1, config.GEN_MAX_HORIZON)
    plant_count = 1 if tiny else rng.randint(1, 2)
    controller_count = 1 if tiny else rng.randint(1, 2)

    plant_vars = [random_variable(rng, f"p{i + 1}", config, 2) for i in range(plant_count)]
    controller_vars = [
        random_variable(rng, f"c{j + 1}", config, 2) for j in range(controller_count)
    ]
    plant_space = SignalSpace(tuple(plant_vars), horizon)
    controller_space = SignalSpace(tuple(controller_vars), horizon)

    subsystems = tuple(
        _maybe_full(rng, plant_space.subspace([v.name]), config) for v in plant_vars
    )
    plant = InterconnectedSystem(subsystems, _maybe_full_network(rng, plant_space, config))
    free_vars = ()
    if rng.random() < 0.3:
        free_vars = (rng.choice(plant_vars).name,)

    return SynthesisProblem(
        plant=plant,
        spec=random_behaviour(rng, plant_space, config),
        controller_network=_maybe_full(rng, controller_space, config),
        restriction=_maybe_full(rng, controller_space, config),
        plant_controller_network=random_behaviour(
            rng, plant_space.merge(controller_space), config
        ),
        free_vars=free_vars,
        controller_partition=tuple((v.name,) for v in controller_vars),
    )


class _Recorder:

    def __init__(self, report: SuiteReport, counterexample_dir: Path | None) -> None:
        self.report = report
        self.counterexample_dir = counterexample_dir

    def check(self, name: str, kind: str, ok: bool, case: int, *context: Behaviour | str) -> None:
        outcome = self.report.outcomes.setdefault(name, PropertyOutcome(name, kind))
        if ok:
            outcome.passed += 1
            return
        outcome.failed += 1
        if len(outcome.counterexamples) >= MAX_EXAMPLES:
            return
        text = f"case {case}:\n" + "".join(
            item if isinstance(item, str) else dumps(item) for item in context
        )
        outcome.counterexamples.append(text)
        if self.counterexample_dir is not None:
            self.counterexample_dir.mkdir(parents=True, exist_ok=True)
            path = self.counterexample_dir / f"{name}.case{case}.txt"
            path.write_text(text, encoding="utf-8")
            outcome.files.append(str(path))


def _check_algebra(rng: random.Random, config: Settings, rec: _Recorder, case: int) -> None:
    horizon = rng.randint(1, config.GEN_MAX_HORIZON)
    space = SignalSpace((random_variable(rng, "a", config), random_variable(rng, "b", config)), horizon)
    b1, b2 = random_behaviour(rng, space, config), random_behaviour(rng, space, config)
    s = ("a",)

    inter, uni, diff = algebra.intersect(b1, b2), algebra.union(b1, b2), algebra.difference(b1, b2)
    p1, p2 = algebra.project(b1, s), algebra.project(b2, s)
    rec.check("projection.of_intersection_within", LAW, algebra.project(inter, s).issubset(algebra.intersect(p1, p2)), case, b1, b2)
    rec.check("projection.distributes_over_union", LAW, algebra.project(uni, s) == algebra.union(p1, p2), case, b1, b2)
    rec.check("projection.of_difference_contains", LAW, algebra.difference(p1, p2).issubset(algebra.project(diff, s)), case, b1, b2)
    rec.check("projection.monotone", LAW, algebra.project(inter, s).issubset(p1), case, b1, b2)

    universe = random_behaviour(rng, space, config)
    a1, a2 = random_subset(rng, universe), random_subset(rng, universe)
    if rng.random() < 0.5:
        a1 = algebra.difference(universe, a2)
    facts_a = {
        a1.issubset(a2),
        algebra.intersect(a1, a2) == a1,
        algebra.union(a1, a2) == a2,
        not algebra.difference(a1, a2),
    }
    rec.check("sets.subset_equivalences", LAW, len(facts_a) == 1, case, a1, a2)
    rec.check(
        "sets.disjoint_difference", LAW,
        (not algebra.intersect(a1, a2)) == (algebra.difference(a1, a2) == a1),
        case, a1, a2,
    )
    rec.check(
        "sets.complement_characterised", LAW,
        (a1 == algebra.difference(universe, a2))
        == (not algebra.intersect(a1, a2) and algebra.union(a1, a2) == universe),
        case, universe, a1, a2,
    )

    x_space, y_space = space.subspace(["a"]), space.subspace(["b"])
    x1, x2 = random_behaviour(rng, x_space, config), random_behaviour(rng, x_space, config)
    y1, y2 = random_behaviour(rng, y_space, config), random_behaviour(rng, y_space, config)
    left = algebra.product(algebra.intersect(x1, x2), algebra.intersect(y1, y2))
    right = algebra.intersect(algebra.product(x1, y1), algebra.product(x2, y2))
    rec.check("product.distributes_over_intersection", LAW, left == right, case, x1, x2, y1, y2)
    rec.check("product.commutative", LAW, algebra.product(x1, y1) == algebra.product(y1, x1), case, x1, y1)

    rec.check("core.canonical_idempotent", LAW, make_behaviour(space, b1.rows) == b1, case, b1)
    if horizon > 1:
        rec.check(
            "core.restrict_composes", LAW,
            restrict(restrict(b1, horizon - 1), 1) == restrict(b1, 1), case, b1,
        )


def _check_interconnect(rng: random.Random, config: Settings, rec: _Recorder, case: int) -> None:
    system = random_system(rng, config)
    composed = interconnect.compose(system)
    locals_ = interconnect.local_projections(system)
    network = system.network
    context = [*system.subsystems, network.behaviour]

    rec.check(
        "reconstruct.from_projections", LAW,
        interconnect.reconstruct_from_projections(locals_, network) == composed, case, *context,
    )
    hybrid_ok = all(
        interconnect.reconstruct_hybrid(system.subsystems[:n], locals_[n:], network) == composed
        for n in range(len(system.subsystems) + 1)
    )
    rec.check("reconstruct.hybrid_every_split", LAW, hybrid_ok, case, *context)
    rec.check(
        "interconnect.local_within_subsystem", LAW,
        all(p.issubset(b) for p, b in zip(locals_, system.subsystems)), case, *context,
    )
    rec.check(
        "interconnect.within_product_of_locals", LAW,
        composed.issubset(algebra.product_all(locals_, composed.horizon)), case, *context,
    )

    pair = random_system(rng, config, subsystems=2)
    pair_composed = interconnect.compose(pair)
    first = pair.variables_of(0)
    isolated = algebra.project(interconnect.compose(interconnect.isolated(pair, 0)), first)
    rec.check(
        "interconnect.first_local_is_filtered", LAW,
        algebra.project(pair_composed, first) == algebra.intersect(pair.subsystems[0], isolated),
        case, *pair.subsystems, pair.network.behaviour,
    )
    carrier = interconnect.observation_carrier(pair)
    second = pair.variables_of(1)
    observable = algebra.is_observable(carrier, first, second)
    rec.check(
        "interconnect.observability_on_carrier", LAW,
        observable == (pair_composed == carrier and algebra.is_observable(pair_composed, first, second)),
        case, *pair.subsystems, pair.network.behaviour,
    )


def _problem_context(problem: SynthesisProblem) -> list[Behaviour]:
    return [
        *problem.plant.subsystems,
        problem.plant.network.behaviour,
        problem.spec,
        problem.controller_network,
        problem.restriction,
        problem.plant_controller_network,
        f"# free_vars {problem.free_vars}\n",
    ]


def _check_synthesis(rng: random.Random, config: Settings, rec: _Recorder, case: int) -> None:
    problem = random_problem(rng, config)
    service = SynthesisService(config)
    context = _problem_context(problem)
    w_p, w_c = problem.w_p, problem.w_c

    result = service.synthesize(problem)
    aux, desired = result.auxiliary, result.desired
    plant = problem.plant_behaviour
    desired_p = algebra.project(desired, w_p)
    rec.check("synthesis.desired_within_spec", LAW,
              desired_p.issubset(algebra.intersect(plant, problem.spec)), case, *context)
    rec.check("synthesis.inner_out_controllers_disjoint", LAW,
              not algebra.intersect(algebra.project(aux.inner, w_c), algebra.project(aux.out, w_c)),
              case, *context)
    try:
        residual = service.residual_controller_rows(problem, desired, aux.inner, aux.ex, aux.out)
        rec.check("synthesis.controller_identities", LAW, True, case)
        rec.check("claim.controllers_reach_desired", CLAIM, not residual, case, *context)
    except Exception as exc:
        rec.check("synthesis.controller_identities", LAW, False, case, f"# {exc}\n", *context)

    carrier = service.carrier(problem)
    if algebra.is_observable(carrier, w_p, w_c):
        rec.check("synthesis.wp_observable_no_excluded", LAW, not algebra.project(aux.ex, w_p), case, *context)
    if algebra.is_observable(carrier, w_c, w_p):
        rec.check("synthesis.wc_observable_no_xi", LAW, not aux.xi, case, *context)
    rec.check(
        "synthesis.multiplicities", LAW,
        desired_p.issubset(result.multiplicities) and result.multiplicities.issubset(plant),
        case, *context,
    )

    if not result.exists:
        return

    general = service.controlled_behaviour(problem, desired, aux.inner, result.verdict)
    rec.check("synthesis.fast_path_agrees", LAW, general == result.controlled, case, *context)
    rec.check(
        "synthesis.sandwich", LAW,
        algebra.project(aux.inner, w_p).issubset(result.controlled)
        and result.controlled.issubset(desired_p),
        case, *context,
    )
    rec.check("synthesis.inner_nonempty", LAW, bool(aux.inner), case, *context)
    if len(problem.controller_partition) == 1:
        rec.check("controllers.single_block_decomposes", LAW, result.diagnostics.decomposes, case, *context)
    else:
        rec.check("claim.controllers_decompose", CLAIM, result.diagnostics.decomposes, case, *context)

    controllers = list(result.controllers)
    controller = verify.interconnect_controllers(controllers, problem.controller_network)
    full = interconnect.filtered_join([plant, controller], problem.plant_controller_network)
    augmented = interconnect.restrict_network(service.augmented_plant(problem), controllers)
    rec.check("synthesis.augmented_plant_identity", LAW, full == augmented, case, *context)

    achieved = verify.close_loop(plant, controller, problem.plant_controller_network)
    report = verify.check_problem1(achieved, problem, controller)
    diagnostics = result.diagnostics
    if diagnostics.decomposes:
        rec.check("oracle.implement_agrees", LAW, achieved == result.controlled, case, *context)
        rec.check("synthesis.sufficiency", LAW, report.passed(allow_empty=False), case, *context)
    else:
        rec.check(
            "synthesis.goal_check_reported", LAW,
            diagnostics.achieved == achieved and diagnostics.check == report,
            case, *context,
        )
        rec.check("claim.undecomposed_implement_agrees", CLAIM, achieved == result.controlled, case, *context)
        rec.check("claim.undecomposed_sufficiency", CLAIM, report.passed(allow_empty=False), case, *context)


def _check_necessity(rng: random.Random, config: Settings, rec: _Recorder, case: int) -> None:
    problem = random_problem(rng, config, tiny=True)
    service = SynthesisService(config)
    desired = service.desired_behaviour(problem)
    aux = service.auxiliary_sets(problem, desired)
    verdict = service.check_existence(problem, aux.inner, aux.xi)
    solution = verify.exhaustive_necessity_oracle(problem, config=config)
    context = _problem_context(problem)
    if verdict.exists:
        rec.check("necessity.verdict_implies_solution", LAW, solution is not None, case, *context)
    rec.check("claim.necessity_agreement", CLAIM, verdict.exists == (solution is not None), case, *context)


CHECKS: dict[str, Callable[[random.Random, Settings, _Recorder, int], None]] = {
    "algebra": _check_algebra,
    "interconnect": _check_interconnect,
    "synthesis": _check_synthesis,
    "necessity": _check_necessity,
}


def run_property_suite(
    seed: int,
    cases: int,
    groups: Iterable[str] = GROUPS,
    config: Settings = settings,
    counterexample_dir: Path | None = None,
) -> SuiteReport:
    # несогласия с теорией записываются как находки, а не исключения
    config = config.model_copy(update={"DEBUG": True, "STRICT_IDENTITIES": False})
    report = SuiteReport(seed=seed, cases=cases)
    rec = _Recorder(report, counterexample_dir)
    for group in groups:
        check = CHECKS[group]
        for case in range(cases):
            rng = random.Random(f"{seed}/{group}/{case}")
            try:
                check(rng, config, rec, case)
            except (EnumerationCapExceeded, SearchSpaceTooLarge) as exc:
                logger.debug("case %d of %s skipped: %s", case, group, exc.detail)
            except Exception as exc:
                rec.check(f"{group}.no_errors", LAW, False, case, f"# {type(exc).__name__}: {exc}\n")
    for name in sorted(report.outcomes):
        outcome = report.outcomes[name]
        if outcome.failed and outcome.kind == CLAIM:
            logger.warning(
                "%s: %d of %d cases disagree", name, outcome.failed, outcome.passed + outcome.failed
            )
        elif outcome.failed:
            logger.error("%s: %d failed cases", name, outcome.failed)
    logger.info(
        "suite seed=%d: %d law failures, %d claim findings",
        seed, report.law_failures, report.claim_findings,
    )
    return report
