"""Текстовые и JSON-отчёты команд. Поведения всегда в канонической форме."""
from dataclasses import asdict
from fractions import Fraction
from typing import Sequence

from app.models.behaviour import Behaviour, Trajectory
from app.models.problem import SynthesisProblem
from app.models.report import OracleSolution, Problem1Report, SuiteReport
from app.models.result import SynthesisResult
from app.models.signal import SignalSpace
from app.schemas.report import (BehaviourOut, HankelOut, OracleOut,
                                Problem1Out, PropertyOut, ReconstructOut,
                                SuiteOut, SynthesisOut, VerdictOut, VerifyOut)
from app.services.behaviour import dumps, format_row


def section(title: str, behaviour: Behaviour) -> str:
    return f"## {title}\n" + dumps(behaviour)


def flag(value: bool | None) -> str:
    if value is None:
        return "n/a"
    return "PASS" if value else "FAIL"


def _witnesses(title: str, rows: Sequence[Trajectory], space: SignalSpace) -> list[str]:
    return [f"# {title}: {format_row(row, space)}" for row in rows]


def synthesis_text(result: SynthesisResult, problem: SynthesisProblem) -> str:
    aux = result.auxiliary
    parts = [
        section("desired", result.desired),
        section("out", aux.out),
        section("ex", aux.ex),
        section("in", aux.inner),
        section("xi", aux.xi),
    ]
    verdict = result.verdict
    lines = [
        "## verdict",
        f"exists={str(verdict.exists).lower()} "
        f"free_values_covered={str(verdict.free_values_covered).lower()} "
        f"plant_free={str(verdict.plant_free).lower()} "
        f"constructive={str(result.constructive).lower()}",
    ]
    free_space = problem.plant_space.subspace(problem.free_vars)
    lines += _witnesses("uncovered free value", verdict.uncovered_free_values, free_space)
    lines += _witnesses("missing free value", verdict.missing_free_values, free_space)
    parts.append("\n".join(lines) + "\n")

    parts.append(section("controlled", result.controlled))
    for controller in result.controllers:
        parts.append(section("controller " + " ".join(controller.names), controller))
    parts.append(section("sacrificed", result.sacrificed))
    if result.multiplicities is not None:
        parts.append(section("multiplicities", result.multiplicities))
    diagnostics = result.diagnostics
    if diagnostics.residual_rows:
        parts.append(section("residual controller rows", diagnostics.residual_rows))
    if diagnostics.achieved is not None:
        parts.append(section("achieved by controllers", diagnostics.achieved))
    lines = [
        f"## fast_path {result.fast_path.value}",
        f"# controllers decompose: {flag(diagnostics.decomposes)}",
        f"# controllers valid: {flag(diagnostics.controllers_valid)}",
    ]
    check = diagnostics.check
    if check is not None and not check.passed():
        lines.append("# not constructive: the interconnected controllers fail the control goal")
        lines += _witnesses("outside spec", check.spec_witnesses, problem.plant_space)
        lines += _witnesses("unreached free value", check.free_witnesses, free_space)
        lines += _witnesses("outside restriction", check.restriction_witnesses, problem.controller_space)
    if diagnostics.padded:
        lines.append("# controllers padded")
    parts.append("\n".join(lines) + "\n")
    return "".join(parts)


def synthesis_json(result: SynthesisResult) -> str:
    aux, diagnostics = result.auxiliary, result.diagnostics
    out = SynthesisOut(
        desired=BehaviourOut.of(result.desired),
        out=BehaviourOut.of(aux.out),
        ex=BehaviourOut.of(aux.ex),
        inner=BehaviourOut.of(aux.inner),
        xi=BehaviourOut.of(aux.xi),
        verdict=VerdictOut.model_validate(result.verdict),
        controlled=BehaviourOut.of(result.controlled),
        controllers=[BehaviourOut.of(c) for c in result.controllers],
        sacrificed=BehaviourOut.of(result.sacrificed),
        multiplicities=BehaviourOut.of(result.multiplicities) if result.multiplicities is not None else None,
        fast_path=result.fast_path.value,
        residual_controller_rows=(
            BehaviourOut.of(diagnostics.residual_rows) if diagnostics.residual_rows is not None else None
        ),
        controllers_decompose=diagnostics.decomposes,
        controllers_valid=diagnostics.controllers_valid,
        constructive=result.constructive,
        achieved_by_controllers=(
            BehaviourOut.of(diagnostics.achieved) if diagnostics.achieved is not None else None
        ),
        controllers_check=problem1_out(diagnostics.check) if diagnostics.check is not None else None,
        padded=diagnostics.padded,
    )
    return out.model_dump_json(indent=2)


def problem1_out(report: Problem1Report, allow_empty: bool = False) -> Problem1Out:
    return Problem1Out(passed=report.passed(allow_empty), **asdict(report))


def verify_text(achieved: Behaviour, report: Problem1Report, free_space: SignalSpace, controller_space: SignalSpace) -> str:
    lines = [
        f"# within spec: {flag(report.within_spec)}",
        f"# free variables free: {flag(report.free)}",
        f"# controllers within restriction: {flag(report.within_restriction)}",
        f"# nonempty: {flag(report.nonempty)}",
        f"# overall: {flag(report.passed())}",
    ]
    lines += _witnesses("outside spec", report.spec_witnesses, achieved.space)
    lines += _witnesses("unreached free value", report.free_witnesses, free_space)
    lines += _witnesses("outside restriction", report.restriction_witnesses, controller_space)
    return section("achieved", achieved) + "\n".join(lines) + "\n"


def verify_json(achieved: Behaviour, report: Problem1Report) -> str:
    return VerifyOut(achieved=BehaviourOut.of(achieved), report=problem1_out(report)).model_dump_json(indent=2)


def oracle_text(solution: OracleSolution | None) -> str:
    if solution is None:
        return "# no controller family implements a valid controlled behaviour\n"
    parts = [f"# found family {solution.family_index} after {solution.searched} candidates\n"]
    for controller in solution.controllers:
        parts.append(section("controller " + " ".join(controller.names), controller))
    parts.append(section("controller behaviour", solution.controller_behaviour))
    parts.append(section("achieved", solution.achieved))
    return "".join(parts)


def oracle_json(solution: OracleSolution | None) -> str:
    if solution is None:
        return OracleOut(found=False).model_dump_json(indent=2)
    return OracleOut(
        found=True,
        searched=solution.searched,
        family_index=solution.family_index,
        controllers=[BehaviourOut.of(c) for c in solution.controllers],
        controller_behaviour=BehaviourOut.of(solution.controller_behaviour),
        achieved=BehaviourOut.of(solution.achieved),
    ).model_dump_json(indent=2)


def reconstruct_text(mode: str, projections: Sequence[Behaviour], reconstructed: Behaviour, composed: Behaviour) -> str:
    parts = [section(f"projection {' '.join(p.names)}", p) for p in projections]
    parts.append(section(f"reconstructed ({mode})", reconstructed))
    parts.append(f"# reconstructed == composed: {flag(reconstructed == composed)}\n")
    return "".join(parts)


def reconstruct_json(mode: str, projections: Sequence[Behaviour], reconstructed: Behaviour, composed: Behaviour) -> str:
    return ReconstructOut(
        mode=mode,
        projections=[BehaviourOut.of(p) for p in projections],
        reconstructed=BehaviourOut.of(reconstructed),
        composed=BehaviourOut.of(composed),
        equal=reconstructed == composed,
    ).model_dump_json(indent=2)


def suite_json(report: SuiteReport) -> str:
    return SuiteOut(
        seed=report.seed,
        cases=report.cases,
        law_failures=report.law_failures,
        claim_findings=report.claim_findings,
        properties=[PropertyOut.model_validate(report.outcomes[name]) for name in sorted(report.outcomes)],
    ).model_dump_json(indent=2)


def hankel_text(out: HankelOut) -> str:
    lines = [f"## hankel L={out.L} {out.rows}x{out.cols}"]
    lines += [" ".join(row) for row in out.matrix]
    lines.append(f"# rank: {out.rank}")
    if out.free_rows_full_rank is not None:
        lines.append(f"# free blocks {out.free_blocks} full row rank: {flag(out.free_rows_full_rank)}")
    if out.query_in_span is not None:
        lines.append(f"# query ({','.join(out.query)}) in column span: {flag(out.query_in_span)}")
    return "\n".join(lines) + "\n"


def fractions(values: Sequence[Fraction]) -> list[str]:
    return [str(v) for v in values]
