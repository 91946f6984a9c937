from pathlib import Path

import typer

from app.config.settings import settings
from app.deps import FormatOption, OutputFormat, ProblemFile, reports_errors
from app.exceptions import NotSynthesizable
from app.services import render, verify
from app.services.problem import ProblemService
from app.services.synthesis import SynthesisService

router = typer.Typer()


@router.command()
@reports_errors
def synthesize(problem_file: ProblemFile, output: FormatOption = OutputFormat.TEXT):
    """Множества B_d, B_out, B_ex, B_in, B_xi, вердикт, B_pc и контроллеры B_c^j."""
    documents = ProblemService()
    problem = documents.problem(documents.load(problem_file))
    result = SynthesisService(settings).synthesize(problem)
    if output is OutputFormat.JSON:
        typer.echo(render.synthesis_json(result))
    else:
        typer.echo(render.synthesis_text(result, problem), nl=False)
    if not result.exists:
        raise typer.Exit(NotSynthesizable.exit_code)


@router.command("verify")
@reports_errors
def verify_controllers(
    problem_file: ProblemFile,
    controllers: Path = typer.Option(..., exists=True, dir_okay=False, help="JSON file with controller behaviours"),
    output: FormatOption = OutputFormat.TEXT,
):
    """Реализует заданные контроллеры на объекте и проверяет цель управления."""
    documents = ProblemService()
    document = documents.load(problem_file)
    problem = documents.problem(document)
    given = documents.load_controllers(document, controllers)

    controller = verify.interconnect_controllers(given, problem.controller_network)
    achieved = verify.close_loop(problem.plant_behaviour, controller, problem.plant_controller_network)
    report = verify.check_problem1(achieved, problem, controller)
    if output is OutputFormat.JSON:
        typer.echo(render.verify_json(achieved, report))
    else:
        typer.echo(
            render.verify_text(
                achieved,
                report,
                problem.plant_space.subspace(problem.free_vars),
                problem.controller_space,
            ),
            nl=False,
        )


@router.command()
@reports_errors
def oracle(
    problem_file: ProblemFile,
    allow_empty: bool = typer.Option(False, "--allow-empty", help="accept an empty controlled behaviour"),
    output: FormatOption = OutputFormat.TEXT,
):
    """Полный перебор семейств контроллеров."""
    documents = ProblemService()
    problem = documents.problem(documents.load(problem_file))
    solution = verify.exhaustive_necessity_oracle(problem, allow_empty=allow_empty, config=settings)
    if output is OutputFormat.JSON:
        typer.echo(render.oracle_json(solution))
    else:
        typer.echo(render.oracle_text(solution), nl=False)
