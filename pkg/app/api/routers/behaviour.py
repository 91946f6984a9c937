import re

import typer

from app.deps import FormatOption, OutputFormat, ProblemFile, reports_errors
from app.exceptions import ParseError, ValidationError
from app.schemas.report import BehaviourOut
from app.services import interconnect, render
from app.services.behaviour import dumps
from app.services.problem import ProblemService

router = typer.Typer()

HYBRID = re.compile(r"^hybrid:(\d+)$")


@router.command()
@reports_errors
def compose(problem_file: ProblemFile, output: FormatOption = OutputFormat.TEXT):
    """Поведение соединённой системы (X_i B^i) ∩ B^Pi."""
    service = ProblemService()
    system = service.system(service.load(problem_file))
    composed = interconnect.compose(system)
    if output is OutputFormat.JSON:
        typer.echo(BehaviourOut.of(composed).model_dump_json(indent=2))
    else:
        typer.echo(dumps(composed), nl=False)


@router.command()
@reports_errors
def reconstruct(
    problem_file: ProblemFile,
    mode: str = typer.Option("projections", help="projections | hybrid:n"),
    output: FormatOption = OutputFormat.TEXT,
):
    """Восстановление по локальным проекциям (или по n полным подсистемам и проекциям)."""
    service = ProblemService()
    document = service.load(problem_file)
    system = service.system(document)
    composed = interconnect.compose(system)
    projections = service.projections(document, system)
    if projections is None:
        projections = interconnect.local_projections(system)

    if mode == "projections":
        known = 0
    else:
        hybrid = HYBRID.match(mode)
        if hybrid is None:
            raise ParseError(f"mode must be 'projections' or 'hybrid:n', got {mode!r}")
        known = int(hybrid.group(1))
        if known > len(system.subsystems):
            raise ValidationError(f"hybrid:{known} exceeds {len(system.subsystems)} subsystems")

    used = projections[known:]
    reconstructed = interconnect.reconstruct_hybrid(system.subsystems[:known], used, system.network)
    if output is OutputFormat.JSON:
        typer.echo(render.reconstruct_json(mode, used, reconstructed, composed))
    else:
        typer.echo(render.reconstruct_text(mode, used, reconstructed, composed), nl=False)
