from pathlib import Path
from typing import Optional

import typer

from app.config.settings import settings
from app.deps import FormatOption, OutputFormat, reports_errors
from app.exceptions import InternalInconsistency, ParseError
from app.services import render
from app.services.properties import GROUPS, run_property_suite

router = typer.Typer()


@router.command()
@reports_errors
def suite(
    seed: int = typer.Option(0, help="base seed, every case derives its own generator"),
    cases: int = typer.Option(100, min=1),
    group: Optional[list[str]] = typer.Option(None, help=f"one of {', '.join(GROUPS)}; repeatable"),
    counterexamples: Optional[Path] = typer.Option(None, file_okay=False, help="directory for counterexample files"),
    output: FormatOption = OutputFormat.TEXT,
):
    """Случайный прогон законов; код выхода 1, если нарушен хотя бы один закон."""
    groups = group or list(GROUPS)
    unknown = [g for g in groups if g not in GROUPS]
    if unknown:
        raise ParseError(f"unknown groups {unknown}, expected {list(GROUPS)}")
    report = run_property_suite(seed, cases, groups, settings, counterexamples)
    if output is OutputFormat.JSON:
        typer.echo(render.suite_json(report))
    else:
        typer.echo(report.render(), nl=False)
    if report.law_failures:
        raise typer.Exit(InternalInconsistency.exit_code)
