from pathlib import Path
from typing import Optional

import typer

from app.deps import FormatOption, OutputFormat, reports_errors
from app.exceptions import ParseError
from app.schemas.report import HankelOut
from app.services import hankel as lti
from app.services import render

router = typer.Typer()


def _blocks(text: str) -> list[int]:
    try:
        return [int(part) for part in text.replace(",", " ").split()]
    except ValueError:
        raise ParseError(f"--free expects block indices, got {text!r}") from None


@router.command()
@reports_errors
def hankel(
    trajectory_file: Path = typer.Argument(..., exists=True, dir_okay=False, help="measured trajectory"),
    L: int = typer.Option(..., "--L", "-L", min=1, help="number of block rows"),
    free: Optional[str] = typer.Option(None, help="free variable blocks, 0-based, e.g. 0,2"),
    query: Optional[str] = typer.Option(None, help="vector tested for membership in the column span"),
    output: FormatOption = OutputFormat.TEXT,
):
    """Ганкелева матрица траектории, её ранг и проверки свободы и принадлежности."""
    w = lti.parse_trajectory(trajectory_file.read_text(encoding="utf-8"))
    H = lti.hankel(w, L)
    out = HankelOut(
        L=L,
        rows=H.rows,
        cols=H.cols,
        rank=lti.rank(H),
        matrix=[render.fractions(row) for row in H.entries],
    )
    if free is not None:
        out.free_blocks = _blocks(free)
        out.free_rows_full_rank = lti.free_rows_check(w, out.free_blocks, L)
    if query is not None:
        vector = lti.parse_vector(query)
        out.query = render.fractions(vector)
        out.query_in_span = lti.in_span(H, vector)

    if output is OutputFormat.JSON:
        typer.echo(out.model_dump_json(indent=2, exclude_none=True))
    else:
        typer.echo(render.hankel_text(out), nl=False)
