import functools
import logging
from enum import Enum
from pathlib import Path
from typing import Annotated, Callable

import typer

from app.exceptions import BehaviourError

logger = logging.getLogger(__name__)


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"


ProblemFile = Annotated[
    Path, typer.Argument(exists=True, dir_okay=False, help="JSON problem document")
]
FormatOption = Annotated[
    OutputFormat, typer.Option("--format", help="text (canonical) or json")
]


def reports_errors(command: Callable) -> Callable:
    """BehaviourError -> сообщение в stderr и код выхода по классу ошибки."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except BehaviourError as exc:
            logger.debug("command failed", exc_info=True)
            typer.echo(f"error: {exc.detail}", err=True)
            raise typer.Exit(exc.exit_code)

    return wrapper
