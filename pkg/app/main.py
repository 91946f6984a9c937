from typing import Optional

import typer

from app.api.routers import (behaviour_router, hankel_router,
                             properties_router, synthesis_router)
from app.config.logging import setup_logging
from app.config.settings import settings

cli = typer.Typer(no_args_is_help=True, help="Exact behaviours over finite trajectory sets.")


def include_router(router: typer.Typer) -> None:
    cli.registered_commands.extend(router.registered_commands)


include_router(behaviour_router)
include_router(synthesis_router)
include_router(properties_router)
include_router(hankel_router)


@cli.callback()
def main(
    log_level: Optional[str] = typer.Option(None, help="overrides LOG_LEVEL"),
    debug: bool = typer.Option(False, "--debug", help="cross-check fast paths against the general construction"),
    strict: bool = typer.Option(False, "--strict", help="treat a controller residual as an internal error"),
    pad: bool = typer.Option(False, "--pad", help="pad controllers with inadmissible rows"),
):
    setup_logging(log_level)
    # флаги только включают, значения из окружения не сбрасываются
    if debug:
        settings.DEBUG = True
    if strict:
        settings.STRICT_IDENTITIES = True
    if pad:
        settings.PAD_CONTROLLERS = True


if __name__ == "__main__":
    cli()
