import logging

from app.config.settings import settings


def setup_logging(level: str | None = None) -> None:
    '''Настройка логирования для CLI, вызывается один раз при старте'''
    logging.basicConfig(
        level=(level or settings.LOG_LEVEL).upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
