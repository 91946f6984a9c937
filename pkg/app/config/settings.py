from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    ENUMERATION_CAP: int = 1_000_000

    ORACLE_ROW_CAP: int = 12
    ORACLE_COMBINATION_CAP: int = 2 ** 20

    DEBUG: bool = False
    STRICT_IDENTITIES: bool = False
    PAD_CONTROLLERS: bool = False

    # Генератор случайных экземпляров для набора свойств
    GEN_MAX_SUBSYSTEMS: int = 3
    GEN_MAX_ALPHABET: int = 3
    GEN_MAX_HORIZON: int = 2
    GEN_MIN_DENSITY: float = 0.3
    GEN_MAX_DENSITY: float = 0.9

    LOG_LEVEL: str = "WARNING"

    model_config = SettingsConfigDict(
        env_file='.env',
        env_file_encoding="utf-8",
        extra="ignore",
    )


settings = Settings()
