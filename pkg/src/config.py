import os
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Application settings."""
    APP_NAME: str = "ribbon-feynman"
    APP_VERSION: str = "0.1.0"

    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")

    # desk-scale limits; every run is checked against them before computing
    MAX_EDGES: int = 9
    MAX_HALF_EDGES: int = 12
    MAX_COLORS: int = 4

    # largest reduced graph the oracle comparison enumerates per profile
    ORACLE_MAX_VERTICES: int = 6

    DEFAULT_JOBS: int = 1
    DEFAULT_SEED: int = 0

    DEFAULT_SAMPLES: int = 1_000_000
    SAMPLE_CHUNK: int = 100_000
    LAPLACE_TOLERANCE: float = 0.01

    HBAR_GRADING: bool = True

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"


settings = Settings()
