from functools import lru_cache
from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings


def get_project_root() -> Path:
    current_path = Path(__file__).parent
    while current_path != current_path.parent:
        if (current_path / "pyproject.toml").exists():
            return current_path
        current_path = current_path.parent
    return Path(".")


class Settings(BaseSettings):
    # Application Settings
    APP_NAME: str = Field(default="hyperspec")

    # Logging Settings
    LOG_LEVEL: str = Field(default="WARNING")
    LOG_FILE: str | None = Field(default=None)

    # Output Settings
    FLOAT_SIGNIFICANT_DIGITS: int = Field(default=12, ge=1, le=17)

    # Verification Settings
    INTERLACING_DELETION_LIMIT: int = Field(default=64, ge=0)
    DEFAULT_MOMENT_ORDERS: list[int] = Field(default=[1, 2, 3])

    # Oracle Settings
    SWITCHING_SEARCH_LIMIT: int = Field(default=24, ge=0)
    HUNT_WORKERS: int = Field(default=1, ge=1)

    model_config = {
        "env_file": get_project_root() / ".env",
        "env_file_encoding": "utf-8",
        "case_sensitive": True,
        "extra": "ignore",
    }

    @property
    def absolute_log_file(self) -> str | None:
        """Log file path resolved against the project root, if one is set."""
        if self.LOG_FILE is None:
            return None
        path = Path(self.LOG_FILE)
        if not path.is_absolute():
            path = get_project_root() / path
        return str(path)

    def model_post_init(self, __context) -> None:
        if self.absolute_log_file is not None:
            Path(self.absolute_log_file).parent.mkdir(parents=True, exist_ok=True)


@lru_cache()
def get_settings() -> Settings:
    return Settings()
