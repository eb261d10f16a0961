# app/schemas/settings.py
import functools
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from app.schemas.enums.output_formats import OutputFormat

load_dotenv()


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="DUNBLOCKS_", extra="ignore")

    exceptional_table: Optional[Path] = None
    log_config: Path = Path("logging.ini")
    output_format: OutputFormat = OutputFormat.JSON
    verify_max_rank: int = Field(default=12, ge=0, le=12)
    verify_max_d: int = Field(default=8, ge=1, le=12)


@functools.lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings()
