from typing import Literal

from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings, SettingsConfigDict

LogLevel = Literal["TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"]


class ServerSettings(BaseModel):
    host: str = "127.0.0.1"
    port: int = Field(default=8000, ge=1, le=65535)
    workers: int = 1


class LogSettings(BaseModel):
    level: LogLevel = "WARNING"


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        extra="ignore",
        env_prefix="WBA_",
        env_file_encoding="utf-8",
        env_file=".env",
        env_nested_delimiter="__",
    )

    server: ServerSettings = ServerSettings()
    log: LogSettings = LogSettings()


settings = Settings()
