"""Application configuration helpers."""

from __future__ import annotations

from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Load configuration from environment variables or `.env`."""

    exact_edge_cap: int = Field(10, alias="TWOBREAK_EXACT_CAP", ge=1)
    oracle_edge_cap: int = Field(5, alias="TWOBREAK_ORACLE_CAP", ge=1)
    macd_oracle_cap: int = Field(8, alias="TWOBREAK_MACD_ORACLE_CAP", ge=1)
    misa_oracle_cap: int = Field(12, alias="TWOBREAK_MISA_ORACLE_CAP", ge=1)
    jobs: int = Field(1, alias="TWOBREAK_JOBS", ge=1)
    log_level: str = Field("INFO", alias="LOG_LEVEL")
    log_directory: Path | None = Field(None, alias="TWOBREAK_LOG_DIR")

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    def cap_for(self, search: str, override: int | None = None) -> int:
        """Return the edge cap of ``search``, honouring a per-invocation override."""

        if override is not None:
            if override <= 0:
                msg = "Boyut sınırı pozitif olmalı."
                raise ValueError(msg)
            return override

        caps = {
            "exact": self.exact_edge_cap,
            "oracle": self.oracle_edge_cap,
            "macd-oracle": self.macd_oracle_cap,
            "misa-oracle": self.misa_oracle_cap,
        }
        try:
            return caps[search]
        except KeyError:
            msg = f"Bilinmeyen arama türü: {search!r}"
            raise ValueError(msg) from None


settings = Settings()
