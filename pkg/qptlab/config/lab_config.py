import logging

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict

from qptlab.config.tolerance_config import SweepPoolConfig


class LabConfig(BaseSettings):
    """工作台配置, 环境变量 QPTLAB_* 与 .env 优先于代码传入的值"""

    model_config = SettingsConfigDict(
        env_prefix="QPTLAB_",
        env_file=".env",
        env_file_encoding="utf-8",
        env_nested_delimiter="__",
        extra="ignore",
    )

    default_seed: int = Field(default=0, ge=0, description="默认随机种子")
    max_exact_qubits: int = Field(default=4, ge=1, le=4, description="精确模拟的总比特数上限")
    log_dir: str = Field(default="logs", description="日志目录")
    log_level: str = Field(default="DEBUG", description="日志级别")

    sweep_pool: SweepPoolConfig = Field(default_factory=SweepPoolConfig)

    @field_validator("log_level")
    def validate_log_level(cls, v):
        level = str(v).upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError(f"未知日志级别 {v!r}")
        return level

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        return env_settings, dotenv_settings, init_settings
