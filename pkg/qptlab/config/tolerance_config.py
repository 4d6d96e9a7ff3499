from pydantic import BaseModel, ConfigDict, Field, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class TolerancesConfig(BaseSettings):
    """数值容差配置, 双精度下 d <= 16 留有余量; 环境变量 QPTLAB_TOL_* 覆盖"""

    model_config = SettingsConfigDict(
        env_prefix="QPTLAB_TOL_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    hermitian: float = Field(default=1e-12, gt=0, description="态/归一化的厄米性容差")
    psd: float = Field(default=1e-10, gt=0, description="密度矩阵与信道的半正定容差")
    chi_hermitian: float = Field(default=1e-10, gt=0, description="过程矩阵厄米性容差")
    chi_psd: float = Field(default=1e-8, gt=0, description="过程矩阵半正定容差")
    probability: float = Field(default=1e-10, gt=0, description="概率归一化容差")
    rank: float = Field(default=1e-9, gt=0, description="设计矩阵数值秩的相对奇异值阈值")

    @model_validator(mode="after")
    def validate_order(self) -> "TolerancesConfig":
        """厄米性容差不能宽于半正定容差"""
        if self.hermitian > self.psd:
            raise ValueError("hermitian 容差必须小于等于 psd 容差")
        return self


# 导入时读取一次, 各模块共用
TOLERANCES = TolerancesConfig()


class SweepPoolConfig(BaseModel):
    """精度扫描线程池配置"""

    model_config = ConfigDict(
        extra="ignore",
    )

    max_workers: int = Field(default=4, ge=1, description="最大工作线程数")
    thread_name_prefix: str = Field(default="sweep-trial", description="线程名称前缀")
    task_timeout: float | None = Field(default=None, ge=0, description="单个试验的超时时间（秒），None表示不超时")
