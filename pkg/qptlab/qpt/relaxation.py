"""由单比特 χ 同时提取 T1 与 T2

模型: 振幅阻尼 γ = 1 - e^{-t/T1} 之后接退相位 λ. 由 χ 得到 Pauli 转移矩阵 R 后
    γ = 1 - R_ZZ,   c = (R_XX + R_YY)/2 = √((1-γ)(1-λ)) = e^{-t/T2},
1/T2 = 1/(2 T1) + 1/T_φ.
"""

import logging
import math

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from qptlab.common.exceptions import (
    DimensionMismatchError,
    InvalidArgumentError,
    ModelMismatchError,
    RelaxationIndeterminateError,
)
from qptlab.core.channels import ChiMatrix, chi_to_ptm, kraus_to_chi
from qptlab.core.presets import ChannelPreset, preset_channel
from qptlab.qpt.reconstruct import ChiEstimate

logger = logging.getLogger(__name__)

MODEL_TOL = 0.05

DECAY_FLOOR = 1e-9


class RelaxationTimes(BaseModel):
    model_config = ConfigDict(frozen=True)

    t1: float = Field(..., gt=0, description="纵向弛豫时间")
    t2: float = Field(..., gt=0, description="横向弛豫时间")
    t_phi: float = Field(..., gt=0, description="纯退相位时间, 无纯退相位时为 inf")
    gamma: float = Field(..., description="振幅阻尼参数")
    dephasing: float = Field(..., description="退相位参数 λ")
    coherence: float = Field(..., description="相干衰减因子 c")
    model_residual: float = Field(..., ge=0, description="与模型 χ 的最大偏差")


def model_chi(gamma: float, lam: float) -> ChiMatrix:
    preset = ChannelPreset(name="damping-dephasing", params=(gamma, lam))
    return kraus_to_chi(preset_channel(preset))


def extract_relaxation(chi_t: ChiEstimate | ChiMatrix, t: float, tolerance: float = MODEL_TOL) -> RelaxationTimes:
    chi = chi_t.chi if isinstance(chi_t, ChiEstimate) else chi_t
    if chi.qubit_count != 1:
        raise DimensionMismatchError("弛豫分析只支持单比特 χ")
    if t <= 0:
        raise InvalidArgumentError(f"演化时间必须为正, 实际 {t}")

    ptm = chi_to_ptm(chi)
    gamma = 1.0 - float(ptm[3, 3])
    coherence = float(ptm[1, 1] + ptm[2, 2]) / 2.0
    if gamma <= DECAY_FLOOR or coherence >= 1.0:
        raise RelaxationIndeterminateError(
            f"没有可观测的衰减 (γ = {gamma!r}, c = {coherence!r})",
            detail={"gamma": gamma, "coherence": coherence},
        )
    if gamma >= 1.0 or coherence <= 0.0:
        raise ModelMismatchError(
            f"衰减参数超出模型范围 (γ = {gamma!r}, c = {coherence!r})",
            detail={"gamma": gamma, "coherence": coherence},
        )

    lam = 1.0 - coherence ** 2 / (1.0 - gamma)
    residual = chi.max_distance(model_chi(gamma, float(np.clip(lam, 0.0, 1.0))))
    if residual > tolerance or not -tolerance <= lam <= 1.0:
        raise ModelMismatchError(
            f"χ 不符合阻尼-退相位模型, 最大偏差 {residual:.3e}",
            detail={"residual": residual, "gamma": gamma, "dephasing": lam},
        )

    t1 = -t / math.log(1.0 - gamma)
    t2 = -t / math.log(coherence)
    phi_rate = 1.0 / t2 - 1.0 / (2.0 * t1)
    t_phi = math.inf if phi_rate <= 0 else 1.0 / phi_rate
    logger.info(f"relaxation: T1={t1:.6g}, T2={t2:.6g}, T_phi={t_phi:.6g}, residual={residual:.3e}")
    return RelaxationTimes(
        t1=t1, t2=t2, t_phi=t_phi, gamma=gamma, dephasing=lam, coherence=coherence, model_residual=residual,
    )
