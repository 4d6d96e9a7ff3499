"""线性反演重构 χ (最小范数最小二乘, 不做半正定投影)"""

import logging

import numpy as np
from scipy import linalg

from qptlab.common.exceptions import DimensionMismatchError, RankDeficientError
from qptlab.common.model import FrozenArrayModel
from qptlab.config import TOLERANCES as TOL
from qptlab.core.channels import ChiMatrix
from qptlab.qpt.design import DesignMatrix, params_to_chi

logger = logging.getLogger(__name__)


class ChiEstimate(FrozenArrayModel):
    chi: ChiMatrix
    residual_norm: float
    condition_number: float
    rank: int

    @property
    def is_physical(self) -> bool:
        return self.chi.is_physical()

    def max_error(self, truth: ChiMatrix) -> float:
        return self.chi.max_distance(truth)


def reconstruct_chi(design: DesignMatrix, frequencies, rtol: float = TOL.rank) -> ChiEstimate:
    """秩不足 d⁴ 时抛出 RankDeficientError"""
    f = np.asarray(frequencies, dtype=float).reshape(-1)
    if f.size != design.entries.shape[0]:
        raise DimensionMismatchError(
            f"频率向量长度 {f.size} 与设计矩阵行数 {design.entries.shape[0]} 不符")
    params, _, _, s = linalg.lstsq(design.entries, f, cond=rtol)
    rank = int(np.sum(s > rtol * s[0])) if s.size and s[0] > 0 else 0
    if rank < design.parameter_count:
        raise RankDeficientError(
            f"设计矩阵秩 {rank} 小于参数个数 {design.parameter_count}, 方案不完备",
            detail={"rank": rank, "required": design.parameter_count},
        )
    residual = float(np.linalg.norm(design.entries @ params - f))
    estimate = ChiEstimate(
        chi=params_to_chi(params, design.basis_dim),
        residual_norm=residual,
        condition_number=float(s[0] / s[-1]),
        rank=rank,
    )
    logger.debug(f"reconstructed chi: residual {residual:.3e}, condition {estimate.condition_number:.3e}")
    return estimate
