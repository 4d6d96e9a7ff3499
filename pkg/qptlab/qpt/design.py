"""设计矩阵: χ 的实参数 -> 各配置结果概率的线性映射

实参数顺序: d² 个对角元, 然后严格上三角 (行优先) 每个元素的 (Re, Im).
列 q 的取值是 χ 取第 q 个实基元时的概率, 由 tr(E_o A_m ρ A_n†) 直接计算,
其中 A_m = σ_m ⊗ I_anc. 损耗结果与其余结果仿射相关, 不进入设计矩阵.
"""

import csv
import io
import logging
from collections.abc import Sequence

import numpy as np
from pydantic import field_validator, model_validator

from qptlab.common.exceptions import DimensionMismatchError, SizeLimitError
from qptlab.common.model import FrozenArrayModel, frozen_array
from qptlab.config import TOLERANCES as TOL
from qptlab.core.channels import ChiMatrix, parameter_count
from qptlab.core.pauli import pauli_basis, pauli_labels
from qptlab.measurement.dump import fmt_float
from qptlab.measurement.projective import MAX_TOTAL_QUBITS, ProjectiveMeasurement
from qptlab.qpt.experiment import Config, ExperimentPlan

logger = logging.getLogger(__name__)


def upper_pairs(size: int) -> list[tuple[int, int]]:
    return [(m, n) for m in range(size) for n in range(m + 1, size)]


def parameter_labels(qubit_count: int) -> tuple[str, ...]:
    labels = pauli_labels(qubit_count)
    out = [f"chi[{p},{p}]" for p in labels]
    for m, n in upper_pairs(len(labels)):
        out.append(f"re[{labels[m]},{labels[n]}]")
        out.append(f"im[{labels[m]},{labels[n]}]")
    return tuple(out)


def chi_to_params(chi: ChiMatrix) -> np.ndarray:
    entries = chi.entries
    size = entries.shape[0]
    iu = np.triu_indices(size, k=1)
    upper = entries[iu]
    off = np.empty(2 * upper.size)
    off[0::2] = upper.real
    off[1::2] = upper.imag
    return np.concatenate([np.diag(entries).real, off])


def params_to_chi(params: np.ndarray, basis_dim: int) -> ChiMatrix:
    size = basis_dim ** 2
    params = np.asarray(params, dtype=float)
    if params.size != size ** 2:
        raise DimensionMismatchError(f"参数个数 {params.size} 与 d⁴ = {size ** 2} 不符")
    chi = np.diag(params[:size]).astype(complex)
    iu = np.triu_indices(size, k=1)
    chi[iu] = params[size::2] + 1j * params[size + 1::2]
    chi[(iu[1], iu[0])] = params[size::2] - 1j * params[size + 1::2]
    return ChiMatrix(entries=chi, basis_dim=basis_dim)


class DesignMatrix(FrozenArrayModel):
    entries: np.ndarray
    row_labels: tuple[str, ...]
    column_labels: tuple[str, ...]
    basis_dim: int

    @field_validator("entries", mode="before")
    @classmethod
    def to_real(cls, v):
        return frozen_array(v, dtype=float)

    @model_validator(mode="after")
    def validate_shape(self) -> "DesignMatrix":
        rows, cols = self.entries.shape
        if cols != parameter_count(self.basis_dim):
            raise ValueError(f"列数 {cols} 不等于 d⁴ = {parameter_count(self.basis_dim)}")
        if rows != len(self.row_labels) or cols != len(self.column_labels):
            raise ValueError("行/列标签个数与矩阵形状不符")
        if not np.all(np.isfinite(self.entries)):
            raise ValueError("设计矩阵存在非有限元素")
        return self

    @property
    def parameter_count(self) -> int:
        return self.entries.shape[1]

    def singular_values(self) -> np.ndarray:
        return np.linalg.svd(self.entries, compute_uv=False)

    def rank(self, rtol: float = TOL.rank) -> int:
        s = self.singular_values()
        return int(np.sum(s > rtol * s[0])) if s.size and s[0] > 0 else 0

    def is_complete(self, rtol: float = TOL.rank) -> bool:
        return self.rank(rtol) == self.parameter_count

    def condition_number(self) -> float:
        s = self.singular_values()
        return float(s[0] / s[-1]) if s[-1] > 0 else float("inf")

    def predict(self, chi: ChiMatrix) -> np.ndarray:
        return self.entries @ chi_to_params(chi)


def config_design_rows(config: Config) -> np.ndarray:
    """单个配置的设计矩阵行 (outcome_count, d⁴)"""
    n, a = config.system_qubits, config.ancilla_qubits
    basis = pauli_basis(n)
    ops = basis if a == 0 else np.array([np.kron(s, np.eye(2 ** a)) for s in basis])
    rho = config.density()
    meas = config.measurement
    effects = meas.projectors if isinstance(meas, ProjectiveMeasurement) else meas.effects
    ops_rho = np.einsum("mbc,ce->mbe", ops, rho)
    g = np.einsum("oab,mbe,nae->omn", effects, ops_rho, ops.conj(), optimize=True)

    size = basis.shape[0]
    iu = np.triu_indices(size, k=1)
    diag = np.einsum("omm->om", g).real
    g_mn, g_nm = g[:, iu[0], iu[1]], g[:, iu[1], iu[0]]
    rows = np.empty((g.shape[0], size + 2 * iu[0].size))
    rows[:, :size] = diag
    rows[:, size::2] = (g_mn + g_nm).real
    rows[:, size + 1::2] = -(g_mn - g_nm).imag
    return rows


def design_matrix_for_configs(configs: Sequence[Config], n: int) -> DesignMatrix:
    for c in configs:
        if c.system_qubits + c.ancilla_qubits > MAX_TOTAL_QUBITS:
            raise SizeLimitError(f"配置 {c.label} 超过精确模拟上限 {MAX_TOTAL_QUBITS} 比特")
        if c.system_qubits != n:
            raise DimensionMismatchError(f"配置 {c.label} 的系统比特数不是 {n}")
    blocks = [config_design_rows(c) for c in configs]
    row_labels = tuple(f"{c.label}/{o}" for c in configs for o in c.measurement.labels)
    return DesignMatrix(
        entries=np.vstack(blocks),
        row_labels=row_labels,
        column_labels=parameter_labels(n),
        basis_dim=2 ** n,
    )


def build_design_matrix(plan: ExperimentPlan) -> DesignMatrix:
    design = design_matrix_for_configs(plan.configs, plan.n)
    logger.info(f"design matrix for {plan.scheme.value} n={plan.n}: {design.entries.shape}")
    return design


def design_to_csv(design: DesignMatrix) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("row", *design.column_labels))
    for label, row in zip(design.row_labels, design.entries):
        writer.writerow((label, *(fmt_float(v) for v in row)))
    return buf.getvalue()


def design_from_csv(text: str) -> DesignMatrix:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if not header or header[0] != "row":
        raise ValueError("设计矩阵 CSV 缺少 row 表头")
    labels, rows = [], []
    for record in reader:
        labels.append(record[0])
        rows.append([float(v) for v in record[1:]])
    cols = len(header) - 1
    basis_dim = int(round(cols ** 0.25))
    return DesignMatrix(
        entries=np.array(rows, dtype=float).reshape(len(rows), cols),
        row_labels=tuple(labels),
        column_labels=tuple(header[1:]),
        basis_dim=basis_dim,
    )
