"""方案与重构结果转储 (JSON 结构化文本 / CSV)"""

import csv
import io

import numpy as np
from pydantic import Field

from qptlab.common.enums import SchemeTag
from qptlab.common.model import BaseDataModel
from qptlab.core.channels import ChiMatrix
from qptlab.core.pauli import pauli_labels
from qptlab.core.states import KetVector
from qptlab.measurement.dump import OutcomeRecord, fmt_float
from qptlab.measurement.projective import ProjectiveMeasurement
from qptlab.qpt.experiment import ExperimentPlan
from qptlab.qpt.reconstruct import ChiEstimate
from qptlab.qpt.relaxation import RelaxationTimes
from qptlab.qpt.simulate import SimulatedData
from qptlab.qpt.sweep import SweepPoint, SweepReport

CHI_HEADER = ("m", "n", "re", "im")


def _pairs(values: np.ndarray) -> list[tuple[float, float]]:
    return [(float(z.real), float(z.imag)) for z in np.asarray(values).reshape(-1)]


class ConfigRecord(BaseDataModel):
    index: int
    label: str
    input_kind: str = Field(..., description="ket 或 density")
    input_amplitudes: list[tuple[float, float]] = Field(..., description="输入态 (行优先) 的 [re, im]")
    measurement_kind: str = Field(..., description="projective 或 povm")
    outcomes: list[str]


class PlanDump(BaseDataModel):
    scheme: SchemeTag
    n: int
    ancilla_count: int = Field(..., description="方案所需辅助比特数")
    simulated_ancillas: int = Field(..., description="模拟中使用的辅助比特数")
    configurations: int = Field(..., description="模拟的配置数")
    reported_configurations: int = Field(..., description="资源表中的配置数")
    configs: list[ConfigRecord]

    @classmethod
    def from_plan(cls, plan: ExperimentPlan) -> "PlanDump":
        records = []
        for i, c in enumerate(plan.configs):
            is_ket = isinstance(c.input_state, KetVector)
            records.append(ConfigRecord(
                index=i,
                label=c.label,
                input_kind="ket" if is_ket else "density",
                input_amplitudes=_pairs(c.input_state.amplitudes if is_ket else c.input_state.entries),
                measurement_kind="projective" if isinstance(c.measurement, ProjectiveMeasurement) else "povm",
                outcomes=list(c.measurement.outcome_labels),
            ))
        return cls(
            scheme=plan.scheme,
            n=plan.n,
            ancilla_count=plan.ancilla_count,
            simulated_ancillas=plan.simulated_ancillas,
            configurations=len(plan.configs),
            reported_configurations=plan.reported_configurations,
            configs=records,
        )


class SimulationReport(BaseDataModel):
    scheme: SchemeTag
    n: int
    channel: str
    shots: int | None
    seed: int | None
    frequencies: list[OutcomeRecord]
    chi_labels: list[str]
    chi_real: list[list[float]]
    chi_imag: list[list[float]]
    residual_norm: float
    condition_number: float
    rank: int
    physical: bool
    min_eigenvalue: float
    max_error: float | None = Field(default=None, description="与真实 χ 的最大偏差")
    relaxation: RelaxationTimes | None = None

    @classmethod
    def build(
        cls,
        plan: ExperimentPlan,
        channel_name: str,
        data: SimulatedData,
        estimate: ChiEstimate,
        truth: ChiMatrix | None = None,
        relaxation: RelaxationTimes | None = None,
    ) -> "SimulationReport":
        chi = estimate.chi
        return cls(
            scheme=plan.scheme,
            n=plan.n,
            channel=channel_name,
            shots=data.shots,
            seed=data.seed,
            frequencies=[OutcomeRecord.from_distribution(lab, d) for lab, d in zip(data.config_labels, data.distributions)],
            chi_labels=list(chi.labels()),
            chi_real=chi.entries.real.tolist(),
            chi_imag=chi.entries.imag.tolist(),
            residual_norm=estimate.residual_norm,
            condition_number=estimate.condition_number,
            rank=estimate.rank,
            physical=estimate.is_physical,
            min_eigenvalue=chi.min_eigenvalue(),
            max_error=None if truth is None else estimate.max_error(truth),
            relaxation=relaxation,
        )


def chi_to_csv(chi: ChiMatrix) -> str:
    labels = chi.labels()
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CHI_HEADER)
    for i, m in enumerate(labels):
        for j, n in enumerate(labels):
            z = chi.entries[i, j]
            writer.writerow((m, n, fmt_float(z.real), fmt_float(z.imag)))
    return buf.getvalue()


def chi_from_csv(text: str) -> ChiMatrix:
    reader = csv.reader(io.StringIO(text))
    if tuple(next(reader, ())) != CHI_HEADER:
        raise ValueError("χ CSV 表头不符")
    records = list(reader)
    size = int(round(len(records) ** 0.5))
    qubits = int(round(np.log2(size) / 2))
    index = {label: i for i, label in enumerate(pauli_labels(qubits))}
    entries = np.zeros((size, size), dtype=complex)
    for m, n, re, im in records:
        entries[index[m], index[n]] = complex(float(re), float(im))
    return ChiMatrix(entries=entries, basis_dim=2 ** qubits)


SWEEP_HEADER = ("shots", "trials", "rms_error", "element_std")


def sweep_to_csv(report: SweepReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SWEEP_HEADER)
    for p in report.points:
        writer.writerow((p.shots, p.trials, fmt_float(p.rms_error), fmt_float(p.element_std)))
    return buf.getvalue()


def sweep_points_from_csv(text: str) -> list[SweepPoint]:
    reader = csv.reader(io.StringIO(text))
    if tuple(next(reader, ())) != SWEEP_HEADER:
        raise ValueError("精度扫描 CSV 表头不符")
    return [
        SweepPoint(shots=int(shots), trials=int(trials), rms_error=float(rms), element_std=float(std))
        for shots, trials, rms, std in reader
    ]
