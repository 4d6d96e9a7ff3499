"""随机 CP 映射生成 (测试与扫描用)"""

import numpy as np

from qptlab.core.channels import QuantumChannel


def random_isometry_kraus(qubit_count: int, kraus_count: int, rng: np.random.Generator) -> np.ndarray:
    """随机等距映射切分得到保迹 Kraus 组, 形状 (r, d, d)"""
    d = 2 ** qubit_count
    g = rng.normal(size=(kraus_count * d, d)) + 1j * rng.normal(size=(kraus_count * d, d))
    q, _ = np.linalg.qr(g)
    return q.reshape(kraus_count, d, d)


def random_contraction(d: int, max_deficit: float, rng: np.random.Generator) -> np.ndarray:
    """C†C 的本征值落在 [1 - max_deficit, 1] 的随机收缩"""
    g = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    u, _ = np.linalg.qr(g)
    keep = 1.0 - rng.uniform(0.0, max_deficit, size=d)
    return u @ np.diag(np.sqrt(keep)) @ u.conj().T


def random_channel(
    qubit_count: int,
    kraus_count: int,
    rng: np.random.Generator,
    max_trace_deficit: float = 0.0,
) -> QuantumChannel:
    """随机 CP 映射; max_trace_deficit > 0 时为非保迹映射"""
    if not 0.0 <= max_trace_deficit < 1.0:
        raise ValueError("max_trace_deficit 必须位于 [0, 1)")
    ops = random_isometry_kraus(qubit_count, kraus_count, rng)
    if max_trace_deficit > 0:
        c = random_contraction(2 ** qubit_count, max_trace_deficit, rng)
        ops = np.array([k @ c for k in ops])
    return QuantumChannel(kraus_operators=list(ops), qubit_count=qubit_count)
