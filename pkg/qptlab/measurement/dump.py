"""结果分布转储: 每个配置一条记录 (标签、概率、计数)"""

import csv
import io

from pydantic import Field

from qptlab.common.model import BaseDataModel
from qptlab.measurement.distribution import OutcomeDistribution

FREQUENCY_HEADER = ("config", "outcome", "probability", "frequency", "count")


def fmt_float(value: float) -> str:
    """17 位有效数字"""
    return format(float(value), ".17g")


class OutcomeRecord(BaseDataModel):
    config: str = Field(..., description="配置标签")
    outcomes: list[str] = Field(..., description="结果标签")
    probabilities: list[float] = Field(..., description="精确概率")
    frequencies: list[float] = Field(..., description="抽样频率, 精确模式下等于概率")
    counts: list[int] | None = Field(default=None, description="抽样计数")
    shots: int | None = Field(default=None, description="抽样次数")

    @classmethod
    def from_distribution(cls, config: str, dist: OutcomeDistribution) -> "OutcomeRecord":
        return cls(
            config=config,
            outcomes=list(dist.labels),
            probabilities=[float(p) for p in dist.probabilities],
            frequencies=[float(f) for f in dist.frequencies()],
            counts=None if dist.counts is None else [int(c) for c in dist.counts],
            shots=dist.shots,
        )


def records_to_csv(records: list[OutcomeRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(FREQUENCY_HEADER)
    for r in records:
        for i, label in enumerate(r.outcomes):
            count = "" if r.counts is None else str(r.counts[i])
            writer.writerow((r.config, label, fmt_float(r.probabilities[i]), fmt_float(r.frequencies[i]), count))
    return buf.getvalue()


def records_from_csv(text: str) -> list[OutcomeRecord]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if tuple(header or ()) != FREQUENCY_HEADER:
        raise ValueError(f"频率表头不符: {header}")
    grouped: dict[str, dict] = {}
    for config, outcome, prob, freq, count in reader:
        rec = grouped.setdefault(config, {"config": config, "outcomes": [], "probabilities": [],
                                          "frequencies": [], "counts": []})
        rec["outcomes"].append(outcome)
        rec["probabilities"].append(float(prob))
        rec["frequencies"].append(float(freq))
        rec["counts"].append(int(count) if count else None)
    records = []
    for rec in grouped.values():
        counts = rec.pop("counts")
        if any(c is not None for c in counts):
            rec["counts"], rec["shots"] = counts, sum(counts)
        records.append(OutcomeRecord(**rec))
    return records
