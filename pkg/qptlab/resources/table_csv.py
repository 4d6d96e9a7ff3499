"""资源表 CSV 读写"""

import csv
import io

from qptlab.common.enums import SchemeTag
from qptlab.resources.accounting import ResourceRow

RESOURCE_HEADER = (
    "scheme", "n", "inputs", "settings", "configurations", "k", "outcomes",
    "ancillas", "gates_per_config", "total_ops", "repetitions", "grand_total",
)

_INT_COLUMNS = RESOURCE_HEADER[1:]


def rows_to_csv(rows: list[ResourceRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(RESOURCE_HEADER)
    for row in rows:
        writer.writerow((row.scheme_column, *(str(getattr(row, col)) for col in _INT_COLUMNS)))
    return buf.getvalue()


def rows_from_csv(text: str) -> list[ResourceRow]:
    reader = csv.reader(io.StringIO(text))
    header = tuple(next(reader, ()))
    if header != RESOURCE_HEADER:
        raise ValueError(f"资源表头不符: {header}")
    rows = []
    for record in reader:
        scheme, _, variant = record[0].partition("/")
        values = {col: int(v) for col, v in zip(_INT_COLUMNS, record[1:])}
        rows.append(ResourceRow(scheme=SchemeTag.parse(scheme), variant=variant or None, **values))
    return rows
