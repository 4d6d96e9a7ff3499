"""资源核算与对比表"""

from .accounting import (
    OUTCOME_EXPONENT,
    PRODUCT_MUB_VARIANT,
    GateModel,
    ResourceRow,
    ResourceTable,
    comparison_table,
    product_mub_row,
    repetitions_for_precision,
    resource_row,
)
from .table_csv import RESOURCE_HEADER, rows_from_csv, rows_to_csv

__all__ = [
    "OUTCOME_EXPONENT",
    "PRODUCT_MUB_VARIANT",
    "RESOURCE_HEADER",
    "GateModel",
    "ResourceRow",
    "ResourceTable",
    "comparison_table",
    "product_mub_row",
    "repetitions_for_precision",
    "resource_row",
    "rows_from_csv",
    "rows_to_csv",
]
