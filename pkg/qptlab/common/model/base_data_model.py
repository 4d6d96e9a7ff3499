""" 基础数据模型 基类 """

import numpy as np
from pydantic import BaseModel, ConfigDict


class BaseDataModel(BaseModel):
    """输出文件数据模型基类"""
    model_config = ConfigDict(
        extra="ignore",  # 忽略文件中多余的字段
        strict=False,    # 允许类型转换（如字符串数字转int）
        populate_by_name=True,  # 支持别名映射
        from_attributes=True  # 从属性映射
    )


class FrozenArrayModel(BaseModel):
    """领域值对象基类: 构造后不可变, 允许 numpy 数组字段"""
    model_config = ConfigDict(
        frozen=True,
        extra="forbid",
        arbitrary_types_allowed=True,
    )


def frozen_array(value, dtype=complex) -> np.ndarray:
    """复制为只读数组"""
    arr = np.array(value, dtype=dtype)
    arr.setflags(write=False)
    return arr
