"""过程层析工作台自定义异常类"""

__all__ = [
    "QPTError",
    "DimensionMismatchError",
    "SizeLimitError",
    "UnphysicalChiError",
    "RankDeficientError",
    "DcqdRankError",
    "PartitionSearchError",
    "MeasurementError",
    "ModelMismatchError",
    "RelaxationIndeterminateError",
    "ChannelParseError",
    "OutputWriteError",
    "InvalidArgumentError",
]


class QPTError(Exception):
    """工作台基础异常类"""

    exit_code: int = 1

    def __init__(self, message: str, exit_code: int | None = None, detail: dict | None = None):
        """
        初始化工作台异常

        Args:
            message: 错误消息
            exit_code: 命令行退出码（可选，默认取类属性）
            detail: 附加诊断数据（可选）
        """
        super().__init__(message)
        self.message = message
        if exit_code is not None:
            self.exit_code = exit_code
        self.detail = detail or {}


class DimensionMismatchError(QPTError):
    """维度不匹配异常"""

    exit_code = 2

    def __init__(self, message: str = "维度不匹配", exit_code: int | None = None, detail: dict | None = None):
        super().__init__(message, exit_code, detail)


class SizeLimitError(QPTError):
    """超出精确模拟规模异常"""

    exit_code = 2

    def __init__(self, message: str = "超出精确模拟规模上限", exit_code: int | None = None, detail: dict | None = None):
        super().__init__(message, exit_code, detail)


class UnphysicalChiError(QPTError):
    """过程矩阵非正定（非物理）异常"""

    def __init__(self, message: str = "过程矩阵不是半正定的", exit_code: int | None = None, detail: dict | None = None):
        super().__init__(message, exit_code, detail)


class RankDeficientError(QPTError):
    """设计矩阵秩亏（方案不完备）异常"""

    exit_code = 3

    def __init__(self, message: str = "设计矩阵秩亏, 方案不完备", exit_code: int | None = None, detail: dict | None = None):
        super().__init__(message, exit_code, detail)


class DcqdRankError(RankDeficientError):
    """DCQD 默认参数未通过秩检查异常"""

    def __init__(self, message: str = "DCQD 配置参数未通过秩检查", exit_code: int | None = None, detail: dict | None = None):
        super().__init__(message, exit_code, detail)


class PartitionSearchError(QPTError):
    """Pauli 群划分构造失败异常"""

    exit_code = 2

    def __init__(self, message: str = "无法构造 Pauli 群的交换划分", exit_code: int | None = None, detail: dict | None = None):
        super().__init__(message, exit_code, detail)


class MeasurementError(QPTError):
    """测量概率不合法异常"""

    def __init__(self, message: str = "测量概率不合法", exit_code: int | None = None, detail: dict | None = None):
        super().__init__(message, exit_code, detail)


class ModelMismatchError(QPTError):
    """过程矩阵与弛豫模型不符异常"""

    def __init__(self, message: str = "过程矩阵不符合阻尼-退相位模型", exit_code: int | None = None, detail: dict | None = None):
        super().__init__(message, exit_code, detail)


class RelaxationIndeterminateError(ModelMismatchError):
    """无衰减, 弛豫时间无法确定异常"""

    def __init__(self, message: str = "没有可观测的衰减, 弛豫时间无法确定", exit_code: int | None = None, detail: dict | None = None):
        super().__init__(message, exit_code, detail)


class ChannelParseError(QPTError):
    """信道文件解析失败异常"""

    exit_code = 4

    def __init__(self, message: str = "信道文件解析失败", exit_code: int | None = None, detail: dict | None = None):
        super().__init__(message, exit_code, detail)


class InvalidArgumentError(QPTError):
    """参数错误异常"""

    exit_code = 2

    def __init__(self, message: str = "参数错误", exit_code: int | None = None, detail: dict | None = None):
        super().__init__(message, exit_code, detail)


class OutputWriteError(QPTError):
    """输出文件写出失败异常"""

    exit_code = 4

    def __init__(self, message: str = "输出文件写出失败", exit_code: int | None = None, detail: dict | None = None):
        super().__init__(message, exit_code, detail)
