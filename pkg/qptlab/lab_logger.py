from logging.handlers import RotatingFileHandler
import logging
from pathlib import Path

from qptlab.task.traceid import get_traceid

LOGGER_NAME = "qptlab"


class TraceIdFormatter(logging.Formatter):
    def format(self, record):
        record.traceid = get_traceid()
        return super().format(record)


class LabLogger:

    def __init__(self, log_dir: str | Path = "logs", level: str = "DEBUG") -> None:
        self.log_file = Path(log_dir) / "qptlab.log"
        self.level = level

    def _init_lab_logger(self) -> logging.Logger:
        # 1. 获取工作台日志器（统一挂载 Handler，子 logger 透传即可）
        logger = logging.getLogger(LOGGER_NAME)
        logger.setLevel(self.level)
        logger.propagate = False  # 命令输出走 stdout, 日志只进文件

        # 2. 避免重复添加Handler
        if logger.handlers:
            return logger

        # 3. 固定路径的文件Handler（日志轮转，避免文件过大）
        self.log_file.parent.mkdir(parents=True, exist_ok=True)
        file_handler = RotatingFileHandler(
            self.log_file,
            maxBytes=10 * 1024 * 1024,  # 10MB/文件
            backupCount=5,              # 保留5个备份
            encoding="utf-8"
        )
        file_handler.setLevel(self.level)

        # 4. 日志格式（支持traceid）
        formatter = TraceIdFormatter("%(asctime)s - %(name)s - %(levelname)s - [%(traceid)s] - %(message)s")
        file_handler.setFormatter(formatter)

        # 5. 添加Handler
        logger.addHandler(file_handler)
        logger.info(f"工作台日志器初始化完成：{self.log_file.absolute()}")

        return logger

    def get_lab_logger(self) -> logging.Logger:
        return self._init_lab_logger()


def setup_lab_logger(log_dir: str | Path = "logs", level: str = "DEBUG") -> logging.Logger:
    """按配置初始化 qptlab 日志器, 重复调用无副作用"""
    return LabLogger(log_dir, level).get_lab_logger()
