"""pytest运行插件 - 每次运行一个日志目录, 每个用例一个 traceid"""

import logging
import uuid
from pathlib import Path
from typing import Optional

import pytest

from qptlab.lab_logger import LOGGER_NAME, TraceIdFormatter
from qptlab.task.traceid import traceid_scope


class RunPlugin:
    """pytest运行插件"""

    def __init__(self, config: pytest.Config):
        self.config = config
        self.run_id: Optional[str] = None

    def _get_run_id(self) -> str:
        """命令行 --run-id 优先, 否则随机生成"""
        if self.run_id:
            return self.run_id
        run_id = self.config.getoption("--run-id", default=None) or str(uuid.uuid4())
        self.config.run_id = run_id
        self.run_id = run_id
        return run_id

    def _setup_logging(self) -> None:
        root_logger = logging.getLogger()
        root_logger.setLevel(logging.DEBUG)
        root_logger.handlers.clear()
        root_logger.addHandler(self.get_file_handler(self.get_pytest_file_log_path()))

        # qptlab 日志在测试中写入本次运行的日志文件, 不经过轮转文件
        lab_logger = logging.getLogger(LOGGER_NAME)
        lab_logger.setLevel(logging.DEBUG)
        lab_logger.handlers.clear()
        lab_logger.addHandler(self.get_file_handler(self.get_log_dir() / "qptlab.log"))

        test_logger = logging.getLogger("test")
        test_logger.setLevel(logging.DEBUG)
        test_logger.handlers.clear()
        test_logger.addHandler(self.get_console_handler())
        test_logger.propagate = True

    def get_console_handler(self) -> logging.Handler:
        console_handler = logging.StreamHandler()
        console_handler.setLevel(logging.INFO)
        console_handler.setFormatter(logging.Formatter(
            "%(asctime)s - %(name)s - %(levelname)s - [%(filename)s:%(lineno)d] - %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S",
        ))
        return console_handler

    def get_file_handler(self, filepath: Path) -> logging.Handler:
        filepath.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(filepath, encoding="utf-8")
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(
            TraceIdFormatter("%(asctime)s - %(name)s - %(levelname)s - [%(traceid)s] - %(message)s")
        )
        return file_handler

    def get_log_dir(self) -> Path:
        return Path("logs") / self._get_run_id()

    def get_pytest_file_log_path(self) -> Path:
        return self.get_log_dir() / "pytest.log"

    @pytest.hookimpl(hookwrapper=True)
    def pytest_runtest_call(self, item: pytest.Item):
        with traceid_scope(item.nodeid):
            yield
