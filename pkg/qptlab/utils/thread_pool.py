import contextvars
import logging
import threading
from concurrent.futures import Future, ThreadPoolExecutor
from concurrent.futures import TimeoutError as FutureTimeoutError
from typing import Any, Callable, Iterable

from qptlab.config import SweepPoolConfig

logger = logging.getLogger(__name__)


class ThreadPoolError(Exception):
    """线程池基础异常类"""
    pass


class ThreadPoolShutdownError(ThreadPoolError):
    """线程池已关闭异常"""
    pass


class TrialTimeoutError(ThreadPoolError):
    """试验执行超时异常"""
    pass


class TrialPool:
    """扫描试验线程池, 每个任务在提交时的 contextvars 副本中执行"""

    def __init__(self, pool_config: SweepPoolConfig):
        """
        初始化线程池

        Args:
            pool_config: 线程池配置对象
        """
        self._config = pool_config
        self._shutdown = False
        self._shutdown_lock = threading.Lock()
        self._executor = ThreadPoolExecutor(
            max_workers=self._config.max_workers,
            thread_name_prefix=self._config.thread_name_prefix,
        )

    def submit(self, fn: Callable[..., Any], *args: Any, **kwargs: Any) -> Future:
        """
        提交同步任务

        Args:
            fn: 要执行的函数
            *args: 函数位置参数
            **kwargs: 函数关键字参数

        Returns:
            concurrent.futures.Future 对象

        Raises:
            ThreadPoolShutdownError: 线程池已关闭
        """
        with self._shutdown_lock:
            if self._shutdown:
                raise ThreadPoolShutdownError(
                    "Thread pool is shutdown or ready to shutdown,don't submit task")
        ctx = contextvars.copy_context()
        return self._executor.submit(ctx.run, fn, *args, **kwargs)

    def map_ordered(self, fn: Callable[[Any], Any], items: Iterable[Any]) -> list[Any]:
        """
        并发执行并按输入顺序收集结果

        Raises:
            TrialTimeoutError: 单个任务超过 task_timeout
        """
        futures = [self.submit(fn, item) for item in items]
        results = []
        for index, future in enumerate(futures):
            try:
                results.append(future.result(timeout=self._config.task_timeout))
            except FutureTimeoutError as e:
                for pending in futures[index:]:
                    pending.cancel()
                raise TrialTimeoutError(
                    f"Task timeout after {self._config.task_timeout} seconds") from e
        return results

    def shutdown(self, wait: bool = True) -> None:
        """
        关闭线程池

        Args:
            wait: 是否等待任务完成
        """
        with self._shutdown_lock:
            if self._shutdown:
                return
            self._shutdown = True
        self._executor.shutdown(wait=wait, cancel_futures=not wait)
        logger.debug("trial pool shutdown completed")

    def __enter__(self):
        """上下文管理器入口"""
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        """上下文管理器出口"""
        self.shutdown(wait=True)
