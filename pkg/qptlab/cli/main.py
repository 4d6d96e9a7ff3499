"""qptlab 命令行入口

退出码: 0 成功, 1 内部错误, 2 参数错误 (含规模上限), 3 方案不完备, 4 读写/解析失败.
"""

import argparse
import logging
import sys

from pydantic import ValidationError

from qptlab.cli import commands
from qptlab.cli.commands import COMMANDS
from qptlab.cli.run_config import RunConfig
from qptlab.common.enums import CommandName, Locality, OutputFormat, SchemeTag
from qptlab.common.exceptions import OutputWriteError, QPTError
from qptlab.containers.app_container import AppContainer
from qptlab.lab_logger import setup_lab_logger
from qptlab.task.traceid import traceid_scope
from qptlab.utils.file_op import write_text_lf

logger = logging.getLogger(__name__)

PROG = "qptlab"


class LabArgumentParser(argparse.ArgumentParser):
    """参数错误时只输出一行诊断, 退出码 2"""

    def error(self, message: str):
        _diagnose(message)
        sys.exit(2)


def _diagnose(message: str) -> None:
    sys.stderr.write(f"{PROG}: error: {' '.join(str(message).split())}\n")


def _validation_message(e: ValidationError) -> str:
    err = e.errors()[0]
    loc = ".".join(str(x) for x in err.get("loc", ()))
    return f"{loc}: {err['msg']}" if loc else err["msg"]


def build_parser() -> argparse.ArgumentParser:
    common = LabArgumentParser(add_help=False)
    common.add_argument("--scheme", choices=[s.value for s in SchemeTag], help="过程层析方案")
    common.add_argument("--n", help="系统比特数, INT 或 A..B")
    common.add_argument("--channel", help="预置信道 NAME 或 NAME(PARAMS)")
    common.add_argument("--channel-file", dest="channel_file", help="信道文件 (JSON)")
    common.add_argument("--shots", help="每个配置的抽样次数, sweep 可用逗号分隔多个")
    common.add_argument("--exact", action="store_true", default=None, help="使用精确概率")
    common.add_argument("--seed", type=int, help="随机种子")
    common.add_argument("--epsilon", help="目标精度")
    common.add_argument("--trials", type=int, help="每个抽样次数的重复次数")
    common.add_argument("--out", help="输出路径, 缺省为标准输出")
    common.add_argument(
        "--format", dest="output_format", choices=[f.value for f in OutputFormat], help="输出格式",
    )
    common.add_argument(
        "--relaxation-time", dest="relaxation_time", type=float, help="演化时间, 附带 T1/T2 提取",
    )

    parser = LabArgumentParser(prog=PROG, description="Quantum process tomography workbench")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser(CommandName.PLAN.value, parents=[common], help="输出实验方案")
    sub.add_parser(CommandName.SIMULATE.value, parents=[common], help="模拟并重构 χ")
    resources = sub.add_parser(CommandName.RESOURCES.value, parents=[common], help="资源对比表")
    resources.add_argument("--variants", action="store_true", default=None, help="附加方案变体行")
    resources.add_argument("--locality", choices=[loc.value for loc in Locality], help="门模型")
    sub.add_parser(CommandName.SWEEP.value, parents=[common], help="精度扫描")
    partition = sub.add_parser(CommandName.PARTITION.value, help="Pauli 群交换划分")
    partition.add_argument("--m", type=int, required=True, help="比特数")
    partition.add_argument("--out", help="输出路径, 缺省为标准输出")
    return parser


def run_config_from_args(args: argparse.Namespace, default_seed: int = 0) -> RunConfig:
    values = {k: v for k, v in vars(args).items() if v is not None}
    values.setdefault("seed", default_seed)
    return RunConfig.model_validate(values)


def emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        try:
            write_text_lf(out, text)
        except OSError as e:
            raise OutputWriteError(f"无法写出 {out}: {e}", detail={"path": out}) from e


def run_command(args: argparse.Namespace, container: AppContainer) -> int:
    """执行一条命令并把异常映射为退出码"""
    try:
        config = container.config()
        setup_lab_logger(config.log_dir, config.log_level)
        rc = run_config_from_args(args, config.default_seed)
        logger.info(f"command {rc.command.value}: {rc.model_dump_json(exclude_defaults=True)}")
        emit(COMMANDS[rc.command](rc), rc.out)
        return 0
    except QPTError as e:
        logger.warning(f"{type(e).__name__}: {e.message} {e.detail}")
        _diagnose(e.message)
        return e.exit_code
    except ValidationError as e:
        _diagnose(_validation_message(e))
        return 2
    except Exception as e:
        logger.exception("unexpected error")
        _diagnose(f"内部错误: {e}")
        return 1


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    container = AppContainer()
    container.wire(modules=[commands])
    try:
        with traceid_scope():
            return run_command(args, container)
    finally:
        container.unwire()


if __name__ == "__main__":
    sys.exit(main())
