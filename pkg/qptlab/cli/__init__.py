"""命令行前端: plan / simulate / resources / sweep / partition"""

from .main import build_parser, main
from .run_config import RunConfig

__all__ = ["RunConfig", "build_parser", "main"]
