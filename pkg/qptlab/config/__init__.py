from .lab_config import LabConfig
from .tolerance_config import TOLERANCES, SweepPoolConfig, TolerancesConfig

__all__ = ["TOLERANCES", "LabConfig", "SweepPoolConfig", "TolerancesConfig"]
