from .qpt_exceptions import *  # noqa: F403
from .qpt_exceptions import __all__  # noqa: F401
