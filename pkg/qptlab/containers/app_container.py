from dependency_injector import containers, providers

from qptlab.config import LabConfig
from qptlab.utils.thread_pool import TrialPool


class AppContainer(containers.DeclarativeContainer):
    """应用依赖注入容器."""

    config = providers.Singleton(LabConfig)

    trial_pool = providers.Factory(
        TrialPool,
        pool_config=config.provided.sweep_pool,
    )
