from .base_data_model import BaseDataModel, FrozenArrayModel, frozen_array
__all__ = ["BaseDataModel", "FrozenArrayModel", "frozen_array"]
