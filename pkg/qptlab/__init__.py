"""量子过程层析工作台"""

__version__ = "0.1.0"
