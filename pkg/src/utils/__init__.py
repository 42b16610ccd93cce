"""
Utility functions and classes
"""

from .disjoint_set import DisjointSet
from .logger import Logger, LogLevel, create_logger, set_log_level
from .parallel import parallel_map

__all__ = [
    "DisjointSet",
    "LogLevel",
    "Logger",
    "create_logger",
    "parallel_map",
    "set_log_level",
]
