import os
from dataclasses import dataclass
from enum import Enum


class LogLevel(Enum):
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"


def _int_env(name: str, default: int, minimum: int) -> int:
    raw = os.getenv(name, str(default)).strip()
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"Invalid {name}: {raw}. Options: an integer >= {minimum}")
    if value < minimum:
        raise ValueError(f"Invalid {name}: {raw}. Options: an integer >= {minimum}")
    return value


@dataclass
class Config:
    log_level: LogLevel
    threads: int
    output_dir: str
    max_den: int
    depth: int
    seed: int
    connectivity_budget: int

    def __post_init__(self):
        if not self.output_dir:
            raise ValueError("LAMINA_OUTPUT_DIR must not be empty")
        if self.threads < 1:
            raise ValueError(f"threads must be >= 1, got {self.threads}")
        if self.max_den < 2:
            raise ValueError(f"max_den must be >= 2, got {self.max_den}")
        if self.depth < 1:
            raise ValueError(f"depth must be >= 1, got {self.depth}")

    @classmethod
    def from_env(cls) -> "Config":
        log_level_str = os.getenv("LOG_LEVEL", "INFO").upper()
        try:
            log_level = LogLevel(log_level_str)
        except ValueError:
            raise ValueError(
                f"Invalid LOG_LEVEL: {log_level_str}. "
                f"Options: {[l.value for l in LogLevel]}"
            )

        return cls(
            log_level=log_level,
            threads=_int_env("LAMINA_THREADS", 1, 1),
            output_dir=os.getenv("LAMINA_OUTPUT_DIR", "out"),
            max_den=_int_env("LAMINA_MAX_DEN", 12, 2),
            depth=_int_env("LAMINA_DEPTH", 30, 1),
            seed=_int_env("LAMINA_SEED", 0, 0),
            connectivity_budget=_int_env("LAMINA_CONNECTIVITY_BUDGET", 500, 1),
        )

    @property
    def debug(self) -> bool:
        return self.log_level == LogLevel.DEBUG
