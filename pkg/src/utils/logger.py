import sys
from datetime import datetime
from enum import Enum


class LogLevel(Enum):
    DEBUG = 0
    INFO = 1
    WARNING = 2
    ERROR = 3


_global_level = LogLevel.INFO


class Logger:
    """
    Custom logger that is compatible with python's logging interface
    Writes to stderr so JSON/SVG artifacts on stdout stay clean
    """

    def __init__(self, name: str = "lamina", debug_enabled: bool = False):
        self.name = name
        self.min_level = LogLevel.DEBUG if debug_enabled else None

    @property
    def level(self) -> LogLevel:
        return self.min_level or _global_level

    def _log(self, level: LogLevel, message: str, emoji: str = "") -> None:
        """Private method to handle logging"""
        if level.value < self.level.value:
            return
        timestamp = datetime.now().strftime("%H:%M:%S")
        prefix = f"[{timestamp}] {emoji}" if emoji else f"[{timestamp}]"
        print(f"{prefix} {self.name}: {message}", file=sys.stderr)

    def debug(self, message: str) -> None:
        """Debug messages - only shown when debug enabled"""
        self._log(LogLevel.DEBUG, message, "🔍")

    def info(self, message: str) -> None:
        self._log(LogLevel.INFO, message, "ℹ️")

    def warning(self, message: str) -> None:
        self._log(LogLevel.WARNING, message, "⚠️")

    def error(self, message: str) -> None:
        self._log(LogLevel.ERROR, message, "❌")

    # Convenience methods (delegate to standard methods for compatibility)
    def success(self, message: str) -> None:
        """Success/completion messages"""
        self.info(f"✅ {message}")

    def step(self, message: str) -> None:
        """Process step messages"""
        self.info(f"🔧 {message}")

    def ray(self, message: str) -> None:
        """Ray tracing and landing messages"""
        self.info(f"🌀 {message}")

    def lamination(self, message: str) -> None:
        self.info(f"🧵 {message}")

    def model(self, message: str) -> None:
        """Quotient model and rendering messages"""
        self.info(f"🥯 {message}")

    def tuning(self, message: str) -> None:
        self.info(f"🎛️ {message}")


def set_log_level(level: LogLevel) -> None:
    """Set the level every logger without a local override follows"""
    global _global_level
    _global_level = level


def create_logger(name: str = "lamina", debug: bool = False) -> Logger:
    """Create a logger instance"""
    return Logger(name, debug)
