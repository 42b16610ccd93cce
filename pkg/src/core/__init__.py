"""
Application orchestration and the command-line front end.

The App runs one command end to end (trace, lam, tune, conn, place) and
writes its JSON and SVG artifacts; cli parses arguments into a RunConfig.
"""

from .app import App, ExitCode, RunConfig
from .cli import build_parser, main

__all__ = [
    "App",
    "ExitCode",
    "RunConfig",
    "build_parser",
    "main",
]
