"""
Command-line front end.

    lamina trace --poly c=-1 --angle 1/3
    lamina lam   --poly c=-1 --max-den 12
    lamina tune  --data tuning.json --sub-lam sub.json --check
    lamina conn  --poly c=-5
    lamina place --poly c=-1.3107 --data tuning.json --samples 32

Exit codes: 0 success, 2 bad input, 3 truncated landing (partial output is
still written), 4 disconnected Julia set, 5 crossing, consistency or exact
check failure.
"""

import argparse
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv
from pydantic import ValidationError

from src.config import Config
from src.dynamics import DEFAULT_SETTINGS, TracerSettings
from src.errors import (
    AngleError,
    CriticalPointError,
    DisconnectedJuliaSetError,
    LaminationConsistencyError,
    PolynomialParseError,
    PullbackAmbiguityError,
    TuningConsistencyError,
    TuningError,
    UndeterminedLandingError,
)
from src.utils import create_logger
from .app import App, ExitCode, RunConfig

logger = create_logger("cli")

COMMANDS = ("trace", "lam", "tune", "conn", "place")


def _tolerance_flags(config: Config) -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_argument_group("numerical settings")
    group.add_argument("--newton-tol", type=float, default=DEFAULT_SETTINGS.newton_tol)
    group.add_argument("--max-newton-iter", type=int, default=DEFAULT_SETTINGS.max_newton_iter)
    group.add_argument("--substeps", type=int, default=DEFAULT_SETTINGS.substeps)
    group.add_argument("--start-power", type=int, default=DEFAULT_SETTINGS.start_power)
    group.add_argument("--landing-tol", type=float, default=DEFAULT_SETTINGS.landing_tol)
    group.add_argument("--co-landing-tol", type=float, default=DEFAULT_SETTINGS.co_landing_tol)
    group.add_argument("--certification-tol", type=float, default=DEFAULT_SETTINGS.certification_tol)
    group.add_argument("--tail-samples", type=int, default=DEFAULT_SETTINGS.tail_samples)
    group.add_argument("--connectivity-budget", type=int, default=config.connectivity_budget)

    run = parent.add_argument_group("run")
    run.add_argument("--out", type=Path, default=None, help="JSON output path; the SVG goes next to it")
    run.add_argument("--threads", type=int, default=None, help="Parallel width, overrides LAMINA_THREADS")
    return parent


def build_parser(config: Config) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lamina",
        description="Rational laminations and pinched-disk models of polynomial Julia sets",
    )
    shared = _tolerance_flags(config)
    commands = parser.add_subparsers(dest="command", required=True)

    trace = commands.add_parser("trace", parents=[shared], help="Trace and land one external ray")
    trace.add_argument("--poly", required=True, help='"c=-1" or coefficients "1,0,-1"')
    trace.add_argument("--angle", required=True, help="Rational angle p/q")
    trace.add_argument("--depth", type=int, default=config.depth)

    lam = commands.add_parser("lam", parents=[shared], help="Build the rational lamination and its model")
    lam.add_argument("--poly", required=True)
    lam.add_argument("--max-den", type=int, default=config.max_den)
    lam.add_argument("--depth", type=int, default=config.depth)

    tune = commands.add_parser("tune", parents=[shared], help="Extend a small model through a tuning")
    tune.add_argument("--data", type=Path, required=True, help="Tuning data JSON")
    tune.add_argument("--sub-lam", type=Path, required=True, help="Small lamination JSON")
    tune.add_argument("--ambient", type=Path, default=None, help="Ambient lamination JSON")
    tune.add_argument("--levels", type=int, default=1, help="Pullback levels of the default ambient")
    tune.add_argument("--check", action=argparse.BooleanOptionalAction, default=True)
    tune.add_argument("--check-max-den", type=int, default=64)

    conn = commands.add_parser("conn", parents=[shared], help="Connectivity verdict of the Julia set")
    conn.add_argument("--poly", required=True)

    place = commands.add_parser("place", parents=[shared], help="Strategic placement report of a tuning")
    place.add_argument("--poly", required=True)
    place.add_argument("--data", type=Path, required=True)
    place.add_argument("--samples", type=int, default=32)
    place.add_argument("--depth", type=int, default=config.depth)
    place.add_argument("--seed", type=int, default=config.seed)
    return parser


def run_config_from_args(args: argparse.Namespace, config: Config) -> RunConfig:
    settings = TracerSettings(
        newton_tol=args.newton_tol,
        max_newton_iter=args.max_newton_iter,
        substeps=args.substeps,
        start_power=args.start_power,
        landing_tol=args.landing_tol,
        co_landing_tol=args.co_landing_tol,
        certification_tol=args.certification_tol,
        tail_samples=args.tail_samples,
        connectivity_budget=args.connectivity_budget,
    )
    threads = args.threads if args.threads is not None else config.threads
    if threads < 1:
        raise ValueError(f"--threads must be >= 1, got {threads}")
    if args.out is not None:
        output_dir, stem = args.out.parent, args.out.stem
    else:
        output_dir, stem = Path(config.output_dir), args.command

    return RunConfig(
        command=args.command,
        output_dir=output_dir,
        stem=stem,
        poly=getattr(args, "poly", None),
        angle=getattr(args, "angle", None),
        max_den=getattr(args, "max_den", config.max_den),
        depth=getattr(args, "depth", config.depth),
        seed=getattr(args, "seed", config.seed),
        threads=threads,
        settings=settings,
        data=getattr(args, "data", None),
        sub_lam=getattr(args, "sub_lam", None),
        ambient=getattr(args, "ambient", None),
        levels=getattr(args, "levels", 1),
        check=getattr(args, "check", True),
        check_max_den=getattr(args, "check_max_den", 64),
        samples=getattr(args, "samples", 32),
    )


def main(argv: Optional[List[str]] = None, config: Optional[Config] = None) -> int:
    if config is None:
        load_dotenv()
        config = Config.from_env()
    args = build_parser(config).parse_args(argv)
    try:
        run = run_config_from_args(args, config)
        return int(App(config).run(run))
    except DisconnectedJuliaSetError as e:
        logger.error(
            f"{e} Finest finitely Suslinian models, which describe each component "
            "of a disconnected Julia set, are not implemented."
        )
        return int(ExitCode.DISCONNECTED)
    except (
        LaminationConsistencyError,
        PullbackAmbiguityError,
        TuningConsistencyError,
        UndeterminedLandingError,
    ) as e:
        logger.error(str(e))
        return int(ExitCode.INCONSISTENT)
    except CriticalPointError as e:
        logger.error(str(e))
        return int(ExitCode.TRUNCATED)
    except (AngleError, PolynomialParseError, TuningError, ValidationError, ValueError, OSError) as e:
        logger.error(str(e))
        return int(ExitCode.PARSE)
