from dataclasses import dataclass, field
from enum import IntEnum
from pathlib import Path
from typing import Dict, List, Optional

from pydantic import BaseModel

from src import __version__
from src.api import (
    ConnectivityArtifact,
    ConnectivityModel,
    LaminationArtifact,
    LaminationModel,
    LandingModel,
    Metadata,
    ModelGraphModel,
    OrderCheckModel,
    PlacementArtifact,
    RayTraceModel,
    SemiconjugacyModel,
    StrategicReportModel,
    TraceArtifact,
    TuneArtifact,
    TuningDataModel,
    load_tuning,
)
from src.circle import Angle, format_word
from src.config import Config
from src.dynamics import (
    LandingStatus,
    PolynomialSpec,
    TracerSettings,
    Verdict,
    connectivity,
    land_angle,
)
from src.errors import LaminationConsistencyError
from src.lamination import (
    AngleClass,
    Lamination,
    build_rational_lamination,
    check_unlinked,
    pullback_closure,
    rational_angles,
)
from src.model import (
    extend_model,
    quotient_model,
    render_svg,
    render_trace_svg,
    restrict_to_tuning_image,
)
from src.renormalization import (
    ANCHOR_MAX_DEN,
    TuningData,
    strategic_report,
    tuning_p,
    verify_order_preserving,
    verify_semiconjugacy,
)
from src.utils import LogLevel, create_logger, set_log_level


class ExitCode(IntEnum):
    OK = 0
    PARSE = 2
    TRUNCATED = 3
    DISCONNECTED = 4
    INCONSISTENT = 5


@dataclass
class RunConfig:
    """Everything a command needs; two equal RunConfigs write identical files"""

    command: str
    output_dir: Path
    stem: str
    poly: Optional[str] = None
    angle: Optional[str] = None
    max_den: int = 12
    depth: int = 30
    seed: int = 0
    threads: int = 1
    settings: TracerSettings = field(default_factory=TracerSettings)
    data: Optional[Path] = None
    sub_lam: Optional[Path] = None
    ambient: Optional[Path] = None
    levels: int = 1
    check: bool = True
    check_max_den: int = ANCHOR_MAX_DEN
    samples: int = 32

    @property
    def json_path(self) -> Path:
        return self.output_dir / f"{self.stem}.json"

    @property
    def svg_path(self) -> Path:
        return self.output_dir / f"{self.stem}.svg"

    def inputs(self) -> Dict[str, str]:
        """Inputs echoed into metadata; parallel width and paths are left out"""
        values = {
            "poly": self.poly,
            "angle": self.angle,
            "max_den": self.max_den,
            "depth": self.depth,
            "seed": self.seed,
            "data": self.data.name if self.data else None,
            "sub_lam": self.sub_lam.name if self.sub_lam else None,
            "ambient": self.ambient.name if self.ambient else None,
            "levels": self.levels,
            "check": self.check,
            "check_max_den": self.check_max_den,
            "samples": self.samples,
        }
        return {key: str(value) for key, value in values.items() if value is not None}


class App:
    def __init__(self, config: Config):
        self.config = config
        set_log_level(LogLevel[config.log_level.value])
        self.logger = create_logger("App", config.debug)

    def run(self, run: RunConfig) -> ExitCode:
        handlers = {
            "trace": self.run_trace,
            "lam": self.run_lamination,
            "tune": self.run_tune,
            "conn": self.run_connectivity,
            "place": self.run_placement,
        }
        if run.command not in handlers:
            raise ValueError(f"Unknown command: {run.command}. Options: {sorted(handlers)}")
        self.logger.step(f"lamina {__version__}: {run.command}")
        return handlers[run.command](run)

    def _metadata(self, run: RunConfig) -> Metadata:
        return Metadata(
            version=__version__,
            command=run.command,
            inputs=run.inputs(),
            tolerances=run.settings.as_dict(),
        )

    def _write(self, path: Path, text: str) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        self.logger.info(f"wrote {path}")

    def _write_json(self, path: Path, artifact: BaseModel) -> None:
        self._write(path, artifact.model_dump_json(indent=2) + "\n")

    def _spec(self, run: RunConfig) -> PolynomialSpec:
        if run.poly is None:
            raise ValueError(f"{run.command} needs --poly")
        return PolynomialSpec.parse(run.poly)

    def run_trace(self, run: RunConfig) -> ExitCode:
        spec = self._spec(run)
        if run.angle is None:
            raise ValueError("trace needs --angle")
        angle = Angle.parse(run.angle)
        self.logger.ray(f"tracing {angle} on {spec.label} to depth {run.depth}")

        result = land_angle(spec, run.depth, run.settings, angle)
        artifact = TraceArtifact(
            metadata=self._metadata(run),
            trace=RayTraceModel.from_trace(result.trace),
            landing=LandingModel.from_result(result),
        )
        self._write_json(run.json_path, artifact)
        self._write(run.svg_path, render_trace_svg(spec, [result.trace]))

        if result.landed:
            self.logger.success(f"ray {angle} lands at {result.landing_point:.9g}")
            return ExitCode.OK
        self.logger.warning(f"ray {angle}: {result.status.value} ({result.reason})")
        if result.status == LandingStatus.TRUNCATED_BUDGET:
            self.logger.warning(
                "A ray that never settles may be accumulating on an irrationally "
                "indifferent cycle, whose finest model is degenerate. Try a larger --depth."
            )
        return ExitCode.TRUNCATED

    def run_lamination(self, run: RunConfig) -> ExitCode:
        spec = self._spec(run)
        lam = build_rational_lamination(spec, run.max_den, run.depth, run.settings, run.threads)
        self.logger.model("building the quotient model")
        model = quotient_model(lam)
        artifact = LaminationArtifact(
            metadata=self._metadata(run),
            lamination=LaminationModel.from_lamination(lam),
            model=ModelGraphModel.from_graph(model),
        )
        self._write_json(run.json_path, artifact)
        self._write(run.svg_path, render_svg(lam, model))
        self.logger.success(
            f"{len(lam)} classes, {len(model.gap_nodes)} gaps, {len(model.cut_points())} cut points"
        )
        return ExitCode.TRUNCATED if lam.warnings else ExitCode.OK

    def _default_ambient(self, t: TuningData, levels: int) -> Lamination:
        if t.theta_minus == t.theta_plus:
            return Lamination(t.d, ())
        generator = AngleClass((t.theta_minus, t.theta_plus))
        return pullback_closure(Lamination(t.d, ()), [generator], levels)

    def _read(self, path: Optional[Path], flag: str) -> str:
        if path is None:
            raise ValueError(f"{flag} is required")
        return path.read_text(encoding="utf-8")

    def run_tune(self, run: RunConfig) -> ExitCode:
        t = load_tuning(self._read(run.data, "--data"))
        sub_lam = LaminationModel.model_validate_json(self._read(run.sub_lam, "--sub-lam")).to_lamination()
        linked = check_unlinked(sub_lam)
        if not linked:
            raise LaminationConsistencyError("Sub-lamination is linked: " + "; ".join(linked.describe()))
        if run.ambient is not None:
            ambient = LaminationModel.model_validate_json(self._read(run.ambient, "--ambient")).to_lamination()
        else:
            ambient = self._default_ambient(t, run.levels)
        self.logger.tuning(f"tuning {t} with words {format_word(t.word_u)}, {format_word(t.word_v)}")

        extended = extend_model(sub_lam, t, ambient)
        model = quotient_model(extended)

        semiconjugacy, order = None, None
        if run.check:
            domain = rational_angles(run.check_max_den)
            images = [tuning_p(t, a) for a in domain]
            semi = verify_semiconjugacy(t, images)
            ordered = verify_order_preserving(t, domain)
            semiconjugacy = SemiconjugacyModel.from_check(semi, len(images))
            order = OrderCheckModel.from_check(ordered, len(domain))
            self.logger.tuning(f"semiconjugacy: {semi.ok}, order preserved: {ordered.ok}")

        artifact = TuneArtifact(
            metadata=self._metadata(run),
            tuning=TuningDataModel.from_tuning(t),
            words=(format_word(t.word_u), format_word(t.word_v)),
            extended=LaminationModel.from_lamination(extended),
            restricted=LaminationModel.from_lamination(restrict_to_tuning_image(extended, t)),
            semiconjugacy=semiconjugacy,
            order=order,
        )
        self._write_json(run.json_path, artifact)
        self._write(run.svg_path, render_svg(extended, model))

        failed: List[str] = []
        if semiconjugacy is not None and not semiconjugacy.ok:
            failed.append("semiconjugacy")
        if order is not None and not order.ok:
            failed.append(f"circular order (witness {', '.join(order.witness or [])})")
        if failed:
            self.logger.error(f"exact checks failed: {'; '.join(failed)}")
            return ExitCode.INCONSISTENT
        self.logger.success(f"extended lamination has {len(extended)} classes")
        return ExitCode.OK

    def run_connectivity(self, run: RunConfig) -> ExitCode:
        spec = self._spec(run)
        report = connectivity(spec, run.settings.connectivity_budget)
        artifact = ConnectivityArtifact(
            metadata=self._metadata(run),
            connectivity=ConnectivityModel.from_report(report),
        )
        self._write_json(run.json_path, artifact)
        if report.verdict != Verdict.CONNECTED:
            self.logger.warning(f"{spec.label}: {report.verdict.value}")
            return ExitCode.DISCONNECTED
        self.logger.success(f"{spec.label}: connected within {report.iteration_budget_used} iterations")
        return ExitCode.OK

    def run_placement(self, run: RunConfig) -> ExitCode:
        spec = self._spec(run)
        t = load_tuning(self._read(run.data, "--data"))
        report = strategic_report(
            spec, t, run.samples, run.depth, run.seed, run.settings, run.threads
        )
        artifact = PlacementArtifact(
            metadata=self._metadata(run),
            tuning=TuningDataModel.from_tuning(t),
            report=StrategicReportModel.from_report(report),
        )
        self._write_json(run.json_path, artifact)
        if not report.order_preserved:
            self.logger.error("connecting function reverses circular order")
            return ExitCode.INCONSISTENT
        self.logger.success(f"landing agreement {report.landing_agreement:.3f}")
        return ExitCode.OK
