from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from src.dynamics import ConnectivityReport, LandingResult, RayTrace
from src.errors import TuningError
from src.lamination import Lamination
from src.model import ModelGraph
from src.renormalization import OrderCheck, SemiconjugacyCheck, StrategicReport, TuningData

Pair = Tuple[float, float]


def _pair(z: complex) -> Pair:
    return (z.real, z.imag)


class Metadata(BaseModel):
    """Provenance block written into every artifact"""
    version: str = Field(..., description="lamina version that produced the file")
    command: str = Field(..., description="CLI command")
    inputs: Dict[str, str] = Field(default_factory=dict, description="Command inputs as given")
    tolerances: Dict[str, float] = Field(default_factory=dict, description="Numerical settings in effect")


class CertificateModel(BaseModel):
    """Periodic landing certificate"""
    preperiod: int
    period: int
    point: Pair
    periodic_point: Pair
    multiplier: Pair
    kind: str


class LandingModel(BaseModel):
    """Landing verdict of one ray"""
    status: str = Field(..., description="landed, truncated_budget or truncated_numeric")
    landing_point: Optional[Pair] = Field(None, description="Certified landing point")
    certified_periodic: Optional[CertificateModel] = None
    reason: Optional[str] = None

    @classmethod
    def from_result(cls, result: LandingResult) -> "LandingModel":
        cert = result.certified_periodic
        return cls(
            status=result.status.value,
            landing_point=_pair(result.landing_point) if result.landing_point is not None else None,
            certified_periodic=CertificateModel(
                preperiod=cert.preperiod,
                period=cert.period,
                point=_pair(cert.point),
                periodic_point=_pair(cert.periodic_point),
                multiplier=_pair(cert.multiplier),
                kind=cert.kind.value,
            )
            if cert is not None
            else None,
            reason=result.reason,
        )


class RayTraceModel(BaseModel):
    """Traced ray points from the start potential down"""
    angle: str = Field(..., description="Angle as p/q")
    points: List[Pair] = Field(..., description="Trace points, decreasing potential")
    potentials: List[float]
    status: str

    @classmethod
    def from_trace(cls, trace: RayTrace) -> "RayTraceModel":
        return cls(
            angle=str(trace.angle),
            points=[_pair(z) for z in trace.points],
            potentials=list(trace.potentials),
            status=trace.status.value,
        )


class LaminationModel(BaseModel):
    """Lamination as lists of p/q angle strings"""
    degree: int
    classes: List[List[str]] = Field(..., description="Classes sorted by smallest member")
    warnings: List[str] = Field(default_factory=list)

    @classmethod
    def from_lamination(cls, lam: Lamination) -> "LaminationModel":
        return cls(degree=lam.degree, classes=lam.as_lists(), warnings=list(lam.warnings))

    def to_lamination(self) -> Lamination:
        lam = Lamination.of(self.degree, self.classes)
        return Lamination(lam.degree, lam.classes, tuple(self.warnings))


class ModelNodeModel(BaseModel):
    """Class or gap node of the quotient model"""
    id: str
    kind: str
    angles: List[str]
    arcs: List[Tuple[str, str]] = Field(default_factory=list, description="Gap boundary arcs, counterclockwise")


class ModelGraphModel(BaseModel):
    """Quotient model tree"""
    nodes: List[ModelNodeModel]
    edges: List[Tuple[str, str]]

    @classmethod
    def from_graph(cls, graph: ModelGraph) -> "ModelGraphModel":
        return cls(
            nodes=[
                ModelNodeModel(
                    id=node.id,
                    kind=node.kind,
                    angles=[str(a) for a in node.angles],
                    arcs=[(str(p), str(q)) for p, q in node.arcs],
                )
                for node in graph.nodes
            ],
            edges=list(graph.edges),
        )


class TuningDataModel(BaseModel):
    """Characteristic ray pair and period of a tuning"""
    theta_minus: str
    theta_plus: str
    n: int = Field(..., ge=1)
    d: int = Field(2, ge=2)
    k: int = Field(2, ge=2)

    def to_tuning(self) -> TuningData:
        return TuningData.from_angles(self.theta_minus, self.theta_plus, self.n, self.d, self.k)

    @classmethod
    def from_tuning(cls, t: TuningData) -> "TuningDataModel":
        return cls(**t.to_dict())


class ConnectivityModel(BaseModel):
    """Critical orbit connectivity verdict"""
    verdict: str
    escaping_critical_points: List[Pair]
    iteration_budget_used: int
    critical_points: List[Pair]
    heuristic: bool = Field(True, description="A finite budget never proves connectedness")

    @classmethod
    def from_report(cls, report: ConnectivityReport) -> "ConnectivityModel":
        return cls(
            verdict=report.verdict.value,
            escaping_critical_points=[_pair(z) for z in report.escaping_critical_points],
            iteration_budget_used=report.iteration_budget_used,
            critical_points=[_pair(z) for z in report.critical_points],
        )


class OrderCheckModel(BaseModel):
    """Circular order check with its failing triple"""
    ok: bool
    samples: int
    witness: Optional[List[str]] = None

    @classmethod
    def from_check(cls, check: OrderCheck, samples: int) -> "OrderCheckModel":
        return cls(
            ok=check.ok,
            samples=samples,
            witness=[str(a) for a in check.witness] if check.witness else None,
        )


class SemiconjugacyModel(BaseModel):
    """Return-map semiconjugacy check"""
    ok: bool
    samples: int
    failures: List[str] = Field(default_factory=list)

    @classmethod
    def from_check(cls, check: SemiconjugacyCheck, samples: int) -> "SemiconjugacyModel":
        return cls(ok=check.ok, samples=samples, failures=check.failures)


class StrategicReportModel(BaseModel):
    """Placement report of a tuning on a polynomial"""
    anchor_sample: List[str]
    images: List[str]
    order_preserved: bool
    order_witness: Optional[List[str]] = None
    landing_agreement: float
    window_center: Pair
    window_radius: float
    failures: List[str] = Field(default_factory=list)

    @classmethod
    def from_report(cls, report: StrategicReport) -> "StrategicReportModel":
        return cls(
            anchor_sample=[str(a) for a in report.anchor_sample],
            images=[str(b) for b in report.images],
            order_preserved=report.order_preserved,
            order_witness=[str(a) for a in report.order_witness] if report.order_witness else None,
            landing_agreement=report.landing_agreement,
            window_center=_pair(report.window_center),
            window_radius=report.window_radius,
            failures=report.failures,
        )


class TraceArtifact(BaseModel):
    """Output of the trace command"""
    metadata: Metadata
    trace: RayTraceModel
    landing: LandingModel


class LaminationArtifact(BaseModel):
    """Output of the lam command"""
    metadata: Metadata
    lamination: LaminationModel
    model: ModelGraphModel


class TuneArtifact(BaseModel):
    """Output of the tune command"""
    metadata: Metadata
    tuning: TuningDataModel
    words: Tuple[str, str]
    extended: LaminationModel
    restricted: LaminationModel
    semiconjugacy: Optional[SemiconjugacyModel] = None
    order: Optional[OrderCheckModel] = None


class ConnectivityArtifact(BaseModel):
    """Output of the conn command"""
    metadata: Metadata
    connectivity: ConnectivityModel


class PlacementArtifact(BaseModel):
    """Output of the place command"""
    metadata: Metadata
    tuning: TuningDataModel
    report: StrategicReportModel


def load_tuning(text: str) -> TuningData:
    try:
        return TuningDataModel.model_validate_json(text).to_tuning()
    except ValueError as e:
        raise TuningError(f"Invalid tuning data: {e}")
