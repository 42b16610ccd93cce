"""
Pydantic models for the JSON artifacts lamina reads and writes.
"""

from .models import (
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

__all__ = [
    "ConnectivityArtifact",
    "ConnectivityModel",
    "LaminationArtifact",
    "LaminationModel",
    "LandingModel",
    "Metadata",
    "ModelGraphModel",
    "OrderCheckModel",
    "PlacementArtifact",
    "RayTraceModel",
    "SemiconjugacyModel",
    "StrategicReportModel",
    "TraceArtifact",
    "TuneArtifact",
    "TuningDataModel",
    "load_tuning",
]
