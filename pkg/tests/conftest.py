"""
Test configuration and fixtures for the lamina project.

This file is automatically discovered by pytest and provides shared
configuration constants and fixtures for all test modules.
"""

import json
import math

import pytest

from src.config import Config, LogLevel
from src.dynamics import PolynomialSpec
from src.lamination import Lamination
from src.renormalization import TuningData


# Test Configuration Constants
class TestConfig:
    """Test configuration constants to avoid hardcoded values in tests"""

    # Quadratic parameters
    BASILICA_C = -1
    RABBIT_C = complex(-0.122561, 0.744862)
    TUNED_BASILICA_C = -1.3107
    CHEBYSHEV_C = -2
    DISCONNECTED_C = -5

    # Known landing points
    BASILICA_ALPHA = (1 - math.sqrt(5)) / 2
    BASILICA_BETA = (1 + math.sqrt(5)) / 2

    # Tracing
    DEPTH = 30
    SHALLOW_DEPTH = 3
    RADIAL_DEPTH = 12
    RADIAL_TOLERANCE = 1e-9

    # Tunings as (theta_minus, theta_plus, period)
    BASILICA_TUNING = ("1/3", "2/3", 2)
    CORRUPTED_TUNING = ("2/3", "1/3", 2)

    # Basilica leaves with denominator <= 12
    BASILICA_CLASSES = [
        ["1/12", "11/12"],
        ["1/6", "5/6"],
        ["1/3", "2/3"],
        ["5/12", "7/12"],
    ]


# Shared Fixtures
@pytest.fixture
def test_config():
    """Provide test configuration constants"""
    return TestConfig


@pytest.fixture
def z_squared():
    return PolynomialSpec.quadratic(0)


@pytest.fixture
def z_cubed():
    return PolynomialSpec((1, 0, 0, 0))


@pytest.fixture
def basilica():
    return PolynomialSpec.quadratic(TestConfig.BASILICA_C)


@pytest.fixture
def rabbit():
    return PolynomialSpec.quadratic(TestConfig.RABBIT_C)


@pytest.fixture
def basilica_tuning():
    return TuningData.from_angles(*TestConfig.BASILICA_TUNING)


@pytest.fixture
def corrupted_tuning():
    return TuningData.from_angles(*TestConfig.CORRUPTED_TUNING)


@pytest.fixture
def identity_tuning():
    return TuningData.identity()


@pytest.fixture
def basilica_leaf():
    """The single leaf {1/3, 2/3}"""
    return Lamination.of(2, [["1/3", "2/3"]])


@pytest.fixture
def basilica_lamination():
    return Lamination.of(2, TestConfig.BASILICA_CLASSES)


# CLI fixtures
@pytest.fixture
def app_config(tmp_path):
    """Config writing into a temporary output directory"""
    return Config(
        log_level=LogLevel.WARNING,
        threads=1,
        output_dir=str(tmp_path / "out"),
        max_den=6,
        depth=TestConfig.DEPTH,
        seed=0,
        connectivity_budget=500,
    )


@pytest.fixture
def write_json(tmp_path):
    """Write a JSON document into tmp_path and return its path"""

    def _write(name: str, payload) -> str:
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return str(path)

    return _write
