import os
import random
import sys
from typing import Callable

import pytest
from fastapi import FastAPI
from fastapi.testclient import TestClient

# Add the app directory to the path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from app.core import setup_logging
from app.main import app as fastapi_app
from app.models import QMatrix, QuintInput, parse_quaternion
from app.services.selftest import micro_instances

# Setup test logging
setup_logging(json_lines=False)

SEEDS = list(range(12))


def qm(rows: list[list[str | int]], cols: int | None = None) -> QMatrix:
    """Matrix from nested literals such as [["1", "i"], ["0", "1/2*k"]]."""
    return QMatrix.from_rows([[parse_quaternion(str(e)) for e in r] for r in rows], cols=cols)


@pytest.fixture
def app() -> FastAPI:
    """Return the FastAPI app for testing."""
    return fastapi_app


@pytest.fixture
def client(app: FastAPI) -> TestClient:
    """Return a test client for the FastAPI app."""
    return TestClient(app)


@pytest.fixture
def matrix() -> Callable[..., QMatrix]:
    return qm


@pytest.fixture
def micro() -> dict[str, QuintInput]:
    """The 1x1 instances: ijk (X = 1 solves iXj = k), all-ones, forced-x."""
    return micro_instances()


@pytest.fixture(params=SEEDS)
def rng(request: pytest.FixtureRequest) -> random.Random:
    return random.Random(request.param)
