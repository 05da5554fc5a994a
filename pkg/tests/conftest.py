from collections.abc import AsyncGenerator
from pathlib import Path

import pytest
from click.testing import CliRunner
from httpx import ASGITransport, AsyncClient

from app.app import app
from evaluation.models import ConfusionMatrix

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures() -> Path:
    return FIXTURES


@pytest.fixture
def imbalanced() -> ConfusionMatrix:
    """n = (10, 20, 70) with diagonal (1, 4, 60)."""
    return ConfusionMatrix(labels=("A", "B", "C"), counts=((1, 5, 4), (6, 4, 10), (5, 5, 60)))


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
async def client() -> AsyncGenerator[AsyncClient]:
    """Get test client."""
    async with AsyncClient(
        transport=ASGITransport(app=app),
        base_url="http://testserver",
    ) as client:
        yield client
