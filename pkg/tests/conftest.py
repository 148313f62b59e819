"""Shared fixtures."""

import pytest
from click.testing import CliRunner

from deltabound.config.settings import EnumerationConfig, Settings
from deltabound.core.pipeline import DeltaBoundPipeline
from deltabound.fano.database import default_database
from deltabound.heights.model import bundled_model


@pytest.fixture
def settings():
    return Settings()


@pytest.fixture
def pipeline(settings):
    return DeltaBoundPipeline(settings=settings)


@pytest.fixture
def config():
    return EnumerationConfig()


@pytest.fixture
def fano_db():
    return default_database()


@pytest.fixture
def p1():
    return bundled_model("p1")


@pytest.fixture
def p2():
    return bundled_model("p2")


@pytest.fixture
def quadric():
    return bundled_model("quadric")


@pytest.fixture
def runner():
    return CliRunner()
