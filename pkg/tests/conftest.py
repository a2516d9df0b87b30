"""Shared fixtures: every test gets its own config directory and fresh singletons."""

import logging
import random

import pytest

from spinfermion.core import check_loader, config_manager, logger


@pytest.fixture(autouse=True)
def isolated_home(tmp_path, monkeypatch):
    home = tmp_path / "spinfermion-home"
    monkeypatch.setenv("SPINFERMION_HOME", str(home))
    monkeypatch.delenv("SPINFERMION_MAX_L", raising=False)
    monkeypatch.setattr(config_manager, "_config_manager", None)
    monkeypatch.setattr(check_loader, "_check_loader", None)
    return home


@pytest.fixture(autouse=True)
def fresh_logger(monkeypatch):
    # handlers hold the stderr of the test that created them
    logging.getLogger("spinfermion").handlers.clear()
    monkeypatch.setattr(logger, "_app_logger", None)
    yield
    logging.getLogger("spinfermion").handlers.clear()


@pytest.fixture
def rng():
    return random.Random(20240917)
