"""Shared fixtures: paths into the bundled corpus and parsed example systems."""

from pathlib import Path

import pytest

from src.parsers.system_parser import load_system


CORPUS = Path(__file__).resolve().parent.parent / "corpus"
GOLDEN = CORPUS / "golden"
GRAMMARS = CORPUS / "grammars"
MACHINES = CORPUS / "machines"


@pytest.fixture(scope="session")
def pi1():
    return load_system(CORPUS / "pi1.aps")


@pytest.fixture(scope="session")
def pi2():
    return load_system(CORPUS / "pi2.aps")


@pytest.fixture(scope="session")
def pi5():
    return load_system(CORPUS / "pi5.aps")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running corpus comparisons (deselect with -m 'not slow')")
