import os
import pathlib

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def root():
    return ROOT


@pytest.fixture(scope="session")
def cli():
    """Path to the command-line tool, from MANIFOLD_LANDAU_CLI or the default build tree."""
    path = os.environ.get("MANIFOLD_LANDAU_CLI", str(ROOT / "build" / "tools" / "manifold-landau"))
    if not os.path.exists(path):
        pytest.skip("manifold-landau binary not built")
    return path
