"""Pytest conftest: shared fixtures for the mubplane test suite."""
from pathlib import Path

import numpy as np
import pytest

from mubplane.algebra.field import FieldSpec, build_field
from mubplane.geometry.incidence import IncidenceStructure
from mubplane.geometry.pg2 import build_pg2


@pytest.fixture(autouse=True)
def isolated_config(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    """Run every test away from any real mubplane.toml."""
    monkeypatch.delenv("MUBPLANE_CONFIG", raising=False)
    monkeypatch.chdir(tmp_path)
    return tmp_path


@pytest.fixture
def gf4() -> FieldSpec:
    return build_field(2, 2)


@pytest.fixture
def fano() -> IncidenceStructure:
    """PG(2, 2): 7 points, 7 lines."""
    return build_pg2(build_field(2, 1))


@pytest.fixture
def pg2_3() -> IncidenceStructure:
    return build_pg2(build_field(3, 1))


@pytest.fixture
def near_pencil() -> IncidenceStructure:
    """Points 0..3 on one line, point 4 joined to each of them by a 2-point line."""
    return IncidenceStructure.from_lines(5, [[0, 1, 2, 3], [0, 4], [1, 4], [2, 4], [3, 4]])


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)


def pytest_collection_modifyitems(items: list) -> None:
    # Slow tests last so quick failures surface first.
    items.sort(key=lambda item: item.get_closest_marker("slow") is not None)
