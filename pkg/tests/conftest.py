import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from orbibraid.reflect import RepData


def data_path(name: str) -> Path:
    return Path(__file__).resolve().parents[1] / "src" / "orbibraid" / "data" / name


@pytest.fixture(scope="session")
def sl2_data() -> RepData:
    return RepData.load(data_path("sl2.rep.json"))


@pytest.fixture(scope="session")
def diagram_dir() -> Path:
    return data_path("diagrams")
