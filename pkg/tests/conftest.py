import os
from pathlib import Path

import pytest
from hypothesis import settings

from presets.families import upper_mccool
from tower.spec import TowerSpec

DATA_DIR = Path(__file__).resolve().parent.parent / "data" / "towers"

settings.register_profile("default", deadline=None, max_examples=200)
settings.register_profile("slow", deadline=None, max_examples=2000)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def mccool3() -> TowerSpec:
    """Ranks (1, 2): g1.1 conjugates g2.1 by g2.2"""
    return upper_mccool(3).tower
