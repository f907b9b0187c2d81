from pathlib import Path

import pytest

from tspread.config import Settings
from tspread.ideal import TSpreadIdeal
from tspread.monomial import Monomial

SAMPLES_DIR = Path(__file__).parent.parent / "samples"


def mono(text):
    """'x1x3x5' -> Monomial((1, 3, 5))."""
    return Monomial(tuple(int(i) for i in text.split("x")[1:]))


def monos(*texts):
    return [mono(text) for text in texts]


STABLE8_GENERATORS = (
    "x1x3x5", "x1x3x6", "x1x3x7", "x1x3x8", "x1x4x6", "x1x4x7", "x1x4x8",
    "x2x4x6", "x2x4x7", "x2x4x8",
)

STABLE8_TLEX = (
    "x1x3x5", "x1x3x6", "x1x3x7", "x1x3x8", "x1x4x6", "x1x4x7", "x1x4x8",
    "x1x5x7", "x1x5x8", "x1x6x8", "x2x4x6x8",
)


@pytest.fixture
def samples_dir():
    return SAMPLES_DIR


@pytest.fixture
def default_settings():
    """Default guards, independent of the environment and pyproject.toml."""
    return Settings()


@pytest.fixture
def stable8():
    return TSpreadIdeal.generated_by(8, 2, monos(*STABLE8_GENERATORS))


@pytest.fixture
def obstruction_ideal():
    return TSpreadIdeal.generated_by(8, 2, monos("x2x8", "x2x6", "x2x4"))


@pytest.fixture
def nonstable_ideal():
    return TSpreadIdeal.generated_by(7, 3, monos("x1x7", "x2x6", "x3x6"))
