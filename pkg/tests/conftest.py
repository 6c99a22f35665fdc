# tests/conftest.py

import pytest

from app.algebra.monomials import PolyContext, maximal_ideal, power
from app.config import get_settings
from helpers import EX_NO_TEXT, TRIANGLE_TEXT, ideal

SETTINGS_ENV = (
    "MONODEPTH_CACHE_DIR",
    "MONODEPTH_WORKERS",
    "MONODEPTH_LOG_LEVEL",
    "MONODEPTH_LIMIT_CLOSURE",
    "MONODEPTH_LIMIT_HILBERT_BASIS",
    "MONODEPTH_LIMIT_CONE",
    "MONODEPTH_LIMIT_KMAX",
)


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch):
    for name in SETTINGS_ENV:
        monkeypatch.delenv(name, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def ex_no():
    """(x1 x4^3, x2 x5^3, x3 x4 x5 x6): summand, constant depth 3, Rees algebra not CM."""
    return ideal(6, (1, 0, 0, 3, 0, 0), (0, 1, 0, 0, 3, 0), (0, 0, 1, 1, 1, 1))


@pytest.fixture
def hv_iii():
    """(x1 x2 x3, x3 x4 x5, x1 x5 x6)."""
    return ideal(6, (1, 1, 1, 0, 0, 0), (0, 0, 1, 1, 1, 0), (1, 0, 0, 0, 1, 1))


@pytest.fixture
def triangle():
    """(xy, xz, yz)."""
    return ideal(3, (1, 1, 0), (1, 0, 1), (0, 1, 1))


@pytest.fixture
def path_p3():
    return ideal(3, (1, 1, 0), (0, 1, 1))


@pytest.fixture
def max_ideal():
    def build(n, k=1):
        return power(maximal_ideal(PolyContext(n)), k)

    return build


@pytest.fixture
def ex_no_file(tmp_path):
    path = tmp_path / "exno.ideal"
    path.write_text(EX_NO_TEXT)
    return path


@pytest.fixture
def triangle_file(tmp_path):
    path = tmp_path / "triangle.ideal"
    path.write_text(TRIANGLE_TEXT)
    return path
