# tests/conftest.py
import pytest

from libs.carrier.structure import FinStructure
from libs.config.settings import get_settings
from libs.constructions.generators import gen_affine, gen_modring, gen_powerset


@pytest.fixture(autouse=True)
def _fresh_settings():
    # 环境变量在测试里会被 monkeypatch，缓存要清掉
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def env(monkeypatch):
    """Set an SNR_* variable and drop the cached settings."""

    def _set(name: str, value: str) -> None:
        monkeypatch.setenv(name, value)
        get_settings.cache_clear()

    return _set


@pytest.fixture
def b2() -> FinStructure:
    return gen_powerset(1, 2, 2)


@pytest.fixture
def nand() -> FinStructure:
    return FinStructure.from_entries("nand", 2, 2, [1, 1, 1, 0], 2, [0, 0, 0, 1])


@pytest.fixture
def z3() -> FinStructure:
    return gen_modring(3, 2, 2)


@pytest.fixture
def z4() -> FinStructure:
    return gen_modring(4, 2, 2)


@pytest.fixture
def z6() -> FinStructure:
    return gen_modring(6, 2, 2)


@pytest.fixture
def affine3() -> FinStructure:
    return gen_affine(3)


def small_corpus() -> list[FinStructure]:
    """Structures small enough for exhaustive cross-checks."""
    return [
        gen_powerset(1, 2, 2),
        gen_powerset(2, 2, 3),
        gen_modring(2, 2, 2),
        gen_modring(3, 2, 2),
        gen_modring(4, 2, 2),
        gen_modring(5, 2, 3),
        gen_modring(6, 2, 2),
        gen_modring(4, 3, 2),
    ]
