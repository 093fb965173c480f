import pytest

from conic_floors.cache import InvariantCache
from conic_floors.config import CACHE_ENV_VAR
from conic_floors.homology import MultiSeq, SurfaceClass, SurfaceModel
from conic_floors.schema import engine_stats


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    """Keep the persistent cache out of the project tree; the in-memory memo stays warm"""
    monkeypatch.setenv(CACHE_ENV_VAR, str(tmp_path / "invariants.json"))
    InvariantCache.verify = False
    engine_stats.reset()
    yield
    InvariantCache.verify = False


@pytest.fixture
def tilde():
    def make(text: str, n: int) -> SurfaceClass:
        return SurfaceClass.parse(text, SurfaceModel.tilde(n))

    return make


@pytest.fixture
def absolute():
    def make(text: str, n: int) -> SurfaceClass:
        return SurfaceClass.parse(text, SurfaceModel.absolute(n))

    return make


@pytest.fixture
def tilde81():
    def make(text: str) -> SurfaceClass:
        return SurfaceClass.parse(text, SurfaceModel.tilde81())

    return make


@pytest.fixture
def seq():
    return MultiSeq.parse
