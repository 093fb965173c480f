import json

from conic_floors.cache import CACHE_FORMAT, InvariantCache
from conic_floors.homology import MultiSeq, SurfaceClass, SurfaceModel
from conic_floors.relative.complex import InvariantQuery, gw_relative
from conic_floors.schema import engine_stats

CUBICS = InvariantQuery(d=SurfaceClass.line(SurfaceModel.tilde(0), 3), beta=MultiSeq.unit(1, 6))


def test_memo_counts_hits():
    calls = []

    @InvariantCache("test-square", key=lambda x: str(x))
    def square(x):
        calls.append(x)
        return x * x

    assert square(7) == 49
    before = engine_stats.cache_hits
    assert square(7) == 49
    assert calls == [7]
    assert engine_stats.cache_hits == before + 1


def test_save_and_load(tmp_path):
    path = tmp_path / "cache.json"
    assert gw_relative(CUBICS) == 12
    InvariantCache.save(path)
    document = json.loads(path.read_text())
    assert document["format"] == CACHE_FORMAT
    assert str(CUBICS) in document["entries"]["gw_rel"]

    InvariantCache.clear()
    InvariantCache.load(path)
    engine_stats.reset()
    assert gw_relative(CUBICS) == 12
    assert engine_stats.diagrams == 0
    assert engine_stats.cache_hits > 0


def test_corrupted_file_is_ignored(tmp_path):
    path = tmp_path / "cache.json"
    path.write_text("{not json")
    InvariantCache.load(path)
    assert gw_relative(CUBICS) == 12


def test_unknown_format_is_ignored(tmp_path):
    path = tmp_path / "cache.json"
    path.write_text(json.dumps({"format": CACHE_FORMAT + 1, "entries": {"gw_rel": {str(CUBICS): 5}}}))
    InvariantCache.load(path)
    assert gw_relative(CUBICS) == 12


def test_verify_recomputes_tampered_entries(tmp_path):
    path = tmp_path / "cache.json"
    path.write_text(json.dumps({"format": CACHE_FORMAT, "entries": {"gw_rel": {str(CUBICS): 5}}}))
    InvariantCache.clear()
    InvariantCache.load(path)
    assert gw_relative(CUBICS) == 5

    InvariantCache.verify = True
    assert gw_relative(CUBICS) == 12
    InvariantCache.verify = False
    assert gw_relative(CUBICS) == 12


def test_save_merges_with_existing_entries(tmp_path):
    path = tmp_path / "cache.json"
    path.write_text(json.dumps({"format": CACHE_FORMAT, "entries": {"other": {"x": 1}}}))
    gw_relative(CUBICS)
    InvariantCache.save(path)
    entries = json.loads(path.read_text())["entries"]
    assert entries["other"] == {"x": 1}
    assert "gw_rel" in entries
