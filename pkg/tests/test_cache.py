"""
Tests for the on-disk admissibility report cache.
"""

from gabidulin.cache import AdmissibilityCache, CacheManager, delete_default_cache, get_default_cache
from gabidulin.formats import read_spec, spec_digest
from gabidulin.models import AdmissibilityReport

REPORT = AdmissibilityReport(
    square_free=True,
    fixed_field_is_k=True,
    full_order=True,
    order=4,
    degree=4,
    char_poly="Y^4 - 1",
)


def test_put_and_get(tmp_path):
    cache = AdmissibilityCache(tmp_path / "cache")
    digest = spec_digest(read_spec("preset:cyclotomic-5"))
    assert cache.get(digest) is None
    cache.put(digest, REPORT)
    assert cache.get(digest) == REPORT
    assert len(cache) == 1
    cache.close()


def test_entries_survive_reopening(tmp_path):
    first = AdmissibilityCache(tmp_path)
    first.put("abc", REPORT)
    first.close()
    second = AdmissibilityCache(tmp_path)
    assert second.get("abc") == REPORT
    second.close()


def test_malformed_entry_is_a_miss(tmp_path):
    cache = AdmissibilityCache(tmp_path)
    cache._cache.set("broken", {"square_free": True})
    assert cache.get("broken") is None
    cache.close()


def test_clear_reports_removed_count(tmp_path):
    cache = AdmissibilityCache(tmp_path)
    cache.put("a", REPORT)
    cache.put("b", REPORT)
    assert cache.clear() == 2
    assert len(cache) == 0
    cache.close()


def test_stats(tmp_path):
    cache = AdmissibilityCache(tmp_path)
    cache.put("a", REPORT)
    cache.get("a")
    cache.get("missing")
    stats = cache.get_stats()
    assert stats["entries"] == 1
    assert stats["hits"] == 1
    assert stats["misses"] == 1
    assert stats["hit_rate"] == 50.0
    cache.close()


def test_default_cache_is_shared(tmp_path, fresh_cache):
    first = get_default_cache(tmp_path / "default")
    assert get_default_cache() is first
    assert CacheManager.get_instance().get_default_cache() is first
    assert delete_default_cache()
    assert not (tmp_path / "default").exists()
    assert not delete_default_cache()
