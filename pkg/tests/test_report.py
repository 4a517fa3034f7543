import json

import pytest
from hypothesis import given, strategies as st

from septica import checks
from septica.errors import CacheParseError
from septica.report import (
    ConstantCacheEntry, cache_load, cache_lookup, cache_store, default_cache_path, dump_cache,
    emit_report, load_report, parse_cache,
)
from septica.verification import VerificationResult, compare, failure
from septica.precision import make_context


def sample(check_id="a", passed=True):
    return VerificationResult(check_id, "1.0", "1.0", 50 if passed else 3, 50, passed, 0.0125)


class TestResult:
    def test_compare_sets_pass(self):
        c = make_context(30)
        r = compare("x", c.mpf(2), c.mpf(2) + c.mpf(10) ** -25, c, 20)
        assert r.passed and 24 <= r.digits_agreed <= 26
        r = compare("x", c.mpf(2), c.mpf(2) + c.mpf(10) ** -15, c, 20)
        assert not r.passed

    @given(st.integers(0, 80), st.integers(1, 80), st.floats(0, 10))
    def test_round_trip(self, agreed, required, elapsed):
        r = VerificationResult("id", "1", "2", agreed, required, agreed >= required, elapsed)
        back = VerificationResult.from_dict(r.to_dict())
        assert back == r
        assert back.passed == (back.digits_agreed >= back.required_digits)

    def test_failure_record(self):
        r = failure("x", ValueError("bad"), 50)
        assert not r.passed and r.error == "ValueError: bad" and r.error_kind == "ValueError"


class TestEmit:
    def test_empty(self):
        doc = json.loads(emit_report([], "json", 60))
        assert doc == {"version": 1, "digits": 60, "checks": []}
        md = emit_report([], "markdown", 60).decode()
        assert md.count("\n") == 4

    def test_one_row(self):
        doc = json.loads(emit_report([sample()], "json", 60))
        (row,) = doc["checks"]
        assert set(row) == {"id", "pass", "digits_agreed", "required_digits", "lhs", "rhs", "elapsed_ms"}
        assert row["elapsed_ms"] == 12.5
        md = emit_report([sample()], "markdown", 60).decode().splitlines()
        assert md[-1].startswith("| a | PASS | 50 | 50 |")

    def test_sorted_and_untimed(self):
        out = emit_report([sample("b"), sample("a", False)], "json", 60, timing=False)
        doc = json.loads(out)
        assert [c["id"] for c in doc["checks"]] == ["a", "b"]
        assert all(c["elapsed_ms"] is None for c in doc["checks"])
        assert load_report(out)[0].check_id == "a"

    def test_full_suite(self):
        results = checks.run_all(20)
        doc = json.loads(emit_report(results, "json", 20))
        assert len(doc["checks"]) >= 30
        md = emit_report(results, "markdown", 20).decode()
        assert md.count("| PASS |") == len(results)

    def test_bad_format(self):
        with pytest.raises(ValueError):
            emit_report([], "xml")


class TestCache:
    def entries(self):
        return {
            ("thm-e7", 30): ConstantCacheEntry("thm-e7", 30, "1.0", "abc"),
            ("trig-41", 60): ConstantCacheEntry("trig-41", 60, "41.0", "def"),
        }

    def test_round_trip(self, tmp_path):
        path = tmp_path / "c.json"
        cache_store(path, self.entries())
        first = path.read_bytes()
        assert cache_load(path) == self.entries()
        cache_store(path, cache_load(path))
        assert path.read_bytes() == first

    def test_missing_file(self, tmp_path):
        assert cache_load(tmp_path / "none.json") == {}

    def test_corrupt_json(self):
        with pytest.raises(CacheParseError) as info:
            parse_cache('{\n  "entries": [\n    {"id": \n')
        assert info.value.line is not None and "line" in str(info.value)

    def test_bad_entry_points_at_line(self):
        text = dump_cache(self.entries()).replace('"digits": 60', '"digits": "sixty"')
        with pytest.raises(CacheParseError) as info:
            parse_cache(text)
        assert info.value.line == text[: text.index('"trig-41"')].count("\n") + 1

    def test_bad_structure(self):
        with pytest.raises(CacheParseError):
            parse_cache("[]")

    def test_stale_checksum_dropped(self):
        text = dump_cache(self.entries())
        loaded = parse_cache(text, {"thm-e7": "abc", "trig-41": "changed"})
        assert list(loaded) == [("thm-e7", 30)]

    def test_digits_miss(self):
        cache = self.entries()
        assert cache_lookup(cache, "thm-e7", 60, "abc") is None
        assert cache_lookup(cache, "thm-e7", 30, "abc").decimal == "1.0"
        assert cache_lookup(cache, "thm-e7", 30, "zzz") is None

    def test_env_path(self, monkeypatch, tmp_path):
        monkeypatch.setenv("SEPTICA_CACHE", str(tmp_path / "x.json"))
        assert default_cache_path() == tmp_path / "x.json"
        monkeypatch.delenv("SEPTICA_CACHE")
        assert default_cache_path().name == "constants.json"
