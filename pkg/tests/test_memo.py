import numpy as np
import pytest

from pluot import ArrayHandle, MemoCache, fingerprint, memoize


class TestMemoize:
    def test_cache_hit_runs_compute_once(self, cache):
        calls = []
        for _ in range(2):
            value = memoize(cache, "k", [1, "a"], lambda: calls.append(1) or 42)
        assert value == 42
        assert len(calls) == 1

    def test_changed_deps_recompute(self, cache):
        calls = []
        memoize(cache, "k", [1], lambda: calls.append(1) or "first")
        value = memoize(cache, "k", [2], lambda: calls.append(1) or "second")
        assert value == "second"
        assert len(calls) == 2

    def test_distinct_keys_are_isolated(self, cache):
        calls = []
        memoize(cache, "a", [1], lambda: calls.append(1) or "a")
        memoize(cache, "b", [1], lambda: calls.append(1) or "b")
        assert len(calls) == 2

    def test_failures_are_not_cached(self, cache):
        attempts = []

        def flaky():
            attempts.append(1)
            if len(attempts) == 1:
                raise OSError("transient")
            return "ok"

        with pytest.raises(OSError):
            memoize(cache, "k", [1], flaky)
        assert memoize(cache, "k", [1], flaky) == "ok"
        assert len(attempts) == 2

    def test_empty_key_rejected(self, cache):
        with pytest.raises(ValueError):
            memoize(cache, "", [], lambda: 1)

    def test_stale_entry_replaced(self, cache):
        memoize(cache, "k", [1], lambda: "old")
        memoize(cache, "k", [2], lambda: "new")
        # going back to the old deps recomputes: one entry per key
        calls = []
        assert memoize(cache, "k", [1], lambda: calls.append(1) or "old2") == "old2"
        assert calls


class TestFingerprint:
    def test_stable_across_calls(self):
        deps = [1, 2.5, "x", b"y", None, True, [1, (2, 3)], {"a": 1}]
        assert fingerprint(deps) == fingerprint(deps)

    def test_type_tags_distinguish_lookalikes(self):
        values = [[1], [1.0], ["1"], [b"1"], [True]]
        prints = {fingerprint(v) for v in values}
        assert len(prints) == len(values)

    def test_arrays_hash_content_and_dtype(self):
        a = np.arange(4, dtype=np.float32)
        b = np.arange(4, dtype=np.float64)
        assert fingerprint([a]) == fingerprint([a.copy()])
        assert fingerprint([a]) != fingerprint([b])

    def test_dataclasses_hash_fields(self):
        h1 = ArrayHandle("s", "p")
        h2 = ArrayHandle("s", "q")
        assert fingerprint([h1]) == fingerprint([ArrayHandle("s", "p")])
        assert fingerprint([h1]) != fingerprint([h2])

    def test_dict_order_does_not_matter(self):
        assert fingerprint([{"a": 1, "b": 2}]) == fingerprint([{"b": 2, "a": 1}])

    def test_at_least_64_bits(self):
        assert len(fingerprint([1])) * 4 >= 64

    def test_unfingerprintable_type_raises(self):
        with pytest.raises(TypeError):
            fingerprint([object()])
