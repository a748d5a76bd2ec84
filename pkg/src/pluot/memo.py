"""Dependency-fingerprinted memoization used by layer ``prepare`` phases.

A cache entry is keyed by a caller-supplied string (built-in layers
namespace keys by layer id) and guarded by a content hash of its
dependency list: a lookup with an identical fingerprint never recomputes.
Failed computations are never cached, so transient I/O errors are
retryable on the next frame.
"""

import dataclasses
import hashlib
import struct

import numpy as np


def _feed(h, value):
    # Type tags keep e.g. 1, 1.0, "1" and b"1" from colliding.
    if value is None:
        h.update(b"N")
    elif isinstance(value, bool):
        h.update(b"B1" if value else b"B0")
    elif isinstance(value, int):
        raw = value.to_bytes((value.bit_length() + 8) // 8 + 1, "little", signed=True)
        h.update(b"I" + struct.pack("<I", len(raw)) + raw)
    elif isinstance(value, float):
        h.update(b"F" + struct.pack("<d", value))
    elif isinstance(value, str):
        raw = value.encode("utf-8")
        h.update(b"S" + struct.pack("<I", len(raw)) + raw)
    elif isinstance(value, (bytes, bytearray)):
        h.update(b"Y" + struct.pack("<I", len(value)) + bytes(value))
    elif isinstance(value, np.ndarray):
        h.update(b"A" + str(value.dtype).encode())
        h.update(struct.pack("<I", value.ndim))
        for n in value.shape:
            h.update(struct.pack("<q", n))
        h.update(np.ascontiguousarray(value).tobytes())
    elif isinstance(value, (tuple, list)):
        h.update(b"L" + struct.pack("<I", len(value)))
        for item in value:
            _feed(h, item)
    elif isinstance(value, dict):
        h.update(b"D" + struct.pack("<I", len(value)))
        for key in sorted(value, key=repr):
            _feed(h, key)
            _feed(h, value[key])
    elif dataclasses.is_dataclass(value) and not isinstance(value, type):
        h.update(b"C" + type(value).__qualname__.encode())
        for field in dataclasses.fields(value):
            _feed(h, getattr(value, field.name))
    else:
        raise TypeError(f"cannot fingerprint value of type {type(value)!r}")


def fingerprint(deps):
    """Stable content hash (hex sha256) over a canonical encoding of deps."""
    h = hashlib.sha256()
    _feed(h, list(deps))
    return h.hexdigest()


class MemoCache:
    """Maps cache key -> (deps fingerprint, value); one entry per key."""

    def __init__(self):
        self._entries = {}

    def __len__(self):
        return len(self._entries)

    def __contains__(self, key):
        return key in self._entries

    def clear(self):
        self._entries.clear()


def memoize(cache, key, deps, compute):
    """Return the cached value for ``key`` when the deps fingerprint
    matches; otherwise run ``compute``, store, and return its result.

    ``compute`` is invoked at most once per distinct (key, fingerprint);
    exceptions propagate uncached.
    """
    if not key:
        raise ValueError("memo key must be a non-empty string")
    fp = fingerprint(deps)
    entry = cache._entries.get(key)
    if entry is not None and entry[0] == fp:
        return entry[1]
    value = compute()
    cache._entries[key] = (fp, value)
    return value
