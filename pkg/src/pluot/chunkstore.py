"""Chunked n-dimensional array access over pluggable key-value stores.

Supports a deliberately small Zarr v3 subset: regular chunk grids, the
raw little-endian ``bytes`` codec, C-order layout, and the dtypes the
renderer consumes. Region reads fetch exactly the chunks intersecting the
requested half-open region; every store access lands in the registry's
fetch log, which the memoization and partial-read tests rely on.

On-disk layout: ``<path>/zarr.json`` metadata, chunk payloads at
``<path>/c/<i0>/<i1>/...`` (full-size edge chunks, trailing padding
ignored).
"""

import itertools
import json
import threading
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import CorruptChunkError, NotFoundError, UnsupportedFormatError

DTYPES = {
    "uint8": np.dtype("<u1"),
    "uint16": np.dtype("<u2"),
    "int32": np.dtype("<i4"),
    "float32": np.dtype("<f4"),
    "float64": np.dtype("<f8"),
}


@dataclass(frozen=True)
class ArrayMeta:
    shape: tuple
    chunk_shape: tuple
    dtype: str  # key into DTYPES

    def __post_init__(self):
        if len(self.shape) != len(self.chunk_shape):
            raise ValueError("shape and chunk_shape must have equal rank")
        if any(c < 1 for c in self.chunk_shape):
            raise ValueError("chunk_shape entries must be >= 1")
        if any(s < 0 for s in self.shape):
            raise ValueError("shape entries must be >= 0")

    @property
    def np_dtype(self):
        return DTYPES[self.dtype]

    @property
    def grid_shape(self):
        return tuple(
            -(-s // c) for s, c in zip(self.shape, self.chunk_shape)
        )


@dataclass(frozen=True)
class ArrayHandle:
    store_name: str
    path: str


class MemoryStore:
    """Read-only view over a dict of key -> bytes."""

    def __init__(self, entries=None):
        self._entries = dict(entries or {})

    def get(self, key):
        return self._entries.get(key)


class FileSystemStore:
    """Maps keys to files under a root directory; rejects path escapes."""

    def __init__(self, root):
        self.root = Path(root).resolve()

    def get(self, key):
        path = (self.root / key).resolve()
        if not path.is_relative_to(self.root):
            raise NotFoundError(f"key escapes store root: {key}", key=key)
        if not path.is_file():
            return None
        return path.read_bytes()


class _InstrumentedStore:
    """Wraps a store so each get lands in the registry fetch log."""

    def __init__(self, name, store, log, lock):
        self._name = name
        self._store = store
        self._log = log
        self._lock = lock

    def get(self, key):
        with self._lock:
            self._log.append((self._name, key))
        return self._store.get(key)


class StoreRegistry:
    """Named stores plus shared fetch instrumentation.

    ``fetch_log`` records every (store_name, key) get in order. Chunk
    fetches are the entries whose key is not a metadata document; the
    memo-effectiveness and partial-read-minimality suites assert on them.
    """

    def __init__(self):
        self._stores = {}
        self.fetch_log = []
        self._lock = threading.Lock()

    def register(self, name, store):
        if name in self._stores:
            raise ValueError(f"store {name!r} already registered")
        self._stores[name] = _InstrumentedStore(name, store, self.fetch_log, self._lock)

    def __contains__(self, name):
        return name in self._stores

    def get_store(self, name):
        try:
            return self._stores[name]
        except KeyError:
            raise NotFoundError(f"no store registered under {name!r}", store_name=name)

    def reset_fetch_log(self):
        self.fetch_log.clear()

    def chunk_fetches(self):
        return [
            (store, key)
            for store, key in self.fetch_log
            if not key.rsplit("/", 1)[-1].endswith(".json")
        ]

    @property
    def chunk_fetch_count(self):
        return len(self.chunk_fetches())


def _join(path, key):
    return f"{path}/{key}" if path else key


def _get_required(store, handle, key):
    data = store.get(_join(handle.path, key))
    if data is None:
        raise NotFoundError(
            f"store {handle.store_name!r} has no key {_join(handle.path, key)!r}",
            store_name=handle.store_name,
            key=_join(handle.path, key),
        )
    return data


def open_array(registry, handle):
    """Parse ``<path>/zarr.json`` into an ArrayMeta.

    Only the supported subset is accepted; anything else raises
    UnsupportedFormatError rather than being silently mangled.
    """
    store = registry.get_store(handle.store_name)
    raw = _get_required(store, handle, "zarr.json")
    try:
        doc = json.loads(raw)
    except ValueError as exc:
        raise UnsupportedFormatError(f"zarr.json is not valid JSON: {exc}")
    if doc.get("zarr_format") != 3 or doc.get("node_type") != "array":
        raise UnsupportedFormatError(
            "expected a Zarr v3 array document "
            f"(zarr_format={doc.get('zarr_format')!r}, node_type={doc.get('node_type')!r})"
        )
    dtype = doc.get("data_type")
    if dtype not in DTYPES:
        raise UnsupportedFormatError(f"unsupported data_type {dtype!r}")
    grid = doc.get("chunk_grid", {})
    if grid.get("name") != "regular":
        raise UnsupportedFormatError(f"unsupported chunk grid {grid.get('name')!r}")
    codecs = doc.get("codecs", [])
    if len(codecs) != 1 or codecs[0].get("name") != "bytes":
        names = [c.get("name") for c in codecs]
        raise UnsupportedFormatError(f"unsupported codec chain {names!r}")
    endian = codecs[0].get("configuration", {}).get("endian", "little")
    if endian != "little":
        raise UnsupportedFormatError(f"unsupported endianness {endian!r}")
    key_enc = doc.get("chunk_key_encoding", {"name": "default"})
    if key_enc.get("name") != "default" or key_enc.get("configuration", {}).get(
        "separator", "/"
    ) != "/":
        raise UnsupportedFormatError("only default '/'-separated chunk keys supported")
    return ArrayMeta(
        shape=tuple(int(s) for s in doc["shape"]),
        chunk_shape=tuple(int(c) for c in grid["configuration"]["chunk_shape"]),
        dtype=dtype,
    )


def chunks_for_region(meta, offsets, lengths):
    """Grid coordinates of every chunk intersecting the half-open region."""
    if len(offsets) != len(meta.shape) or len(lengths) != len(meta.shape):
        raise ValueError("offsets/lengths rank mismatch")
    ranges = []
    for off, length, size, chunk in zip(offsets, lengths, meta.shape, meta.chunk_shape):
        if off < 0 or length < 0 or off + length > size:
            raise ValueError(
                f"region [{off}, {off + length}) out of bounds for dimension of size {size}"
            )
        if length == 0:
            return set()
        ranges.append(range(off // chunk, (off + length - 1) // chunk + 1))
    return set(itertools.product(*ranges))


def chunk_key(path, coords):
    return _join(path, "c/" + "/".join(str(c) for c in coords))


def read_region(registry, handle, offsets, lengths, meta=None):
    """Read a dense C-order region, fetching only intersecting chunks.

    Edge chunks are stored full-size; trailing padding is ignored. Missing
    chunks raise NotFoundError naming the chunk key; short payloads raise
    CorruptChunkError.
    """
    if meta is None:
        meta = open_array(registry, handle)
    store = registry.get_store(handle.store_name)
    offsets = tuple(int(o) for o in offsets)
    lengths = tuple(int(n) for n in lengths)
    coords = sorted(chunks_for_region(meta, offsets, lengths))
    dtype = meta.np_dtype
    out = np.zeros(lengths, dtype=dtype)
    chunk_nbytes = int(np.prod(meta.chunk_shape)) * dtype.itemsize
    for coord in coords:
        key = chunk_key(handle.path, coord)
        payload = store.get(key)
        if payload is None:
            raise NotFoundError(
                f"missing chunk {key!r} in store {handle.store_name!r}",
                store_name=handle.store_name,
                key=key,
            )
        if len(payload) < chunk_nbytes:
            raise CorruptChunkError(
                f"chunk {key!r} holds {len(payload)} bytes, expected {chunk_nbytes}"
            )
        chunk = np.frombuffer(payload, dtype=dtype, count=int(np.prod(meta.chunk_shape)))
        chunk = chunk.reshape(meta.chunk_shape)
        out_sl = []
        chunk_sl = []
        for dim, c in enumerate(coord):
            c0 = c * meta.chunk_shape[dim]
            lo = max(offsets[dim], c0)
            hi = min(offsets[dim] + lengths[dim], c0 + meta.chunk_shape[dim])
            out_sl.append(slice(lo - offsets[dim], hi - offsets[dim]))
            chunk_sl.append(slice(lo - c0, hi - c0))
        out[tuple(out_sl)] = chunk[tuple(chunk_sl)]
    return out
